#include "permsim/pattern.hpp"

#include <unordered_map>

namespace permsim {

Pattern pattern_from_labels(const DenseMatrix<std::int64_t>& labels) {
  return pattern_of<std::int64_t>(labels);
}

Eigen::MatrixXi pattern_difference(const Pattern& p1, const Pattern& p2) {
  if (p1.n != p2.n) throw std::invalid_argument("pattern_difference: dimension mismatch");
  Eigen::MatrixXi out(p1.n, p1.n);
  for (Index i = 0; i < p1.n; ++i)
    for (Index j = 0; j < p1.n; ++j) {
      const Location r1 = p1.representatives[static_cast<std::size_t>(p1.cell_of(i, j))];
      const Location r2 = p2.representatives[static_cast<std::size_t>(p2.cell_of(i, j))];
      out(i, j) = (r1 == r2) ? 0 : 1;
    }
  return out;
}

bool refines(const Pattern& p1, const Pattern& p2) {
  if (p1.n != p2.n) throw std::invalid_argument("refines: dimension mismatch");
  // Every p1 cell must land in a single p2 cell.
  std::vector<std::int32_t> target(static_cast<std::size_t>(p1.cell_count()), -1);
  for (Index i = 0; i < p1.n; ++i)
    for (Index j = 0; j < p1.n; ++j) {
      auto& t = target[static_cast<std::size_t>(p1.cell_of(i, j))];
      if (t < 0)
        t = p2.cell_of(i, j);
      else if (t != p2.cell_of(i, j))
        return false;
    }
  return true;
}

}  // namespace permsim
