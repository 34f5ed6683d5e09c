#pragma once

#include "permsim/matrix.hpp"

#include <map>
#include <utility>
#include <vector>

namespace permsim {

using Location = std::pair<Index, Index>;

/// Partition of the n*n locations by entry equality. Cells are ordered by the
/// lexicographic order of their representative (first) locations, and cell_of
/// stores the cell index of every location under that canonical ordering.
struct Pattern {
  Index n = 0;
  Eigen::Matrix<std::int32_t, Eigen::Dynamic, Eigen::Dynamic> cell_of;
  std::vector<Location> representatives;

  Index cell_count() const { return static_cast<Index>(representatives.size()); }

  friend bool operator==(const Pattern& a, const Pattern& b) { return a.n == b.n && a.cell_of == b.cell_of; }
  friend bool operator!=(const Pattern& a, const Pattern& b) { return !(a == b); }
};

/// Pattern of a square matrix: locations share a cell iff entries are equal.
/// Works for any scalar with a strict weak order.
template <class Scalar>
Pattern pattern_of(const DenseMatrix<Scalar>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("pattern_of: matrix not square");
  Pattern p;
  p.n = m.rows();
  p.cell_of.resize(p.n, p.n);
  std::map<Scalar, std::int32_t> cell;
  for (Index i = 0; i < p.n; ++i) {
    for (Index j = 0; j < p.n; ++j) {
      auto [it, inserted] = cell.try_emplace(m(i, j), static_cast<std::int32_t>(p.representatives.size()));
      if (inserted) p.representatives.emplace_back(i, j);
      p.cell_of(i, j) = it->second;
    }
  }
  return p;
}

/// Builds the canonical Pattern from an arbitrary location labelling (e.g.
/// union-find roots): locations share a cell iff labels are equal.
Pattern pattern_from_labels(const DenseMatrix<std::int64_t>& labels);

/// 0 where the representative locations assigned to (i,j) agree, 1 otherwise.
Eigen::MatrixXi pattern_difference(const Pattern& p1, const Pattern& p2);

/// True iff every cell of p1 is contained in some cell of p2.
bool refines(const Pattern& p1, const Pattern& p2);

/// 1-D analogue for the diagonal: indices grouped by equal diagonal entries,
/// labelled by first occurrence.
template <class Scalar>
std::vector<std::int32_t> diagonal_classes(const DenseMatrix<Scalar>& m) {
  std::vector<std::int32_t> out(static_cast<std::size_t>(m.rows()));
  std::map<Scalar, std::int32_t> cls;
  for (Index i = 0; i < m.rows(); ++i) {
    auto [it, inserted] = cls.try_emplace(m(i, i), static_cast<std::int32_t>(cls.size()));
    out[static_cast<std::size_t>(i)] = it->second;
  }
  return out;
}

}  // namespace permsim
