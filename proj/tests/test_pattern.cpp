#include <doctest.h>

#include "permsim/graphs.hpp"
#include "permsim/pattern.hpp"

using namespace permsim;

namespace {

SymbolMatrix mat(std::initializer_list<std::initializer_list<SymbolId>> rows) {
  const Index n = static_cast<Index>(rows.size());
  SymbolMatrix m(n, n);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (SymbolId v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

// Direct evaluation of the definition: representative location of (i,j) is
// the lexicographically first location with an equal entry.
Location brute_representative(const SymbolMatrix& m, Index i, Index j) {
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c)
      if (m(r, c) == m(i, j)) return {r, c};
  return {i, j};
}

}  // namespace

TEST_CASE("pattern of constant matrix has one cell") {
  const Pattern p = pattern_of<SymbolId>(mat({{1, 1}, {1, 1}}));
  CHECK(p.cell_count() == 1);
  CHECK(p.representatives[0] == Location{0, 0});
}

TEST_CASE("two-symbol checkerboard splits into diagonal and off-diagonal cells") {
  const Pattern p = pattern_of<SymbolId>(mat({{2, 1}, {1, 2}}));
  REQUIRE(p.cell_count() == 2);
  CHECK(p.representatives[0] == Location{0, 0});
  CHECK(p.representatives[1] == Location{0, 1});
  CHECK(p.cell_of(1, 1) == 0);
  CHECK(p.cell_of(1, 0) == 1);
}

TEST_CASE("all-distinct matrix yields singleton cells in lexicographic order") {
  const Pattern p = pattern_of<SymbolId>(mat({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}));
  REQUIRE(p.cell_count() == 9);
  Index k = 0;
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 3; ++j) CHECK(p.representatives[static_cast<std::size_t>(k++)] == Location{i, j});
}

TEST_CASE("pattern difference is zero exactly on matching representatives") {
  const Pattern p = pattern_of<SymbolId>(mat({{1, 2}, {3, 4}}));
  CHECK(pattern_difference(p, p).isZero());

  const Pattern singleton = pattern_of<SymbolId>(mat({{1, 2}, {3, 4}}));
  const Pattern one_cell = pattern_of<SymbolId>(mat({{5, 5}, {5, 5}}));
  const Eigen::MatrixXi d = pattern_difference(singleton, one_cell);
  CHECK(d(0, 0) == 0);  // only the first representative coincides
  CHECK(d(0, 1) == 1);
  CHECK(d(1, 0) == 1);
  CHECK(d(1, 1) == 1);
}

TEST_CASE("pattern difference matches brute recomputation on random matrices") {
  Rng rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    const SymbolMatrix a = random_symbol_matrix(4, 3, rng);
    const SymbolMatrix b = random_symbol_matrix(4, 3, rng);
    const Pattern pa = pattern_of<SymbolId>(a);
    const Pattern pb = pattern_of<SymbolId>(b);
    const Eigen::MatrixXi d = pattern_difference(pa, pb);
    for (Index i = 0; i < 4; ++i)
      for (Index j = 0; j < 4; ++j)
        CHECK(d(i, j) == (brute_representative(a, i, j) == brute_representative(b, i, j) ? 0 : 1));
  }
}

TEST_CASE("refines: reflexive, singleton refines everything, incomparable pairs refine neither way") {
  const Pattern coarse = pattern_of<SymbolId>(mat({{1, 1, 2}, {1, 1, 2}, {2, 2, 1}}));
  const Pattern fine = pattern_of<SymbolId>(mat({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}));
  CHECK(refines(coarse, coarse));
  CHECK(refines(fine, coarse));
  CHECK_FALSE(refines(coarse, fine));

  // Crossing cells: rows-partition vs columns-partition.
  const Pattern rows = pattern_of<SymbolId>(mat({{1, 1, 1}, {2, 2, 2}, {3, 3, 3}}));
  const Pattern cols = pattern_of<SymbolId>(mat({{1, 2, 3}, {1, 2, 3}, {1, 2, 3}}));
  CHECK_FALSE(refines(rows, cols));
  CHECK_FALSE(refines(cols, rows));
}

TEST_CASE("refines is a partial order on random patterns") {
  Rng rng(11);
  std::vector<Pattern> pats;
  for (int t = 0; t < 12; ++t) pats.push_back(pattern_of<SymbolId>(random_symbol_matrix(3, 1 + t % 4, rng)));
  for (const auto& p : pats) CHECK(refines(p, p));
  for (const auto& p : pats)
    for (const auto& q : pats) {
      if (refines(p, q) && refines(q, p)) CHECK(p == q);  // antisymmetry
      for (const auto& r : pats)
        if (refines(p, q) && refines(q, r)) CHECK(refines(p, r));  // transitivity
    }
}

TEST_CASE("pattern equality tracks cell structure, not symbol values") {
  CHECK(pattern_of<SymbolId>(mat({{5, 9}, {9, 5}})) == pattern_of<SymbolId>(mat({{1, 2}, {2, 1}})));
  CHECK(pattern_of<SymbolId>(mat({{5, 9}, {9, 5}})) != pattern_of<SymbolId>(mat({{1, 2}, {3, 1}})));
}
