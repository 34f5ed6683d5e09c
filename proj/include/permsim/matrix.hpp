#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace permsim {

using Index = Eigen::Index;
using SymbolId = std::int64_t;

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// The universal working representation: a square array of positive symbol ids.
using SymbolMatrix = DenseMatrix<SymbolId>;
using SymbolVector = Eigen::Matrix<SymbolId, Eigen::Dynamic, 1>;

/// A bijection on 0..m-1. perm[i] is the source index moved to slot i, so
/// applying it symmetrically to M yields M(perm[i], perm[j]) at (i, j).
using PermVector = std::vector<Index>;

inline PermVector identity_perm(Index m) {
  PermVector p(static_cast<std::size_t>(m));
  std::iota(p.begin(), p.end(), Index{0});
  return p;
}

inline bool is_perm(const PermVector& p) {
  std::vector<char> seen(p.size(), 0);
  for (Index v : p) {
    if (v < 0 || v >= static_cast<Index>(p.size()) || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return true;
}

/// M(p, p): the symmetric permutation gathering rows and columns through p.
template <class Scalar>
DenseMatrix<Scalar> symmetric_permute(const DenseMatrix<Scalar>& m, const PermVector& p) {
  const Index n = m.rows();
  if (static_cast<Index>(p.size()) != n) throw std::invalid_argument("symmetric_permute: size mismatch");
  DenseMatrix<Scalar> out(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) out(i, j) = m(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]);
  return out;
}

template <class Derived>
bool is_square(const Eigen::MatrixBase<Derived>& m) {
  return m.rows() == m.cols();
}

template <class Derived>
bool is_symmetric(const Eigen::MatrixBase<Derived>& m) {
  if (!is_square(m)) return false;
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

/// True when the set of diagonal symbols is disjoint from the set of
/// off-diagonal symbols.
bool is_diag_distinct(const SymbolMatrix& m);

/// Raised when an internal invariant the algorithms guarantee is observed to
/// fail (these are reportable events, not input errors).
struct internal_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace permsim
