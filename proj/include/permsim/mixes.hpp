#pragma once

#include "permsim/matrix.hpp"

#include <algorithm>
#include <vector>

namespace permsim {

/// Mixes are multisets of matrix entries in canonical sorted form; all of
/// them are invariant under symmetric permutation. Two mixes are equal iff
/// their sorted forms are equal.
template <class Scalar>
using Mix = std::vector<Scalar>;
template <class Scalar>
using NestedMix = std::vector<std::vector<Scalar>>;

template <class Scalar>
Mix<Scalar> diag_mix(const DenseMatrix<Scalar>& m) {
  Mix<Scalar> out;
  out.reserve(static_cast<std::size_t>(m.rows()));
  for (Index i = 0; i < m.rows(); ++i) out.push_back(m(i, i));
  std::sort(out.begin(), out.end());
  return out;
}

template <class Scalar>
Mix<Scalar> full_mix(const DenseMatrix<Scalar>& m) {
  Mix<Scalar> out;
  out.reserve(static_cast<std::size_t>(m.size()));
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) out.push_back(m(i, j));
  std::sort(out.begin(), out.end());
  return out;
}

template <class Scalar>
NestedMix<Scalar> col_mix(const DenseMatrix<Scalar>& m) {
  NestedMix<Scalar> out;
  out.reserve(static_cast<std::size_t>(m.cols()));
  for (Index j = 0; j < m.cols(); ++j) {
    std::vector<Scalar> col;
    col.reserve(static_cast<std::size_t>(m.rows()));
    for (Index i = 0; i < m.rows(); ++i) col.push_back(m(i, j));
    std::sort(col.begin(), col.end());
    out.push_back(std::move(col));
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <class Scalar>
NestedMix<Scalar> row_mix(const DenseMatrix<Scalar>& m) {
  NestedMix<Scalar> out;
  out.reserve(static_cast<std::size_t>(m.rows()));
  for (Index i = 0; i < m.rows(); ++i) {
    std::vector<Scalar> row;
    row.reserve(static_cast<std::size_t>(m.cols()));
    for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    std::sort(row.begin(), row.end());
    out.push_back(std::move(row));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Order-independent 64-bit digest of a multiset of ids (sums of per-element
/// hashes, so symmetric permutations leave it unchanged).
inline std::uint64_t mix_digest(const Mix<SymbolId>& mix) {
  std::uint64_t h = 0;
  for (SymbolId v : mix) h += splitmix64(static_cast<std::uint64_t>(v));
  return h;
}

inline std::uint64_t mix_digest(const NestedMix<SymbolId>& mix) {
  std::uint64_t h = 0;
  for (const auto& inner : mix) {
    std::uint64_t g = 0x6a09e667f3bcc909ull;
    for (SymbolId v : inner) g = splitmix64(g ^ splitmix64(static_cast<std::uint64_t>(v)));
    h += g;
  }
  return h;
}

}  // namespace permsim
