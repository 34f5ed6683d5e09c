#pragma once

#include "permsim/strings.hpp"

#include <optional>
#include <span>
#include <utility>

namespace permsim {

/// Canonical inner product string of row x col. The term at k = i takes its
/// first factor from the row's diagonal symbol and the term at k = j its
/// second factor from the column's diagonal symbol; those terms form
/// diag_part (a single (D_ii, D_ii) term when i == j) and the remaining terms
/// are sorted into offdiag_part. Pass a negative index to mark a vector as
/// carrying no diagonal factor.
CanonicalString canonical_string(std::span<const SymbolId> row, std::span<const SymbolId> col, Index i, Index j);

/// Symbolic squaring. Input must be symmetric with diagonal symbols distinct
/// from off-diagonal symbols; entry (i, j) of the output is the lessor of the
/// canonical strings at (i, j) and (j, i).
StringArray sym_sqr(const SymbolMatrix& m);

/// Squares both matrices into one shared pool with a shared dense alphabet,
/// so string identities are comparable across the pair.
std::pair<StringArray, StringArray> sym_sqr_pair(const SymbolMatrix& a, const SymbolMatrix& b);

/// Symbolic diagonal sandwich: entry (i, j) is the three-factor string
/// d1(i) * m(i, j) * d2(j). No symmetrization and no term sorting.
StringArray sym_mult(const SymbolVector& d1, const SymbolMatrix& m, const SymbolVector& d2);
std::pair<StringArray, StringArray> sym_mult_pair(const SymbolVector& da1, const SymbolMatrix& a, const SymbolVector& da2,
                                                  const SymbolVector& db1, const SymbolMatrix& b, const SymbolVector& db2);

/// Diagonal id offset for symbol substitution on string arrays: plain
/// assigns n1+1..n to diagonal strings, spd assigns dim^2*n1+1.. so the
/// result is diagonally dominant (hence SPD) by construction.
enum class DiagOffset { plain, spd };

/// Permutation-independent substitution: the n1 distinct off-diagonal
/// strings, lexicographically ordered, get ids 1..n1; the n2 distinct
/// diagonal strings get base+1..base+n2.
SymbolMatrix sym_sub(const StringArray& s, DiagOffset mode);

/// Consistent substitution across a pair sharing one pool: the orderings run
/// over the union of distinct strings of both arrays.
std::pair<SymbolMatrix, SymbolMatrix> sym_sub_pair(const StringArray& a, const StringArray& b, DiagOffset mode);

}  // namespace permsim
