#pragma once

#include "permsim/matrix.hpp"
#include "permsim/token.hpp"

#include <utility>
#include <vector>

namespace permsim {

/// Consistent symbol substitution over a pair of token arrays: identical
/// tokens (across both arrays) map to identical ids, distinct tokens to
/// distinct ids, and ids 1..k follow the deterministic total order over the
/// union of distinct tokens. Patterns are preserved.
struct TokenSubstitution {
  SymbolMatrix a, b;
  std::vector<ValueToken> alphabet;  // alphabet[id-1] is the token for id
};
TokenSubstitution consistent_substitute(const TokenGrid& a, const TokenGrid& b);

SymbolMatrix consistent_substitute(const TokenGrid& a);

/// Same contract for integer matrices: ids 1..k assigned by ascending value
/// over the union of distinct entries. The remap is monotone, so any
/// diagonal/off-diagonal value separation present in the inputs survives.
std::pair<SymbolMatrix, SymbolMatrix> consistent_substitute(const SymbolMatrix& a, const SymbolMatrix& b);
SymbolMatrix consistent_substitute(const SymbolMatrix& a);

/// Position-class-aware variant used by the numeric engine: the union of
/// off-diagonal values gets 1..n1 and the union of diagonal values gets
/// n1+1..n, each in ascending value order. Diagonal occurrences are thereby
/// always separated from off-diagonal occurrences of the same value, which is
/// itself a permutation-invariant refinement.
std::pair<SymbolMatrix, SymbolMatrix> split_substitute(const SymbolMatrix& a, const SymbolMatrix& b);

}  // namespace permsim
