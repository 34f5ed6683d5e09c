#pragma once

#include "permsim/eigen_gmp.hpp"
#include "permsim/pattern.hpp"
#include "permsim/primes.hpp"
#include "permsim/wspm_config.hpp"

#include <optional>

namespace permsim {

using BigMatrix = DenseMatrix<BigInt>;

/// Widely-spaced primes matrix: same pattern as the source, off-diagonal
/// symbols p_1..p_n1 and diagonal symbols p_n1+1..p_n, where p_1 > m*k^2 and
/// p_i > m*p_{i-1}^2. Symmetric and strictly diagonally dominant.
struct WspMatrix {
  BigMatrix w;
  std::vector<BigInt> primes;
  Index n1 = 0, n2 = 0;
};

/// Caps for the exact widely-spaced-primes paths: the prime chains grow
/// doubly exponentially, so these exist to validate the theorems at desk
/// scale, not to scale up.
struct WspmLimits {
  Index dim_cap = 6;
  Index symbol_cap = 8;
};

/// start_above forces p_1 > start_above as well (used for the disjoint second
/// alphabet of the pair construction).
WspMatrix build_wspm(const SymbolMatrix& m, std::uint64_t k = 1, const BigInt& start_above = 0,
                     const WspmLimits& limits = {});

BigMatrix big_product(const BigMatrix& a, const BigMatrix& b);

/// Pattern of the exact integer product W*W; refines the pattern of W and
/// refines the diagonal exactly as symbolic squaring does.
Pattern wspm_square_refine(const WspMatrix& w);

/// Pattern of min(W1*W2, (W1*W2)^T) for two widely-spaced alphabets with the
/// second starting above m*p_n^2; equals the pattern of symbolic squaring.
Pattern wspm_pair_refine(const SymbolMatrix& m, const WspmLimits& limits = {});

/// One numeric-primes refinement step: symbols to ordinary primes, exact
/// fixed-width square, values grouped back into a pattern. Empty on
/// overflow past the ceiling.
std::optional<Pattern> primes_heuristic_refine(const SymbolMatrix& m, const PrimesHeuristicConfig& cfg = {});

/// Numeric square of a prime-valued matrix with the configured width and
/// ceiling; empty on overflow.
std::optional<SymbolMatrix> checked_prime_square(const SymbolMatrix& w, const PrimesHeuristicConfig& cfg);

/// Maps ids to ordinary primes preserving order (diagonal ids stay above
/// off-diagonal ids because the input's diagonal ids are larger).
SymbolMatrix map_to_primes(const SymbolMatrix& m);

struct HeuristicTrace {
  std::vector<Index> symbol_counts;
  Index stable_iteration = 0;
  Pattern stable_pattern;
  bool inconclusive = false;
};

/// Iterates numeric squaring with per-iteration substitution until the
/// pattern stops changing (or the ceiling halts the process).
HeuristicTrace primes_heuristic_refine_to_stable(const SymbolMatrix& m, const PrimesHeuristicConfig& cfg = {},
                                                 Index max_iters = 0);

}  // namespace permsim
