#pragma once

#include "permsim/pattern.hpp"
#include "permsim/primes.hpp"

#include <optional>

namespace permsim {

struct BrutePsim {
  bool psim = false;
  std::optional<PermVector> witness;
};

/// Exhaustive search (with prefix pruning) over all m! permutations for a
/// witness of p-similarity. Ground truth at desk scale.
BrutePsim brute_psim(const SymbolMatrix& a, const SymbolMatrix& b, Index cap = 9);

/// All vertex permutations p with M(p,p) == M.
std::vector<PermVector> automorphisms(const SymbolMatrix& m, Index cap = 10);

/// Orbit partition of the n^2 locations under the automorphism group: the
/// finest partition invariant under every automorphism.
Pattern orbit_pattern(const SymbolMatrix& m, Index cap = 9);

/// Orbit partition of PCM locations obtained by enumerating the base
/// matrix's automorphisms and lifting each to P (x) P under column-major
/// vertex ordering. Feasible where direct enumeration at PCM size is not.
Pattern lifted_pcm_orbit_pattern(const SymbolMatrix& base, Index cap = 10, bool equal_edge_weights = false);

/// Stable pattern of the stack I, M, M^2, ... of exact integer powers:
/// per-location column strings, adding layers until the pattern stops
/// refining (at most m layers).
Pattern espp_pattern(const SymbolMatrix& m, Index cap = 30);

}  // namespace permsim
