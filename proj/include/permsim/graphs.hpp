#pragma once

#include "permsim/matrix.hpp"

#include <random>
#include <vector>

namespace permsim {

using Rng = std::mt19937_64;

/// All 2^(n(n-1)/2) labelled simple graphs on n vertices as 0/1 adjacency
/// matrices.
std::vector<SymbolMatrix> all_graphs(Index n);

/// One representative per isomorphism class (canonical form by minimum over
/// all vertex permutations).
std::vector<SymbolMatrix> nonisomorphic_graphs(Index n);

SymbolMatrix random_graph(Index n, double p, Rng& rng);
SymbolMatrix random_symbol_matrix(Index n, SymbolId max_symbol, Rng& rng, bool symmetric = false);
SymbolMatrix random_diag_distinct_symmetric(Index n, Index offdiag_symbols, Index diag_symbols, Rng& rng);
PermVector random_perm(Index n, Rng& rng);

/// Petersen graph as the Kneser graph K(5,2): vertices are the 2-subsets of
/// {0..4}, adjacent iff disjoint.
SymbolMatrix petersen_graph();
/// The 120 automorphisms of the Petersen graph induced by S_5 acting on
/// 2-subsets.
std::vector<PermVector> petersen_automorphisms();

/// 4x4 rook's graph and the Shrikhande graph: the classic non-isomorphic
/// strongly regular pair srg(16, 6, 2, 2).
SymbolMatrix rook_graph_4x4();
SymbolMatrix shrikhande_graph();

}  // namespace permsim
