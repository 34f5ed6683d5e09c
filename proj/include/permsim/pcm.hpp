#pragma once

#include "permsim/matrix.hpp"

namespace permsim {

/// M + gamma*J + beta*I, entrywise on symbol ids.
template <class Derived>
SymbolMatrix shift_and_translate(const Eigen::MatrixBase<Derived>& m, SymbolId beta, SymbolId gamma) {
  if (m.rows() != m.cols()) throw std::invalid_argument("shift_and_translate: matrix not square");
  SymbolMatrix out = m.template cast<SymbolId>();
  out.array() += gamma;
  out.diagonal().array() += beta;
  return out;
}

/// Color matrix M + m^2 I + 2 J of a substituted matrix with entries in
/// 1..m^2. All entries end up >= 3 and the diagonal symbols are strictly
/// greater than every off-diagonal symbol.
SymbolMatrix color_matrix(const SymbolMatrix& m);

/// Block matrix [[A_C, 3J], [3J, B_C]] for color matrices built with a shared
/// consistent substitution.
SymbolMatrix direct_sum_color(const SymbolMatrix& ac, const SymbolMatrix& bc);

/// The m^2 x m^2 edge structure R shared by every PCM of source dimension m:
/// weight-1 column edges and weight-2 row edges of the rook's graph under
/// column-major vertex ordering (both weights 1 when equal_weights is set).
SymbolMatrix pcm_edge_structure(Index m, bool equal_weights = false);

/// PCM(C) = D + R with D the column-major reshape of the color matrix on the
/// diagonal.
SymbolMatrix build_pcm(const SymbolMatrix& color, bool equal_weights = false);

}  // namespace permsim
