#include "permsim/pcm.hpp"

#include <unsupported/Eigen/KroneckerProduct>

namespace permsim {

SymbolMatrix color_matrix(const SymbolMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("color_matrix: matrix not square");
  const Index dim = m.rows();
  const SymbolId cap = static_cast<SymbolId>(dim) * static_cast<SymbolId>(dim);
  if (m.minCoeff() < 1 || m.maxCoeff() > cap)
    throw std::invalid_argument("color_matrix: entries must be in 1..m^2; re-substitute first");
  return shift_and_translate(m, cap, 2);
}

SymbolMatrix direct_sum_color(const SymbolMatrix& ac, const SymbolMatrix& bc) {
  if (ac.rows() != ac.cols() || bc.rows() != bc.cols()) throw std::invalid_argument("direct_sum_color: inputs not square");
  if (ac.rows() != bc.rows()) throw std::invalid_argument("direct_sum_color: dimension mismatch");
  const Index m = ac.rows();
  SymbolMatrix out(2 * m, 2 * m);
  out.setConstant(3);
  out.topLeftCorner(m, m) = ac;
  out.bottomRightCorner(m, m) = bc;
  return out;
}

SymbolMatrix pcm_edge_structure(Index m, bool equal_weights) {
  const SymbolMatrix eye = SymbolMatrix::Identity(m, m);
  const SymbolMatrix ring = SymbolMatrix::Ones(m, m) - eye;  // J - I
  const SymbolId row_weight = equal_weights ? 1 : 2;
  return Eigen::kroneckerProduct(eye, ring) + Eigen::kroneckerProduct(ring, (row_weight * eye).eval()).eval();
}

SymbolMatrix build_pcm(const SymbolMatrix& color, bool equal_weights) {
  if (color.rows() != color.cols()) throw std::invalid_argument("build_pcm: matrix not square");
  SymbolMatrix pcm = pcm_edge_structure(color.rows(), equal_weights);
  pcm.diagonal() = color.reshaped();  // column-major vertex ordering
  return pcm;
}

}  // namespace permsim
