#include "permsim/substitute.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace permsim {
namespace {

void require_pair(Index ar, Index ac, Index br, Index bc) {
  if (ar != ac || br != bc) throw std::invalid_argument("substitution: inputs must be square");
  if (ar != br) throw std::invalid_argument("substitution: dimension mismatch");
}

}  // namespace

bool is_diag_distinct(const SymbolMatrix& m) {
  std::set<SymbolId> diag, off;
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) (i == j ? diag : off).insert(m(i, j));
  for (SymbolId d : diag)
    if (off.count(d)) return false;
  return true;
}

TokenSubstitution consistent_substitute(const TokenGrid& a, const TokenGrid& b) {
  require_pair(a.rows(), a.cols(), b.rows(), b.cols());
  std::map<ValueToken, SymbolId> ids;
  for (const TokenGrid* g : {&a, &b})
    for (Index i = 0; i < g->rows(); ++i)
      for (Index j = 0; j < g->cols(); ++j) ids.emplace((*g)(i, j), 0);
  TokenSubstitution out;
  SymbolId next = 1;
  for (auto& [tok, id] : ids) {
    id = next++;
    out.alphabet.push_back(tok);
  }
  const Index n = a.rows();
  out.a.resize(n, n);
  out.b.resize(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      out.a(i, j) = ids.at(a(i, j));
      out.b(i, j) = ids.at(b(i, j));
    }
  return out;
}

SymbolMatrix consistent_substitute(const TokenGrid& a) {
  return consistent_substitute(a, a).a;
}

std::pair<SymbolMatrix, SymbolMatrix> consistent_substitute(const SymbolMatrix& a, const SymbolMatrix& b) {
  require_pair(a.rows(), a.cols(), b.rows(), b.cols());
  std::map<SymbolId, SymbolId> ids;
  for (const SymbolMatrix* g : {&a, &b})
    for (Index i = 0; i < g->rows(); ++i)
      for (Index j = 0; j < g->cols(); ++j) ids.emplace((*g)(i, j), 0);
  SymbolId next = 1;
  for (auto& [v, id] : ids) id = next++;
  SymbolMatrix oa(a.rows(), a.cols()), ob(b.rows(), b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) {
      oa(i, j) = ids.at(a(i, j));
      ob(i, j) = ids.at(b(i, j));
    }
  return {std::move(oa), std::move(ob)};
}

SymbolMatrix consistent_substitute(const SymbolMatrix& a) {
  return consistent_substitute(a, a).first;
}

std::pair<SymbolMatrix, SymbolMatrix> split_substitute(const SymbolMatrix& a, const SymbolMatrix& b) {
  require_pair(a.rows(), a.cols(), b.rows(), b.cols());
  std::map<SymbolId, SymbolId> off_ids, diag_ids;
  for (const SymbolMatrix* g : {&a, &b})
    for (Index i = 0; i < g->rows(); ++i)
      for (Index j = 0; j < g->cols(); ++j) (i == j ? diag_ids : off_ids).emplace((*g)(i, j), 0);
  SymbolId next = 1;
  for (auto& [v, id] : off_ids) id = next++;
  for (auto& [v, id] : diag_ids) id = next++;
  SymbolMatrix oa(a.rows(), a.cols()), ob(b.rows(), b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) {
      oa(i, j) = (i == j) ? diag_ids.at(a(i, j)) : off_ids.at(a(i, j));
      ob(i, j) = (i == j) ? diag_ids.at(b(i, j)) : off_ids.at(b(i, j));
    }
  return {std::move(oa), std::move(ob)};
}

}  // namespace permsim
