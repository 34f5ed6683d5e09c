#include "permsim/graphs.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace permsim {
namespace {

std::vector<PermVector> all_perms(Index n) {
  PermVector p = identity_perm(n);
  std::vector<PermVector> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::uint64_t edge_mask(const SymbolMatrix& g) {
  std::uint64_t mask = 0;
  int bit = 0;
  for (Index i = 0; i < g.rows(); ++i)
    for (Index j = i + 1; j < g.rows(); ++j, ++bit)
      if (g(i, j)) mask |= (1ull << bit);
  return mask;
}

}  // namespace

std::vector<SymbolMatrix> all_graphs(Index n) {
  const Index edges = n * (n - 1) / 2;
  if (edges > 20) throw std::invalid_argument("all_graphs: too many vertices to enumerate");
  std::vector<SymbolMatrix> out;
  out.reserve(1ull << edges);
  for (std::uint64_t mask = 0; mask < (1ull << edges); ++mask) {
    SymbolMatrix g = SymbolMatrix::Zero(n, n);
    int bit = 0;
    for (Index i = 0; i < n; ++i)
      for (Index j = i + 1; j < n; ++j, ++bit)
        if (mask & (1ull << bit)) g(i, j) = g(j, i) = 1;
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<SymbolMatrix> nonisomorphic_graphs(Index n) {
  const auto perms = all_perms(n);
  std::set<std::uint64_t> seen;
  std::vector<SymbolMatrix> out;
  for (const SymbolMatrix& g : all_graphs(n)) {
    std::uint64_t canon = ~0ull;
    for (const PermVector& p : perms) canon = std::min(canon, edge_mask(symmetric_permute(g, p)));
    if (seen.insert(canon).second) out.push_back(g);
  }
  return out;
}

SymbolMatrix random_graph(Index n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  SymbolMatrix g = SymbolMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      if (coin(rng)) g(i, j) = g(j, i) = 1;
  return g;
}

SymbolMatrix random_symbol_matrix(Index n, SymbolId max_symbol, Rng& rng, bool symmetric) {
  std::uniform_int_distribution<SymbolId> pick(1, max_symbol);
  SymbolMatrix m(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) m(i, j) = pick(rng);
  if (symmetric)
    for (Index i = 0; i < n; ++i)
      for (Index j = i + 1; j < n; ++j) m(j, i) = m(i, j);
  return m;
}

SymbolMatrix random_diag_distinct_symmetric(Index n, Index offdiag_symbols, Index diag_symbols, Rng& rng) {
  std::uniform_int_distribution<SymbolId> off(1, std::max<Index>(offdiag_symbols, 1));
  std::uniform_int_distribution<SymbolId> dia(1, std::max<Index>(diag_symbols, 1));
  SymbolMatrix m(n, n);
  for (Index i = 0; i < n; ++i) {
    m(i, i) = offdiag_symbols + dia(rng);  // diagonal alphabet sits above the off-diagonal one
    for (Index j = i + 1; j < n; ++j) m(i, j) = m(j, i) = off(rng);
  }
  return m;
}

PermVector random_perm(Index n, Rng& rng) {
  PermVector p = identity_perm(n);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

SymbolMatrix petersen_graph() {
  // Kneser graph K(5,2): 2-subsets of {0..4}, adjacent iff disjoint.
  std::vector<std::pair<int, int>> verts;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) verts.emplace_back(a, b);
  SymbolMatrix g = SymbolMatrix::Zero(10, 10);
  for (Index i = 0; i < 10; ++i)
    for (Index j = 0; j < 10; ++j) {
      const auto [a, b] = verts[static_cast<std::size_t>(i)];
      const auto [c, d] = verts[static_cast<std::size_t>(j)];
      if (i != j && a != c && a != d && b != c && b != d) g(i, j) = 1;
    }
  return g;
}

std::vector<PermVector> petersen_automorphisms() {
  std::vector<std::pair<int, int>> verts;
  std::map<std::pair<int, int>, Index> vertex_of;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) {
      vertex_of[{a, b}] = static_cast<Index>(verts.size());
      verts.emplace_back(a, b);
    }
  std::vector<PermVector> out;
  PermVector sigma = identity_perm(5);
  do {
    PermVector tau(10);
    for (Index v = 0; v < 10; ++v) {
      const auto [a, b] = verts[static_cast<std::size_t>(v)];
      int x = static_cast<int>(sigma[static_cast<std::size_t>(a)]);
      int y = static_cast<int>(sigma[static_cast<std::size_t>(b)]);
      if (x > y) std::swap(x, y);
      tau[static_cast<std::size_t>(v)] = vertex_of.at({x, y});
    }
    out.push_back(std::move(tau));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

SymbolMatrix rook_graph_4x4() {
  SymbolMatrix g = SymbolMatrix::Zero(16, 16);
  for (Index i = 0; i < 16; ++i)
    for (Index j = 0; j < 16; ++j) {
      if (i == j) continue;
      const Index ri = i / 4, ci = i % 4, rj = j / 4, cj = j % 4;
      if (ri == rj || ci == cj) g(i, j) = 1;
    }
  return g;
}

SymbolMatrix shrikhande_graph() {
  // Cayley graph on Z4 x Z4 with connection set {±(1,0), ±(0,1), ±(1,1)}.
  SymbolMatrix g = SymbolMatrix::Zero(16, 16);
  const int deltas[6][2] = {{1, 0}, {3, 0}, {0, 1}, {0, 3}, {1, 1}, {3, 3}};
  for (Index i = 0; i < 16; ++i)
    for (const auto& d : deltas) {
      const Index x = (i / 4 + d[0]) % 4;
      const Index y = (i % 4 + d[1]) % 4;
      g(i, x * 4 + y) = 1;
    }
  return g;
}

}  // namespace permsim
