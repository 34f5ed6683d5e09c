#include "permsim/oracle.hpp"

#include "permsim/eigen_gmp.hpp"
#include "permsim/pcm.hpp"
#include "permsim/substitute.hpp"
#include "permsim/wspm.hpp"

#include <map>
#include <numeric>

namespace permsim {
namespace {

// Backtracking over prefix-consistent assignments; exhaustive and complete.
// visit() gets each full p with a(p,p) == b; returning false stops the search.
template <class Visit>
void search_maps(const SymbolMatrix& a, const SymbolMatrix& b, Visit&& visit) {
  const Index m = a.rows();
  PermVector p(static_cast<std::size_t>(m));
  std::vector<char> used(static_cast<std::size_t>(m), 0);
  bool stop = false;

  auto consistent = [&](Index t) {
    for (Index q = 0; q <= t; ++q) {
      if (a(p[static_cast<std::size_t>(t)], p[static_cast<std::size_t>(q)]) != b(t, q)) return false;
      if (a(p[static_cast<std::size_t>(q)], p[static_cast<std::size_t>(t)]) != b(q, t)) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, Index t) -> void {
    if (stop) return;
    if (t == m) {
      if (!visit(p)) stop = true;
      return;
    }
    for (Index cand = 0; cand < m; ++cand) {
      if (used[static_cast<std::size_t>(cand)]) continue;
      p[static_cast<std::size_t>(t)] = cand;
      if (!consistent(t)) continue;
      used[static_cast<std::size_t>(cand)] = 1;
      self(self, t + 1);
      used[static_cast<std::size_t>(cand)] = 0;
      if (stop) return;
    }
  };
  rec(rec, 0);
}

struct UnionFind {
  std::vector<Index> parent;
  explicit UnionFind(Index n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), Index{0});
  }
  Index find(Index x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(Index x, Index y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[static_cast<std::size_t>(x)] = y;
  }
};

Pattern orbits_from_perms(Index n, const std::vector<PermVector>& perms, bool symmetrize) {
  UnionFind uf(n * n);
  for (const PermVector& p : perms)
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        uf.unite(i * n + j, p[static_cast<std::size_t>(i)] * n + p[static_cast<std::size_t>(j)]);
  if (symmetrize)
    for (Index i = 0; i < n; ++i)
      for (Index j = i + 1; j < n; ++j) uf.unite(i * n + j, j * n + i);
  DenseMatrix<std::int64_t> labels(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) labels(i, j) = uf.find(i * n + j);
  return pattern_from_labels(labels);
}

}  // namespace

BrutePsim brute_psim(const SymbolMatrix& a, const SymbolMatrix& b, Index cap) {
  if (!is_square(a) || !is_square(b)) throw std::invalid_argument("brute_psim: inputs must be square");
  if (a.rows() != b.rows()) throw std::invalid_argument("brute_psim: dimension mismatch");
  if (a.rows() > cap) throw std::invalid_argument("brute_psim: dimension exceeds the brute-force cap");
  BrutePsim out;
  search_maps(a, b, [&](const PermVector& p) {
    out.psim = true;
    out.witness = p;
    return false;  // first witness is enough
  });
  return out;
}

std::vector<PermVector> automorphisms(const SymbolMatrix& m, Index cap) {
  if (!is_square(m)) throw std::invalid_argument("automorphisms: input must be square");
  if (m.rows() > cap) throw std::invalid_argument("automorphisms: dimension exceeds the brute-force cap");
  std::vector<PermVector> out;
  search_maps(m, m, [&](const PermVector& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

Pattern orbit_pattern(const SymbolMatrix& m, Index cap) {
  const auto autos = automorphisms(m, cap);
  return orbits_from_perms(m.rows(), autos, false);
}

Pattern lifted_pcm_orbit_pattern(const SymbolMatrix& base, Index cap, bool equal_edge_weights) {
  (void)equal_edge_weights;  // the lift is the same for both weightings
  const Index m = base.rows();
  if (m > cap) throw std::invalid_argument("lifted_pcm_orbit_pattern: dimension exceeds the cap");
  const auto autos = automorphisms(base, cap);
  // sigma (x) sigma under column-major vertex ordering: t = c*m + r.
  std::vector<PermVector> lifted;
  lifted.reserve(autos.size());
  for (const PermVector& sigma : autos) {
    PermVector tau(static_cast<std::size_t>(m * m));
    for (Index c = 0; c < m; ++c)
      for (Index r = 0; r < m; ++r)
        tau[static_cast<std::size_t>(c * m + r)] =
            sigma[static_cast<std::size_t>(c)] * m + sigma[static_cast<std::size_t>(r)];
    lifted.push_back(std::move(tau));
  }
  // The PCM is symmetric, so the orbit matrix follows the symmetric
  // convention: (t,u) and (u,t) carry the same symbol.
  return orbits_from_perms(m * m, lifted, true);
}

Pattern espp_pattern(const SymbolMatrix& m, Index cap) {
  if (!is_symmetric(m)) throw std::invalid_argument("espp_pattern: input must be symmetric");
  const Index n = m.rows();
  if (n > cap) throw std::invalid_argument("espp_pattern: dimension exceeds the cap");

  BigMatrix big(n, n), power(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      big(i, j) = m(i, j);
      power(i, j) = (i == j) ? 1 : 0;  // layer 0 is the identity
    }

  DenseMatrix<std::int64_t> labels(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) labels(i, j) = (i == j) ? 0 : 1;

  Index cells = (n > 1) ? 2 : 1;
  for (Index layer = 1; layer < n; ++layer) {
    power = big_product(power, big);
    // Labels fold the whole stack so far; a location pair splits exactly
    // when this layer's values differ.
    std::map<std::pair<std::int64_t, BigInt>, std::int64_t> next;
    DenseMatrix<std::int64_t> refined(n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) {
        auto [it, inserted] = next.try_emplace({labels(i, j), power(i, j)}, static_cast<std::int64_t>(next.size()));
        refined(i, j) = it->second;
      }
    const Index new_cells = static_cast<Index>(next.size());
    labels = std::move(refined);
    if (new_cells == cells) break;  // adding this power stopped refining
    cells = new_cells;
  }
  return pattern_from_labels(labels);
}

}  // namespace permsim
