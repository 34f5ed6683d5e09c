#include "permsim/wspm.hpp"

#include "permsim/substitute.hpp"
#include "permsim/symsqr.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace permsim {
namespace {

// Prime chains grow doubly exponentially, so tables are cached by their
// generating parameters.
const std::vector<BigInt>& prime_chain(Index dim, std::uint64_t k, const BigInt& start_above, std::size_t count) {
  static std::map<std::string, std::vector<BigInt>*> cache;
  static std::mutex mu;
  const std::string key =
      std::to_string(dim) + ":" + std::to_string(k) + ":" + start_above.get_str();
  std::scoped_lock lock(mu);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, new std::vector<BigInt>()).first;
  std::vector<BigInt>& chain = *it->second;
  while (chain.size() < count) {
    if (chain.empty()) {
      BigInt bound = BigInt(static_cast<unsigned long>(dim)) * k * k;
      if (bound < start_above) bound = start_above;
      chain.push_back(next_prime_above(bound));
    } else {
      chain.push_back(next_prime_above(BigInt(static_cast<unsigned long>(dim)) * chain.back() * chain.back()));
    }
  }
  return chain;
}

struct SymbolSplit {
  std::vector<SymbolId> offdiag, diag;  // ascending
};

SymbolSplit split_symbols(const SymbolMatrix& m) {
  if (!is_symmetric(m)) throw std::invalid_argument("wspm: input not symmetric");
  std::set<SymbolId> off, diag;
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) (i == j ? diag : off).insert(m(i, j));
  for (SymbolId d : diag)
    if (off.count(d)) throw std::invalid_argument("wspm: diagonal symbols not distinct from off-diagonal");
  return {{off.begin(), off.end()}, {diag.begin(), diag.end()}};
}

}  // namespace

WspMatrix build_wspm(const SymbolMatrix& m, std::uint64_t k, const BigInt& start_above, const WspmLimits& limits) {
  const SymbolSplit split = split_symbols(m);
  const std::size_t n = split.offdiag.size() + split.diag.size();
  if (m.rows() > limits.dim_cap || static_cast<Index>(n) > limits.symbol_cap)
    throw std::invalid_argument("wspm: beyond the exact-path caps (prime chains grow doubly exponentially)");
  const auto& chain = prime_chain(m.rows(), k, start_above, n);

  std::map<SymbolId, BigInt> assign;
  std::size_t idx = 0;
  for (SymbolId s : split.offdiag) assign.emplace(s, chain[idx++]);
  for (SymbolId s : split.diag) assign.emplace(s, chain[idx++]);

  WspMatrix out;
  out.n1 = static_cast<Index>(split.offdiag.size());
  out.n2 = static_cast<Index>(split.diag.size());
  out.primes.assign(chain.begin(), chain.begin() + static_cast<std::ptrdiff_t>(n));
  out.w.resize(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out.w(i, j) = assign.at(m(i, j));
  return out;
}

BigMatrix big_product(const BigMatrix& a, const BigMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("big_product: dimension mismatch");
  BigMatrix out(a.rows(), b.cols());
  BigInt term;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < b.cols(); ++j) {
      BigInt acc = 0;
      for (Index k = 0; k < a.cols(); ++k) {
        term = a(i, k) * b(k, j);
        acc += term;
      }
      out(i, j) = acc;
    }
  return out;
}

Pattern wspm_square_refine(const WspMatrix& w) {
  return pattern_of<BigInt>(big_product(w.w, w.w));
}

Pattern wspm_pair_refine(const SymbolMatrix& m, const WspmLimits& limits) {
  const WspMatrix w1 = build_wspm(m, 1, 0, limits);
  const BigInt p_n = w1.primes.back();
  const WspMatrix w2 = build_wspm(m, 1, BigInt(static_cast<unsigned long>(m.rows())) * p_n * p_n, limits);
  BigMatrix prod = big_product(w1.w, w2.w);
  BigMatrix sym(prod.rows(), prod.cols());
  for (Index i = 0; i < prod.rows(); ++i)
    for (Index j = 0; j < prod.cols(); ++j) sym(i, j) = std::min(prod(i, j), prod(j, i));
  return pattern_of<BigInt>(sym);
}

std::optional<SymbolMatrix> checked_prime_square(const SymbolMatrix& w, const PrimesHeuristicConfig& cfg) {
  if (cfg.accumulate_bits != 64 && cfg.accumulate_bits != 128)
    throw std::invalid_argument("numeric mode: accumulate width must be 64 or 128");
  const int ceil_bits = std::min(cfg.ceiling_bits, 62);
  if (ceil_bits < 1) throw std::invalid_argument("numeric mode: ceiling must be positive");
  const unsigned __int128 ceiling = (static_cast<unsigned __int128>(1) << ceil_bits);
  const Index n = w.rows();
  SymbolMatrix out(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      if (cfg.accumulate_bits == 128) {
        unsigned __int128 acc = 0;
        for (Index k = 0; k < n; ++k) {
          acc += static_cast<unsigned __int128>(w(i, k)) * static_cast<unsigned __int128>(w(k, j));
          if (acc > ceiling) return std::nullopt;
        }
        out(i, j) = static_cast<SymbolId>(acc);
      } else {
        std::uint64_t acc = 0;
        for (Index k = 0; k < n; ++k) {
          std::uint64_t term;
          if (__builtin_mul_overflow(static_cast<std::uint64_t>(w(i, k)), static_cast<std::uint64_t>(w(k, j)), &term))
            return std::nullopt;
          if (__builtin_add_overflow(acc, term, &acc)) return std::nullopt;
          if (acc > static_cast<std::uint64_t>(ceiling)) return std::nullopt;
        }
        out(i, j) = static_cast<SymbolId>(acc);
      }
    }
  return out;
}

SymbolMatrix map_to_primes(const SymbolMatrix& m) {
  std::vector<SymbolId> vals(m.data(), m.data() + m.size());
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  const auto& primes = first_primes(vals.size());
  SymbolMatrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) {
      const auto rank = std::lower_bound(vals.begin(), vals.end(), m(i, j)) - vals.begin();
      out(i, j) = static_cast<SymbolId>(primes[static_cast<std::size_t>(rank)]);
    }
  return out;
}

std::optional<Pattern> primes_heuristic_refine(const SymbolMatrix& m, const PrimesHeuristicConfig& cfg) {
  split_symbols(m);  // validates symmetry and diagonal distinctness
  const auto sq = checked_prime_square(map_to_primes(m), cfg);
  if (!sq) return std::nullopt;
  // Same position-class substitution the iterated engine applies, so a
  // numeric coincidence can never fold a diagonal cell into an off-diagonal
  // one.
  return pattern_of<SymbolId>(split_substitute(*sq, *sq).first);
}

HeuristicTrace primes_heuristic_refine_to_stable(const SymbolMatrix& m, const PrimesHeuristicConfig& cfg,
                                                 Index max_iters) {
  split_symbols(m);
  if (max_iters <= 0) max_iters = m.rows();
  HeuristicTrace out;
  SymbolMatrix cur = consistent_substitute(m);
  {
    std::vector<SymbolId> vals(cur.data(), cur.data() + cur.size());
    std::sort(vals.begin(), vals.end());
    out.symbol_counts.push_back(static_cast<Index>(std::unique(vals.begin(), vals.end()) - vals.begin()));
  }
  Pattern prev = pattern_of<SymbolId>(cur);
  SymbolMatrix raw = map_to_primes(cur);  // used when resubstitution is off
  for (Index iter = 1; iter <= max_iters; ++iter) {
    std::optional<SymbolMatrix> sq =
        cfg.resubstitute_every_iteration ? checked_prime_square(map_to_primes(cur), cfg) : checked_prime_square(raw, cfg);
    if (!sq) {
      out.inconclusive = true;
      return out;
    }
    SymbolMatrix next = split_substitute(*sq, *sq).first;
    if (!cfg.resubstitute_every_iteration) raw = *sq;
    std::vector<SymbolId> vals(next.data(), next.data() + next.size());
    std::sort(vals.begin(), vals.end());
    out.symbol_counts.push_back(static_cast<Index>(std::unique(vals.begin(), vals.end()) - vals.begin()));
    Pattern cur_pat = pattern_of<SymbolId>(next);
    if (cur_pat == prev) {
      out.stable_iteration = iter - 1;
      out.stable_pattern = std::move(prev);
      return out;
    }
    prev = std::move(cur_pat);
    cur = std::move(next);
  }
  out.inconclusive = true;
  return out;
}

}  // namespace permsim
