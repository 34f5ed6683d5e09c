#include "permsim/bpsay.hpp"

#include "permsim/mixes.hpp"
#include "permsim/pcm.hpp"
#include "permsim/substitute.hpp"
#include "permsim/symsqr.hpp"
#include "permsim/wspm.hpp"

#include <algorithm>

namespace permsim {
namespace {

Index distinct_count(const SymbolMatrix& m) {
  std::vector<SymbolId> v(m.data(), m.data() + m.size());
  std::sort(v.begin(), v.end());
  return static_cast<Index>(std::unique(v.begin(), v.end()) - v.begin());
}

// Maps a consistent id pair onto ordinary primes by rank over the shared
// alphabet; monotone, so diagonal ids stay above off-diagonal ids.
std::pair<SymbolMatrix, SymbolMatrix> map_pair_to_primes(const SymbolMatrix& a, const SymbolMatrix& b) {
  std::vector<SymbolId> vals(a.data(), a.data() + a.size());
  vals.insert(vals.end(), b.data(), b.data() + b.size());
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  const auto& primes = first_primes(vals.size());
  auto map = [&](const SymbolMatrix& m) {
    SymbolMatrix out(m.rows(), m.cols());
    for (Index i = 0; i < m.rows(); ++i)
      for (Index j = 0; j < m.cols(); ++j) {
        const auto rank = std::lower_bound(vals.begin(), vals.end(), m(i, j)) - vals.begin();
        out(i, j) = static_cast<SymbolId>(primes[static_cast<std::size_t>(rank)]);
      }
    return out;
  };
  return {map(a), map(b)};
}

struct RoundOutput {
  SymbolMatrix s, t;
  Index symbols_s = 0, symbols_t = 0;
  bool overflow = false;
};

RoundOutput exact_round(const SymbolMatrix& s, const SymbolMatrix& t) {
  auto [sa, ta] = sym_sqr_pair(s, t);
  RoundOutput out;
  out.symbols_s = sa.distinct_count();
  out.symbols_t = ta.distinct_count();
  std::tie(out.s, out.t) = sym_sub_pair(sa, ta, DiagOffset::spd);
  return out;
}

RoundOutput numeric_round(const SymbolMatrix& s, const SymbolMatrix& t, const PrimesHeuristicConfig& cfg) {
  auto [ws, wt] = map_pair_to_primes(s, t);
  RoundOutput out;
  const auto sq_s = checked_prime_square(ws, cfg);
  const auto sq_t = checked_prime_square(wt, cfg);
  if (!sq_s || !sq_t) {
    out.overflow = true;
    return out;
  }
  std::tie(out.s, out.t) = split_substitute(*sq_s, *sq_t);
  out.symbols_s = distinct_count(out.s);
  out.symbols_t = distinct_count(out.t);
  return out;
}

BpsayResult run_loop(SymbolMatrix s, SymbolMatrix t, const BpsayConfig& cfg) {
  const Index dim = s.rows();
  BpsayResult res;
  res.pcm_dim = dim;
  const Index max_iters = cfg.max_iters.value_or(dim);
  if (max_iters < 1) throw std::invalid_argument("check_psim: max_iters must be >= 1");
  if (cfg.engine == Engine::exact_symbolic && dim > cfg.exact_dim_cap)
    throw std::invalid_argument("check_psim: PCM dimension exceeds the exact-engine cap; use the numeric engine");

  Pattern ps = pattern_of<SymbolId>(s);
  Pattern pt = pattern_of<SymbolId>(t);
  for (Index iter = 1;; ++iter) {
    if (cfg.engine == Engine::exact_symbolic && iter > dim)
      throw internal_error("check_psim: no stable pattern within the dimension bound");
    if (iter > max_iters) {
      res.verdict = Verdict::inconclusive;
      res.iterations = max_iters;
      res.note = "iteration cap reached without stability";
      return res;
    }
    RoundOutput round = cfg.engine == Engine::exact_symbolic ? exact_round(s, t) : numeric_round(s, t, cfg.primes);
    if (round.overflow) {
      res.verdict = Verdict::inconclusive;
      res.iterations = iter;
      res.note = "numeric engine halted: inner product exceeded the ceiling";
      return res;
    }
    TraceEntry te;
    te.iteration = iter;
    te.symbols_s = round.symbols_s;
    te.symbols_t = round.symbols_t;
    if (cfg.mix_mode == MixMode::diag) {
      const auto mix_s = diag_mix<SymbolId>(round.s);
      const auto mix_t = diag_mix<SymbolId>(round.t);
      te.mixes_equal = (mix_s == mix_t);
      te.mix_digest_s = mix_digest(mix_s);
      te.mix_digest_t = mix_digest(mix_t);
    } else {
      const auto mix_s = col_mix<SymbolId>(round.s);
      const auto mix_t = col_mix<SymbolId>(round.t);
      te.mixes_equal = (mix_s == mix_t);
      te.mix_digest_s = mix_digest(mix_s);
      te.mix_digest_t = mix_digest(mix_t);
    }
    if (!te.mixes_equal) {
      if (cfg.trace) res.trace.push_back(te);
      res.verdict = Verdict::not_psim;
      res.divergence_iter = iter;
      res.iterations = iter;
      return res;
    }
    Pattern ps_new = pattern_of<SymbolId>(round.s);
    Pattern pt_new = pattern_of<SymbolId>(round.t);
    te.stable_s = (ps_new == ps);
    te.stable_t = (pt_new == pt);
    if (cfg.trace) res.trace.push_back(te);
    if (te.stable_s && te.stable_t) {
      res.verdict = Verdict::psim;
      res.iterations = iter;
      return res;
    }
    s = std::move(round.s);
    t = std::move(round.t);
    ps = std::move(ps_new);
    pt = std::move(pt_new);
  }
}

// Color shift for a consistently substituted pair. The union alphabet of two
// unrelated matrices can hold up to 2m^2 ids, so the shift is widened past
// the whole alphabet whenever k exceeds m^2; the shared shift keeps the
// p-similarity relation intact and the diagonal symbols distinct.
SymbolId pair_color_beta(const SymbolMatrix& a, const SymbolMatrix& b) {
  const SymbolId dim_sq = static_cast<SymbolId>(a.rows()) * static_cast<SymbolId>(a.rows());
  return std::max(dim_sq, std::max(a.maxCoeff(), b.maxCoeff()));
}

std::pair<SymbolMatrix, SymbolMatrix> build_pcm_pair(const SymbolMatrix& m1, const SymbolMatrix& m2,
                                                     const BpsayConfig& cfg) {
  auto [a, b] = consistent_substitute(m1, m2);
  const SymbolId beta = pair_color_beta(a, b);
  SymbolMatrix s = build_pcm(shift_and_translate(a, beta, 2), cfg.equal_edge_weights);
  SymbolMatrix t = build_pcm(shift_and_translate(b, beta, 2), cfg.equal_edge_weights);
  return consistent_substitute(s, t);  // the structural 0/1/2 become symbols
}

void require_inputs(Index r1, Index c1, Index r2, Index c2) {
  if (r1 != c1 || r2 != c2) throw std::invalid_argument("check_psim: inputs must be square");
  if (r1 != r2) throw std::invalid_argument("check_psim: dimension mismatch");
  if (r1 < 1) throw std::invalid_argument("check_psim: empty input");
}

}  // namespace

BpsayResult check_psim(const SymbolMatrix& m1, const SymbolMatrix& m2, const BpsayConfig& cfg) {
  require_inputs(m1.rows(), m1.cols(), m2.rows(), m2.cols());
  auto [s, t] = build_pcm_pair(m1, m2, cfg);
  return run_loop(std::move(s), std::move(t), cfg);
}

BpsayResult check_psim(const TokenGrid& m1, const TokenGrid& m2, const BpsayConfig& cfg) {
  require_inputs(m1.rows(), m1.cols(), m2.rows(), m2.cols());
  const TokenSubstitution sub = consistent_substitute(m1, m2);
  return check_psim(sub.a, sub.b, cfg);
}

RefineTrace refine_to_stable(const SymbolMatrix& m, const BpsayConfig& cfg, bool keep_iterates) {
  if (!is_symmetric(m)) throw std::invalid_argument("refine_to_stable: input not symmetric");
  const Index dim = m.rows();
  const Index max_iters = cfg.max_iters.value_or(dim);
  RefineTrace out;
  SymbolMatrix cur = consistent_substitute(m);
  out.symbol_counts.push_back(distinct_count(cur));
  if (keep_iterates) out.iterates.push_back(cur);
  Pattern prev = pattern_of<SymbolId>(cur);
  for (Index iter = 1;; ++iter) {
    if (cfg.engine == Engine::exact_symbolic && iter > dim)
      throw internal_error("refine_to_stable: no stable pattern within the dimension bound");
    if (iter > max_iters) {
      out.inconclusive = true;
      out.note = "iteration cap reached without stability";
      return out;
    }
    SymbolMatrix next;
    Index symbols = 0;
    if (cfg.engine == Engine::exact_symbolic) {
      StringArray arr = sym_sqr(cur);
      symbols = arr.distinct_count();
      next = sym_sub(arr, DiagOffset::spd);
    } else {
      const SymbolMatrix w = map_to_primes(cur);
      const auto sq = checked_prime_square(w, cfg.primes);
      if (!sq) {
        out.inconclusive = true;
        out.note = "numeric engine halted: inner product exceeded the ceiling";
        return out;
      }
      next = split_substitute(*sq, *sq).first;
      symbols = distinct_count(next);
    }
    out.symbol_counts.push_back(symbols);
    if (keep_iterates) out.iterates.push_back(next);
    Pattern cur_pat = pattern_of<SymbolId>(next);
    if (cur_pat == prev) {
      out.stable_iteration = iter - 1;
      out.stable_pattern = std::move(prev);
      return out;
    }
    prev = std::move(cur_pat);
    cur = std::move(next);
  }
}

namespace {

BpsayResult direct_sum_check(const SymbolMatrix& m1, const SymbolMatrix& m2, const BpsayConfig& cfg) {
  require_inputs(m1.rows(), m1.cols(), m2.rows(), m2.cols());
  const Index m = m1.rows();
  auto [a, b] = consistent_substitute(m1, m2);
  const SymbolId beta = pair_color_beta(a, b);
  const SymbolMatrix color =
      direct_sum_color(shift_and_translate(a, beta, 2), shift_and_translate(b, beta, 2));
  const SymbolMatrix pcm = build_pcm(color, cfg.equal_edge_weights);
  if (cfg.engine == Engine::exact_symbolic && pcm.rows() > cfg.exact_dim_cap)
    throw std::invalid_argument("check_psim_direct_sum: PCM dimension exceeds the exact-engine cap");

  RefineTrace refine = refine_to_stable(pcm, cfg, true);
  BpsayResult res;
  res.pcm_dim = pcm.rows();
  if (refine.inconclusive) {
    res.verdict = Verdict::inconclusive;
    res.note = refine.note;
    res.iterations = static_cast<Index>(refine.symbol_counts.size()) - 1;
    return res;
  }
  const SymbolMatrix& stable = refine.iterates.back();
  // Diagonal index t of the PCM is the color-matrix cell (r, c) with
  // t = c*(2m) + r; the A block is r, c < m and the B block r, c >= m.
  std::vector<SymbolId> mix_a, mix_b;
  for (Index c = 0; c < 2 * m; ++c)
    for (Index r = 0; r < 2 * m; ++r) {
      const Index t = c * 2 * m + r;
      if (r < m && c < m)
        mix_a.push_back(stable(t, t));
      else if (r >= m && c >= m)
        mix_b.push_back(stable(t, t));
    }
  std::sort(mix_a.begin(), mix_a.end());
  std::sort(mix_b.begin(), mix_b.end());
  res.iterations = refine.stable_iteration;
  if (mix_a == mix_b) {
    res.verdict = Verdict::psim;
  } else {
    res.verdict = Verdict::not_psim;
    res.divergence_iter = refine.stable_iteration;
  }
  return res;
}

}  // namespace

BpsayResult check_psim_direct_sum(const SymbolMatrix& m1, const SymbolMatrix& m2, const BpsayConfig& cfg) {
  return direct_sum_check(m1, m2, cfg);
}

BpsayResult check_psim_direct_sum(const TokenGrid& m1, const TokenGrid& m2, const BpsayConfig& cfg) {
  require_inputs(m1.rows(), m1.cols(), m2.rows(), m2.cols());
  const TokenSubstitution sub = consistent_substitute(m1, m2);
  return direct_sum_check(sub.a, sub.b, cfg);
}

}  // namespace permsim
