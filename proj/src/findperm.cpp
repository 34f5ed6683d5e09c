#include "permsim/findperm.hpp"

#include "permsim/pcm.hpp"
#include "permsim/substitute.hpp"
#include "permsim/symsqr.hpp"

#include <utility>

namespace permsim {

SymbolMatrix exchange_ij(const SymbolMatrix& a, Index i, Index j) {
  if (i < 0 || j < 0 || i >= a.rows() || j >= a.rows()) throw std::invalid_argument("exchange_ij: index out of range");
  SymbolMatrix out = a;
  out.row(i).swap(out.row(j));
  out.col(i).swap(out.col(j));
  return out;
}

namespace {

bool prefix_consistent(const SymbolMatrix& m1, const SymbolMatrix& m2, const PermVector& p, Index c) {
  for (Index a = 0; a < c; ++a)
    for (Index b = 0; b < c; ++b)
      if (m1(p[static_cast<std::size_t>(a)], p[static_cast<std::size_t>(b)]) != m2(a, b)) return false;
  return true;
}

}  // namespace

FindPermResult find_permutation(const SymbolMatrix& m1, const SymbolMatrix& m2, const BpsayConfig& cfg) {
  if (!is_square(m1) || !is_square(m2)) throw std::invalid_argument("find_permutation: inputs must be square");
  if (m1.rows() != m2.rows()) throw std::invalid_argument("find_permutation: dimension mismatch");
  const Index m = m1.rows();

  FindPermResult res;
  res.perm = identity_perm(m);

  const BpsayResult gate = check_psim(m1, m2, cfg);
  ++res.bpsay_calls;
  if (gate.verdict == Verdict::inconclusive) {
    res.verdict = Verdict::inconclusive;
    res.note = gate.note;
    return res;
  }
  if (!gate.psim()) {
    res.verdict = Verdict::not_psim;
    return res;
  }

  auto [a, b] = consistent_substitute(m1, m2);
  const SymbolId beta = static_cast<SymbolId>(m) * static_cast<SymbolId>(m);
  SymbolMatrix cur_a = shift_and_translate(a, beta, 0);
  SymbolMatrix cur_b = shift_and_translate(b, beta, 0);
  if (!is_diag_distinct(cur_a) || !is_diag_distinct(cur_b)) {
    // Unreachable after a true gate (the value sets then coincide, so there
    // are at most m^2 ids); shifting past the whole alphabet always separates.
    const SymbolId k = std::max(a.maxCoeff(), b.maxCoeff());
    cur_a = shift_and_translate(a, k, 0);
    cur_b = shift_and_translate(b, k, 0);
    res.note = "diagonal shift widened to the alphabet size";
  }

  for (Index c = 0; c + 1 < m; ++c) {
    const Index n_cur = m - c;
    if (!is_diag_distinct(cur_a) || !is_diag_distinct(cur_b))
      throw internal_error("find_permutation: diagonal distinctness lost");
    if (!prefix_consistent(m1, m2, res.perm, c))
      throw internal_error("find_permutation: fixed prefix stopped matching");

    bool found = false;
    for (Index j = 0; j < n_cur; ++j) {
      if (cur_a(j, j) != cur_b(0, 0)) continue;
      const SymbolMatrix aj1 = exchange_ij(cur_a, 0, j);
      auto [sa, sb] = sym_mult_pair(aj1.col(0), aj1, aj1.row(0).transpose(), cur_b.col(0), cur_b,
                                    cur_b.row(0).transpose());
      auto [s, t] = sym_sub_pair(sa, sb, DiagOffset::plain);
      const SymbolMatrix s22 = s.bottomRightCorner(n_cur - 1, n_cur - 1);
      const SymbolMatrix t22 = t.bottomRightCorner(n_cur - 1, n_cur - 1);
      const BpsayResult probe = check_psim(s22, t22, cfg);
      ++res.bpsay_calls;
      if (probe.verdict == Verdict::inconclusive) {
        res.verdict = Verdict::inconclusive;
        res.note = probe.note;
        res.perm = identity_perm(m);
        return res;
      }
      if (probe.psim()) {
        std::swap(res.perm[static_cast<std::size_t>(c)], res.perm[static_cast<std::size_t>(c + j)]);
        cur_a = s22;
        cur_b = t22;
        found = true;
        break;
      }
    }
    if (!found)
      throw internal_error("find_permutation: gate accepted the pair but no column matches at step " +
                           std::to_string(c));
  }

  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j)
      if (m1(res.perm[static_cast<std::size_t>(i)], res.perm[static_cast<std::size_t>(j)]) != m2(i, j))
        throw internal_error("find_permutation: recovered permutation failed verification");
  res.verdict = Verdict::psim;
  res.verified = true;
  return res;
}

FindPermResult find_permutation(const TokenGrid& m1, const TokenGrid& m2, const BpsayConfig& cfg) {
  if (m1.rows() != m2.rows()) throw std::invalid_argument("find_permutation: dimension mismatch");
  const TokenSubstitution sub = consistent_substitute(m1, m2);
  return find_permutation(sub.a, sub.b, cfg);
}

}  // namespace permsim
