#pragma once

#include "permsim/bpsay.hpp"

#include <optional>

namespace permsim {

/// Symmetric transposition: rows i,j and columns i,j swapped.
SymbolMatrix exchange_ij(const SymbolMatrix& a, Index i, Index j);

struct FindPermResult {
  Verdict verdict = Verdict::inconclusive;
  PermVector perm;           // identity when not p-similar
  bool verified = false;     // M1(p,p) == M2 re-checked elementwise
  Index bpsay_calls = 0;
  std::string note;

  bool psim() const { return verdict == Verdict::psim; }
};

/// Recovers p with M1(p,p) = M2 for p-similar inputs by scanning candidate
/// columns, refining trailing principal submatrices with diagonal sandwich
/// products, and gating every candidate with the blind decision.
/// An internal contradiction (gate says p-similar but no column matches, or
/// verification fails) raises internal_error; callers treat it as a recorded
/// counterexample.
FindPermResult find_permutation(const TokenGrid& m1, const TokenGrid& m2, const BpsayConfig& cfg = {});
FindPermResult find_permutation(const SymbolMatrix& m1, const SymbolMatrix& m2, const BpsayConfig& cfg = {});

}  // namespace permsim
