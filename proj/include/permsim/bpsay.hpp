#pragma once

#include "permsim/matrix.hpp"
#include "permsim/pattern.hpp"
#include "permsim/token.hpp"
#include "permsim/wspm_config.hpp"

#include <optional>
#include <vector>

namespace permsim {

enum class Engine { exact_symbolic, numeric_primes };
enum class MixMode { diag, column };

struct BpsayConfig {
  std::optional<Index> max_iters;  // default: the PCM dimension m^2
  MixMode mix_mode = MixMode::diag;
  Engine engine = Engine::exact_symbolic;
  bool trace = true;  // collect per-iteration trace entries in the result
  bool equal_edge_weights = false;
  Index exact_dim_cap = 400;  // largest PCM dimension the exact engine accepts
  PrimesHeuristicConfig primes;
};

enum class Verdict { psim, not_psim, inconclusive };

struct TraceEntry {
  Index iteration = 0;
  Index symbols_s = 0, symbols_t = 0;
  bool mixes_equal = false;
  bool stable_s = false, stable_t = false;
  std::uint64_t mix_digest_s = 0, mix_digest_t = 0;
};

struct BpsayResult {
  Verdict verdict = Verdict::inconclusive;
  Index iterations = 0;
  std::optional<Index> divergence_iter;
  std::vector<TraceEntry> trace;
  Index pcm_dim = 0;
  std::string note;  // set when inconclusive

  bool psim() const { return verdict == Verdict::psim; }
};

/// The blind p-similarity decision: substitute, build both PCMs, then iterate
/// squaring + consistent substitution, comparing mixes before stability each
/// round. A false verdict always carries divergence_iter.
BpsayResult check_psim(const TokenGrid& m1, const TokenGrid& m2, const BpsayConfig& cfg = {});
BpsayResult check_psim(const SymbolMatrix& m1, const SymbolMatrix& m2, const BpsayConfig& cfg = {});

/// Direct-sum mode: builds the single PCM of [[A_C, 3J], [3J, B_C]], squares
/// it to stability, and compares the multisets of diagonal symbols at the
/// locations associated with A versus B.
BpsayResult check_psim_direct_sum(const TokenGrid& m1, const TokenGrid& m2, const BpsayConfig& cfg = {});
BpsayResult check_psim_direct_sum(const SymbolMatrix& m1, const SymbolMatrix& m2, const BpsayConfig& cfg = {});

/// Single-matrix refinement driver: iterates squaring + substitution on a
/// substituted PCM until the pattern stops changing.
struct RefineTrace {
  std::vector<Index> symbol_counts;  // index 0 is the input's distinct count
  Index stable_iteration = 0;        // first i with pattern(i) == pattern(i+1)
  Pattern stable_pattern;
  std::vector<SymbolMatrix> iterates;  // kept only when keep_iterates
  bool inconclusive = false;           // numeric engine halted on overflow
  std::string note;
};
RefineTrace refine_to_stable(const SymbolMatrix& m, const BpsayConfig& cfg = {}, bool keep_iterates = false);

}  // namespace permsim
