#include "permsim/findperm.hpp"
#include "permsim/graphs.hpp"
#include "permsim/io.hpp"
#include "permsim/oracle.hpp"
#include "permsim/pcm.hpp"
#include "permsim/substitute.hpp"
#include "permsim/symsqr.hpp"
#include "permsim/validate.hpp"
#include "permsim/wspm.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

namespace {

using nlohmann::json;
using namespace permsim;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitInconclusive = 3;
constexpr int kExitInternal = 4;

struct CheckOptions {
  std::string path_a, path_b, format, engine = "exact", mix = "diag", trace_path;
  bool direct_sum = false, equal_edge_weights = false;
  Index max_iters = 0, exact_cap = 400;
};

BpsayConfig to_config(const CheckOptions& opt) {
  BpsayConfig cfg;
  cfg.engine = opt.engine == "primes" ? Engine::numeric_primes : Engine::exact_symbolic;
  cfg.mix_mode = opt.mix == "column" ? MixMode::column : MixMode::diag;
  cfg.equal_edge_weights = opt.equal_edge_weights;
  cfg.exact_dim_cap = opt.exact_cap;
  if (opt.max_iters > 0) cfg.max_iters = opt.max_iters;
  return cfg;
}

json config_echo(const CheckOptions& opt) {
  return json{{"engine", opt.engine},
              {"mix", opt.mix},
              {"direct_sum", opt.direct_sum},
              {"equal_edge_weights", opt.equal_edge_weights},
              {"max_iters", opt.max_iters},
              {"exact_dim_cap", opt.exact_cap}};
}

void write_trace(const std::string& path, const BpsayResult& res) {
  if (path.empty()) return;
  std::ofstream out(path);
  for (const auto& te : res.trace) {
    json j{{"iteration", te.iteration},   {"symbols_S", te.symbols_s}, {"symbols_T", te.symbols_t},
           {"mixes_equal", te.mixes_equal}, {"stable_S", te.stable_s},   {"stable_T", te.stable_t},
           {"mix_digest_S", te.mix_digest_s}, {"mix_digest_T", te.mix_digest_t}};
    out << j.dump() << "\n";
  }
}

json pattern_to_json(const Pattern& p) {
  json cells = json::array();
  std::vector<std::vector<std::array<Index, 2>>> grouped(static_cast<std::size_t>(p.cell_count()));
  for (Index i = 0; i < p.n; ++i)
    for (Index j = 0; j < p.n; ++j)
      grouped[static_cast<std::size_t>(p.cell_of(i, j))].push_back({i + 1, j + 1});
  for (const auto& cell : grouped) cells.push_back(cell);
  return json{{"dimension", p.n}, {"cell_count", p.cell_count()}, {"cells", cells}};
}

int run_check(const CheckOptions& opt) {
  const InputDocument a = parse_input(opt.path_a, opt.format);
  const InputDocument b = parse_input(opt.path_b, opt.format);
  const BpsayConfig cfg = to_config(opt);
  const BpsayResult res =
      opt.direct_sum ? check_psim_direct_sum(a.tokens, b.tokens, cfg) : check_psim(a.tokens, b.tokens, cfg);
  write_trace(opt.trace_path, res);
  json out{{"command", "check"},
           {"inputs", {{"a", opt.path_a}, {"b", opt.path_b}, {"dimension", a.tokens.rows()}}},
           {"config", config_echo(opt)},
           {"psim", res.psim()},
           {"verdict", res.verdict == Verdict::psim ? "psim" : (res.verdict == Verdict::not_psim ? "not-psim" : "inconclusive")},
           {"iterations", res.iterations},
           {"pcm_dimension", res.pcm_dim}};
  if (res.divergence_iter) out["divergence_iter"] = *res.divergence_iter;
  if (!res.note.empty()) out["note"] = res.note;
  std::cout << out.dump(2) << "\n";
  return res.verdict == Verdict::inconclusive ? kExitInconclusive : kExitOk;
}

int run_find_perm(const CheckOptions& opt) {
  const InputDocument a = parse_input(opt.path_a, opt.format);
  const InputDocument b = parse_input(opt.path_b, opt.format);
  const FindPermResult res = find_permutation(a.tokens, b.tokens, to_config(opt));
  json perm = json::array();
  for (Index v : res.perm) perm.push_back(v + 1);  // 1-based externally
  json out{{"command", "find-perm"},
           {"inputs", {{"a", opt.path_a}, {"b", opt.path_b}, {"dimension", a.tokens.rows()}}},
           {"config", config_echo(opt)},
           {"psim", res.psim()},
           {"permutation", perm},
           {"verified", res.verified},
           {"bpsay_calls", res.bpsay_calls}};
  if (!res.note.empty()) out["note"] = res.note;
  std::cout << out.dump(2) << "\n";
  return res.verdict == Verdict::inconclusive ? kExitInconclusive : kExitOk;
}

int run_orbits(const std::string& path, const std::string& format, Index cap) {
  const InputDocument doc = parse_input(path, format);
  const SymbolMatrix m = consistent_substitute(doc.tokens);
  const Pattern orbits = orbit_pattern(m, cap);
  json out{{"command", "orbits"}, {"input", path}};
  out.update(pattern_to_json(orbits));
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int run_espp(const std::string& path, const std::string& format, Index cap) {
  const InputDocument doc = parse_input(path, format);
  const SymbolMatrix m = consistent_substitute(doc.tokens);
  const Pattern espp = espp_pattern(m, cap);
  json out{{"command", "espp"}, {"input", path}};
  out.update(pattern_to_json(espp));
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int run_wspm_verify(const std::string& path, const std::string& format) {
  const InputDocument doc = parse_input(path, format);
  SymbolMatrix m = consistent_substitute(doc.tokens);
  if (!is_symmetric(m)) throw ParseError("wspm-verify: input must be symmetric");
  if (!is_diag_distinct(m)) m = shift_and_translate(m, m.maxCoeff(), 0);

  json checks = json::array();
  bool all_ok = true;
  auto record = [&](const std::string& name, bool ok) {
    checks.push_back(json{{"name", name}, {"pass", ok}});
    all_ok = all_ok && ok;
  };

  const WspMatrix w = build_wspm(m);
  record("pattern-preserved", pattern_of<BigInt>(w.w) == pattern_of<SymbolId>(m));
  bool dominant = true;
  for (Index i = 0; i < w.w.rows(); ++i) {
    BigInt row_sum = 0;
    for (Index j = 0; j < w.w.cols(); ++j)
      if (i != j) row_sum += w.w(i, j);
    dominant = dominant && (w.w(i, i) > row_sum);
  }
  record("diagonally-dominant", dominant);
  const Pattern squared = wspm_square_refine(w);
  record("square-refines", refines(squared, pattern_of<BigInt>(w.w)));
  const SymbolMatrix symbolic = sym_sub(sym_sqr(m), DiagOffset::plain);
  record("diagonal-matches-symbolic",
         diagonal_classes<BigInt>(big_product(w.w, w.w)) == diagonal_classes<SymbolId>(symbolic));
  record("pair-product-matches-symbolic", wspm_pair_refine(m) == pattern_of<SymbolId>(symbolic));

  json out{{"command", "wspm-verify"}, {"input", path}, {"dimension", m.rows()}, {"pass", all_ok}, {"checks", checks}};
  std::cout << out.dump(2) << "\n";
  return all_ok ? kExitOk : kExitInternal;
}

int run_validate(const ValidateConfig& cfg) {
  const ValidateReport report = validate_corpus(cfg);
  std::cout << report_to_json(report) << "\n";
  return report.pass() ? kExitOk : kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Blind permutation-similarity toolkit"};
  app.require_subcommand(1);

  CheckOptions check_opt;
  CLI::App* check = app.add_subcommand("check", "Decide whether two matrices are permutation similar");
  check->add_option("a", check_opt.path_a, "First matrix/graph file")->required();
  check->add_option("b", check_opt.path_b, "Second matrix/graph file")->required();
  check->add_option("--format", check_opt.format, "Input format override");
  check->add_option("--engine", check_opt.engine, "exact | primes")->check(CLI::IsMember({"exact", "primes"}));
  check->add_option("--mix", check_opt.mix, "diag | column")->check(CLI::IsMember({"diag", "column"}));
  check->add_flag("--direct-sum", check_opt.direct_sum, "Use the direct-sum PCM mode");
  check->add_flag("--equal-edge-weights", check_opt.equal_edge_weights, "Experimental equal-edge-weight structure");
  check->add_option("--max-iters", check_opt.max_iters, "Iteration cap override");
  check->add_option("--exact-cap", check_opt.exact_cap, "Largest PCM dimension for the exact engine");
  check->add_option("--trace", check_opt.trace_path, "Write per-iteration trace records to this file");

  CheckOptions fp_opt;
  CLI::App* findp = app.add_subcommand("find-perm", "Recover a permutation between p-similar matrices");
  findp->add_option("a", fp_opt.path_a, "First matrix/graph file")->required();
  findp->add_option("b", fp_opt.path_b, "Second matrix/graph file")->required();
  findp->add_option("--format", fp_opt.format, "Input format override");
  findp->add_option("--engine", fp_opt.engine, "exact | primes")->check(CLI::IsMember({"exact", "primes"}));
  findp->add_option("--mix", fp_opt.mix, "diag | column")->check(CLI::IsMember({"diag", "column"}));
  findp->add_option("--max-iters", fp_opt.max_iters, "Iteration cap override");
  findp->add_option("--exact-cap", fp_opt.exact_cap, "Largest PCM dimension for the exact engine");

  std::string orbit_path, orbit_format;
  Index orbit_cap = 9;
  CLI::App* orbits = app.add_subcommand("orbits", "Brute-force orbit partition of the input's locations");
  orbits->add_option("m", orbit_path, "Matrix/graph file")->required();
  orbits->add_option("--format", orbit_format, "Input format override");
  orbits->add_option("--cap", orbit_cap, "Brute-force dimension cap");

  std::string espp_path, espp_format;
  Index espp_cap = 30;
  CLI::App* espp = app.add_subcommand("espp", "Stacked-powers eigenspace projector pattern");
  espp->add_option("m", espp_path, "Matrix/graph file")->required();
  espp->add_option("--format", espp_format, "Input format override");
  espp->add_option("--cap", espp_cap, "Exact-powers dimension cap");

  std::string wspm_path, wspm_format;
  CLI::App* wspmv = app.add_subcommand("wspm-verify", "Widely-spaced-primes theorem checks on one matrix");
  wspmv->add_option("m", wspm_path, "Matrix/graph file")->required();
  wspmv->add_option("--format", wspm_format, "Input format override");

  ValidateConfig vcfg;
  CLI::App* validate = app.add_subcommand("validate", "Randomized + exhaustive validation campaigns");
  validate->add_option("--cap", vcfg.cap, "Exhaustive graph size cap");
  validate->add_option("--seed", vcfg.seed, "Random seed");
  validate->add_option("--trials", vcfg.trials, "Trials per randomized campaign");
  validate->add_option("--bliss-dir", vcfg.bliss_dir, "Directory holding had-sw-32-1/-2");
  validate->add_option("--artifacts", vcfg.artifact_dir, "Directory for counterexample payloads");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return run_check(check_opt);
    if (findp->parsed()) return run_find_perm(fp_opt);
    if (orbits->parsed()) return run_orbits(orbit_path, orbit_format, orbit_cap);
    if (espp->parsed()) return run_espp(espp_path, espp_format, espp_cap);
    if (wspmv->parsed()) return run_wspm_verify(wspm_path, wspm_format);
    if (validate->parsed()) return run_validate(vcfg);
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const internal_error& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}
