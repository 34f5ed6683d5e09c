#include "permsim/validate.hpp"

#include "permsim/findperm.hpp"
#include "permsim/graphs.hpp"
#include "permsim/io.hpp"
#include "permsim/oracle.hpp"
#include "permsim/pcm.hpp"
#include "permsim/substitute.hpp"
#include "permsim/symsqr.hpp"
#include "permsim/wspm.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>

namespace permsim {
namespace {

using nlohmann::json;

struct Recorder {
  ValidateReport& report;
  CampaignResult current;

  void begin(const std::string& name) { current = CampaignResult{name, 0, 0, {}}; }
  void check(bool ok, const std::string& note, const SymbolMatrix* a = nullptr, const SymbolMatrix* b = nullptr) {
    ++current.checks;
    if (ok) return;
    ++current.failures;
    current.notes.push_back(note);
    if (a != nullptr) {
      const std::string stem = report.config.artifact_dir + "/counterexample_" +
                               std::to_string(report.counterexample_files.size());
      std::ofstream out(stem + "_a.mtx");
      out << to_matrix_market(*a);
      report.counterexample_files.push_back(stem + "_a.mtx");
      if (b != nullptr) {
        std::ofstream outb(stem + "_b.mtx");
        outb << to_matrix_market(*b);
        report.counterexample_files.push_back(stem + "_b.mtx");
      }
    }
  }
  void end() { report.campaigns.push_back(current); }
};

void observe(ValidateReport& report, const BpsayResult& r) {
  report.max_iterations_observed = std::max(report.max_iterations_observed, r.iterations);
}

}  // namespace

ValidateReport validate_corpus(const ValidateConfig& cfg) {
  ValidateReport report;
  report.config = cfg;
  Recorder rec{report, {}};
  Rng rng(cfg.seed);

  // (a) permuted pairs always decide p-similar.
  rec.begin("permuted-pairs-decide-true");
  for (Index trial = 0; trial < cfg.trials; ++trial) {
    const Index m = 2 + static_cast<Index>(rng() % 5);
    const SymbolMatrix a = (trial % 2 == 0) ? random_graph(m, 0.5, rng) : random_symbol_matrix(m, 4, rng);
    const SymbolMatrix b = symmetric_permute(a, random_perm(m, rng));
    const BpsayResult r = check_psim(a, b);
    observe(report, r);
    rec.check(r.psim(), "permuted pair declared non-p-similar (m=" + std::to_string(m) + ")", &a, &b);
  }
  rec.end();

  // (b) verdict equals brute force on exhaustive small classes plus random pairs.
  rec.begin("verdict-matches-brute-force");
  for (Index n = 2; n <= std::min<Index>(cfg.cap, 5); ++n) {
    const auto reps = nonisomorphic_graphs(n);
    for (std::size_t x = 0; x < reps.size(); ++x)
      for (std::size_t y = x + 1; y < reps.size(); ++y) {
        const BpsayResult r = check_psim(reps[x], reps[y]);
        observe(report, r);
        const bool brute = brute_psim(reps[x], reps[y]).psim;
        rec.check(r.psim() == brute, "verdict mismatch on class pair n=" + std::to_string(n), &reps[x], &reps[y]);
      }
  }
  for (Index trial = 0; trial < cfg.trials; ++trial) {
    const Index m = 4 + static_cast<Index>(rng() % 4);
    const SymbolMatrix a = random_graph(m, 0.5, rng);
    const SymbolMatrix b = (trial % 3 == 0) ? symmetric_permute(a, random_perm(m, rng)) : random_graph(m, 0.5, rng);
    const BpsayResult r = check_psim(a, b);
    observe(report, r);
    const bool brute = brute_psim(a, b).psim;
    rec.check(r.psim() == brute, "verdict mismatch on random pair m=" + std::to_string(m), &a, &b);
  }
  rec.end();

  // (c) recovered permutations verify and respect the call budget.
  rec.begin("find-permutation-witness");
  for (Index trial = 0; trial < cfg.trials; ++trial) {
    const Index m = 2 + static_cast<Index>(rng() % 7);
    const SymbolMatrix a = (trial % 2 == 0) ? random_graph(m, 0.5, rng) : random_symbol_matrix(m, 5, rng);
    const SymbolMatrix b = symmetric_permute(a, random_perm(m, rng));
    try {
      const FindPermResult r = find_permutation(a, b);
      const bool budget = r.bpsay_calls - 1 <= m * (m - 1) / 2 + 1;  // nested-loop probes
      rec.check(r.psim() && r.verified && budget,
                "witness failed (verified=" + std::to_string(r.verified) +
                    ", calls=" + std::to_string(r.bpsay_calls) + ", m=" + std::to_string(m) + ")",
                &a, &b);
    } catch (const internal_error& e) {
      rec.check(false, std::string("internal contradiction: ") + e.what(), &a, &b);
    }
  }
  rec.end();

  // (d) stable PCM patterns equal the lifted orbit partitions.
  rec.begin("stable-pattern-equals-orbits");
  for (Index n = 1; n <= std::min<Index>(cfg.cap, 5); ++n) {
    for (const SymbolMatrix& g : all_graphs(n)) {
      const SymbolMatrix pcm = build_pcm(color_matrix(consistent_substitute(g)));
      const RefineTrace refine = refine_to_stable(pcm);
      const Pattern orbits = lifted_pcm_orbit_pattern(g);
      rec.check(refine.stable_pattern == orbits, "stable pattern differs from orbit partition (n=" + std::to_string(n) + ")",
                &g);
      report.max_iterations_observed =
          std::max(report.max_iterations_observed, static_cast<Index>(refine.symbol_counts.size()) - 1);
    }
  }
  rec.end();

  // (e) widely-spaced-primes theorems.
  rec.begin("wspm-theorems");
  for (Index trial = 0; trial < cfg.trials; ++trial) {
    const Index m = 2 + static_cast<Index>(rng() % 3);
    const Index n1 = 1 + static_cast<Index>(rng() % 3);
    const Index n2 = 1 + static_cast<Index>(rng() % 2);
    const SymbolMatrix mat = random_diag_distinct_symmetric(m, n1, n2, rng);
    const WspMatrix w = build_wspm(mat);
    const Pattern pw = pattern_of<BigInt>(w.w);
    const Pattern pm = pattern_of<SymbolId>(mat);
    const Pattern sq = wspm_square_refine(w);
    const SymbolMatrix sym = sym_sub(sym_sqr(mat), DiagOffset::plain);
    const bool same_pattern = (pw == pm);
    const bool refines_ok = refines(sq, pw);
    const bool diag_ok = diagonal_classes<BigInt>(big_product(w.w, w.w)) == diagonal_classes<SymbolId>(sym);
    const bool pair_ok = wspm_pair_refine(mat) == pattern_of<SymbolId>(sym);
    rec.check(same_pattern && refines_ok && diag_ok && pair_ok,
              "wspm theorem failure (pattern=" + std::to_string(same_pattern) + " refine=" + std::to_string(refines_ok) +
                  " diag=" + std::to_string(diag_ok) + " pair=" + std::to_string(pair_ok) + ")",
              &mat);
  }
  rec.end();

  // (f) optional: supplied Bliss pair separated in numeric mode.
  if (!cfg.bliss_dir.empty()) {
    rec.begin("bliss-had-sw-32");
    namespace fs = std::filesystem;
    std::string f1, f2;
    if (fs::exists(cfg.bliss_dir))
      for (const auto& entry : fs::directory_iterator(cfg.bliss_dir)) {
        const std::string name = entry.path().filename().string();
        if (name.rfind("had-sw-32-1", 0) == 0) f1 = entry.path().string();
        if (name.rfind("had-sw-32-2", 0) == 0) f2 = entry.path().string();
      }
    if (f1.empty() || f2.empty()) {
      rec.current.notes.push_back("had-sw-32-1/-2 not found; skipped");
    } else {
      const InputDocument a = parse_input(f1);
      const InputDocument b = parse_input(f2);
      BpsayConfig bc;
      bc.engine = Engine::numeric_primes;
      const BpsayResult r = check_psim(a.tokens, b.tokens, bc);
      observe(report, r);
      rec.check(r.verdict == Verdict::not_psim && r.divergence_iter && *r.divergence_iter <= 4,
                "had-sw-32 pair not separated within four iterations");
    }
    rec.end();
  }

  return report;
}

std::string report_to_json(const ValidateReport& r) {
  json j;
  j["command"] = "validate";
  j["seed"] = r.config.seed;
  j["cap"] = r.config.cap;
  j["trials"] = r.config.trials;
  j["pass"] = r.pass();
  j["max_iterations_observed"] = r.max_iterations_observed;
  j["campaigns"] = json::array();
  for (const auto& c : r.campaigns) {
    json cj;
    cj["name"] = c.name;
    cj["checks"] = c.checks;
    cj["failures"] = c.failures;
    cj["notes"] = c.notes;
    j["campaigns"].push_back(cj);
  }
  j["counterexample_files"] = r.counterexample_files;
  return j.dump(2);
}

}  // namespace permsim
