#include <doctest.h>

#include "permsim/bpsay.hpp"
#include "permsim/graphs.hpp"
#include "permsim/io.hpp"
#include "permsim/validate.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace permsim;

namespace {

std::string to_dimacs(const SymbolMatrix& g) {
  std::ostringstream os;
  Index edges = 0;
  for (Index i = 0; i < g.rows(); ++i)
    for (Index j = i + 1; j < g.rows(); ++j)
      if (g(i, j)) ++edges;
  os << "p edge " << g.rows() << " " << edges << "\n";
  for (Index i = 0; i < g.rows(); ++i)
    for (Index j = i + 1; j < g.rows(); ++j)
      if (g(i, j)) os << "e " << i + 1 << " " << j + 1 << "\n";
  return os.str();
}

}  // namespace

TEST_CASE("a small validation run passes and reports its configuration") {
  ValidateConfig cfg;
  cfg.cap = 4;
  cfg.trials = 10;
  cfg.seed = 3;
  cfg.artifact_dir = std::filesystem::temp_directory_path().string();
  const ValidateReport report = validate_corpus(cfg);
  CHECK(report.pass());
  CHECK(report.campaigns.size() == 5);
  for (const auto& c : report.campaigns) {
    CHECK(c.checks > 0);
    CHECK(c.failures == 0);
  }
  const std::string json = report_to_json(report);
  CHECK(json.find("\"pass\": true") != std::string::npos);
  CHECK(json.find("\"seed\": 3") != std::string::npos);
}

TEST_CASE("the bliss-directory hook separates a supplied hard pair in numeric mode") {
  // Stand-in pair with the expected file naming: the rook's graph and the
  // Shrikhande graph, written as DIMACS.
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "permsim_bliss_test";
  fs::create_directories(dir);
  std::ofstream(dir / "had-sw-32-1.dimacs") << to_dimacs(rook_graph_4x4());
  std::ofstream(dir / "had-sw-32-2.dimacs") << to_dimacs(shrikhande_graph());

  ValidateConfig cfg;
  cfg.cap = 2;
  cfg.trials = 2;
  cfg.seed = 0;
  cfg.bliss_dir = dir.string();
  cfg.artifact_dir = fs::temp_directory_path().string();
  const ValidateReport report = validate_corpus(cfg);
  bool found = false;
  for (const auto& c : report.campaigns)
    if (c.name == "bliss-had-sw-32") {
      found = true;
      CHECK(c.checks == 1);
      CHECK(c.failures == 0);
    }
  CHECK(found);
}

TEST_CASE("the numeric engine separates the strongly regular pair within four iterations") {
  BpsayConfig cfg;
  cfg.engine = Engine::numeric_primes;
  const BpsayResult r = check_psim(rook_graph_4x4(), shrikhande_graph(), cfg);
  REQUIRE(r.verdict == Verdict::not_psim);
  REQUIRE(r.divergence_iter.has_value());
  CHECK(*r.divergence_iter <= 4);
}

TEST_CASE("squaring results are identical across thread counts") {
  Rng rng(241);
  const SymbolMatrix g = random_graph(6, 0.5, rng);
  setenv("PERMSIM_THREADS", "4", 1);
  const BpsayResult threaded = check_psim(g, g);
  setenv("PERMSIM_THREADS", "1", 1);
  const BpsayResult serial = check_psim(g, g);
  unsetenv("PERMSIM_THREADS");
  REQUIRE(threaded.trace.size() == serial.trace.size());
  for (std::size_t k = 0; k < serial.trace.size(); ++k) {
    CHECK(threaded.trace[k].symbols_s == serial.trace[k].symbols_s);
    CHECK(threaded.trace[k].mix_digest_s == serial.trace[k].mix_digest_s);
  }
}
