#pragma once

#include "permsim/bpsay.hpp"

#include <string>
#include <vector>

namespace permsim {

struct ValidateConfig {
  Index cap = 5;          // exhaustive graph size for verdict/orbit campaigns
  std::uint64_t seed = 0;
  Index trials = 100;     // randomized trials per campaign
  std::string bliss_dir;  // optional: directory holding had-sw-32-1/-2
  std::string artifact_dir = ".";  // where counterexample payloads are written
};

struct CampaignResult {
  std::string name;
  Index checks = 0;
  Index failures = 0;
  std::vector<std::string> notes;
};

struct ValidateReport {
  ValidateConfig config;
  std::vector<CampaignResult> campaigns;
  std::vector<std::string> counterexample_files;
  Index max_iterations_observed = 0;

  bool pass() const {
    for (const auto& c : campaigns)
      if (c.failures > 0) return false;
    return true;
  }
};

/// Randomized + exhaustive validation campaigns: permuted pairs decide true,
/// verdicts match brute force, recovered permutations verify, stable PCM
/// patterns equal lifted orbit partitions, and the widely-spaced-primes
/// theorems hold. Any counterexample is serialized to disk and fails the
/// report.
ValidateReport validate_corpus(const ValidateConfig& cfg);

std::string report_to_json(const ValidateReport& r);

}  // namespace permsim
