#pragma once

#include "pcorr/density.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pcorr {

/// Knobs shared by the self-check suites. Unset values fall back to each
/// suite's own defaults.
struct SuiteOptions {
  std::optional<unsigned long> p;
  std::optional<unsigned> m;
  std::optional<unsigned> n;
  std::uint64_t seed = 20240601;
  std::uint64_t trials = 1000;
  unsigned threads = 1;
  BigInt budget = kDefaultBudget;
};

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// theorem1, gl-ratio, oracles, smith, newton, rem-stability, orbit, random-uv, proot
const std::vector<std::string>& suite_names();

/// Runs one suite ("all" is not accepted here; iterate suite_names()).
/// Throws std::invalid_argument for unknown names.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace pcorr
