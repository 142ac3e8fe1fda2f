#pragma once

// The `verify` bundle: runs the named checks on one (type, p) and collects
// their JSON reports in a single document.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "chevalley/verifier.hpp"

namespace chevalley {

const std::vector<std::string>& all_suites();

struct SuiteRun {
  nlohmann::json document;
  std::string text;
  bool failed = false;
};

std::string text_line(const ViolationReport& r);

// Empty `suites` means every applicable suite; naming a rank-2-only suite
// outside its regime is a Refusal. The graded check runs trials/100
// families, at least one.
SuiteRun run_verify_suites(const RootSystemSpec& spec, std::uint32_t p, const std::vector<std::string>& suites,
                           const TrialConfig& cfg, int graded_n);

}  // namespace chevalley
