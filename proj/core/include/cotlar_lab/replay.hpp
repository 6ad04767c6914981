#pragma once

// Recomputes recorded observations from their serialized inputs.

#include <string>
#include <vector>

#include "cotlar_lab/report.hpp"

namespace cotlab {

/// Check names with a registered recompute function.
std::vector<std::string> replayable_checks();

/// Recomputes the observed block for one recorded input tuple. Throws
/// std::invalid_argument for an unknown check or malformed inputs.
json replay_observation(const std::string& check, const std::vector<std::string>& inputs,
                        double tol);

struct ReplayOutcome {
  std::uint64_t replayed = 0;
  std::uint64_t mismatched = 0;
  std::uint64_t skipped = 0;  // entries with no inputs, e.g. "no witness found"
  json details = json::array();

  bool ok() const { return mismatched == 0; }
};

/// Replays every violation and the witness block of a report (as produced by
/// report_body, optionally with a "config" echo). tol comes from the observed
/// block, then config.tol, then default_tol.
ReplayOutcome replay_report(const json& report, double default_tol = 1e-9);

}  // namespace cotlab
