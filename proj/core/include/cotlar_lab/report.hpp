#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace cotlab {

using json = nlohmann::json;

/// A failing input: serialized arguments plus what was observed on them.
struct Violation {
  std::vector<std::string> inputs;
  json observed;
};

struct CheckReport {
  std::string check;
  std::string universe;
  std::uint64_t total_checked = 0;
  std::uint64_t violation_count = 0;  // may exceed violations.size()
  std::vector<Violation> violations;  // first max_witnesses, in universe order
  std::optional<json> witness;
  json stats = json::object();
  std::chrono::milliseconds elapsed{0};

  bool passed() const { return violation_count == 0; }

  void add_violation(Violation v, std::size_t max_witnesses);

  /// Appends other's counts and violations (keeping the first max_witnesses).
  void absorb(const CheckReport& other, std::size_t max_witnesses);
};

/// Combines sub-reports into one. Each untagged violation gets a
/// "check" entry naming its sub-report; per-section counts land in stats.
CheckReport merge_sections(std::string check, std::string universe,
                           std::span<const CheckReport> sections, std::size_t max_witnesses);

json violation_to_json(const Violation& v);
Violation violation_from_json(const json& j);

/// Report body without timing: check, universe, total_checked, violation_count,
/// violations, witness, stats.
json report_body(const CheckReport& r);

/// Runs body() and stores the wall time in the returned report.
template <class Body>
CheckReport timed(Body&& body) {
  const auto start = std::chrono::steady_clock::now();
  CheckReport r = body();
  r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return r;
}

}  // namespace cotlab
