#include "cotlar_lab/report.hpp"

namespace cotlab {

void CheckReport::add_violation(Violation v, std::size_t max_witnesses) {
  ++violation_count;
  if (violations.size() < max_witnesses) violations.push_back(std::move(v));
}

void CheckReport::absorb(const CheckReport& other, std::size_t max_witnesses) {
  total_checked += other.total_checked;
  violation_count += other.violation_count;
  for (const auto& v : other.violations) {
    if (violations.size() >= max_witnesses) break;
    violations.push_back(v);
  }
}

CheckReport merge_sections(std::string check, std::string universe,
                           std::span<const CheckReport> sections, std::size_t max_witnesses) {
  CheckReport out;
  out.check = std::move(check);
  out.universe = std::move(universe);
  json section_stats = json::object();
  for (const auto& s : sections) {
    out.total_checked += s.total_checked;
    out.violation_count += s.violation_count;
    for (const auto& v : s.violations) {
      if (out.violations.size() >= max_witnesses) break;
      Violation tagged = v;
      if (!tagged.observed.contains("check")) tagged.observed["check"] = s.check;
      out.violations.push_back(std::move(tagged));
    }
    json entry = {{"universe", s.universe},
                  {"total_checked", s.total_checked},
                  {"violation_count", s.violation_count},
                  {"stats", s.stats}};
    if (s.witness) entry["witness"] = *s.witness;
    section_stats[s.check] = std::move(entry);
    out.elapsed += s.elapsed;
  }
  out.stats["sections"] = std::move(section_stats);
  return out;
}

json violation_to_json(const Violation& v) {
  return {{"inputs", v.inputs}, {"observed", v.observed}};
}

Violation violation_from_json(const json& j) {
  return {j.at("inputs").get<std::vector<std::string>>(), j.at("observed")};
}

json report_body(const CheckReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) violations.push_back(violation_to_json(v));
  return {{"check", r.check},
          {"universe", r.universe},
          {"total_checked", r.total_checked},
          {"violation_count", r.violation_count},
          {"violations", std::move(violations)},
          {"witness", r.witness ? *r.witness : json(nullptr)},
          {"stats", r.stats}};
}

}  // namespace cotlab
