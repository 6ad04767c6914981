#include "cotlar_lab/cli.hpp"

#include <array>
#include <fstream>
#include <sstream>
#include <utility>

#include <fmt/format.h>

#include "cotlar_lab/ank.hpp"
#include "cotlar_lab/cotlar.hpp"
#include "cotlar_lab/lemmas.hpp"
#include "cotlar_lab/psl2.hpp"
#include "cotlar_lab/replay.hpp"
#include "cotlar_lab/symbol.hpp"

namespace cotlab::cli {

namespace {

constexpr std::array<std::pair<Command, const char*>, 10> kCommands{{
    {Command::VerifyTheoremB, "verify-theorem-b"},
    {Command::VerifyCotlar, "verify-cotlar"},
    {Command::VerifyInvariance, "verify-invariance"},
    {Command::VerifyLemmas, "verify-lemmas"},
    {Command::VerifyProofTerms, "verify-proof-terms"},
    {Command::CounterexampleBianchi, "counterexample-bianchi"},
    {Command::AnkRoundtrip, "ank-roundtrip"},
    {Command::NormExperiment, "norm-experiment"},
    {Command::Enumerate, "enumerate"},
    {Command::Replay, "replay"},
}};

/// Raised for configuration problems that map to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string box_label(RingParam ring, int bound) {
  return fmt::format("{} box B={}", describe(ring), bound);
}

ExecOptions exec_options(const RunConfig& c) {
  return {resolve_threads(c.threads), c.seed, c.max_witnesses};
}

CheckReport run_invariance(RingParam ring, const RunConfig& c, const ExecOptions& opts) {
  const CheckReport sections[] = {
      verify_invariance(ring, c.bound, opts),
      verify_character(ring, c.bound, opts),
      verify_g0_invariance(c.samples, c.tol, opts),
      verify_psu2_invariance(c.samples, c.tol, opts),
  };
  return merge_sections("invariance", box_label(ring, c.bound) +
                                          fmt::format("; {} float samples", c.samples),
                        sections, opts.max_witnesses);
}

CheckReport run_lemmas(RingParam ring, const RunConfig& c, const ExecOptions& opts) {
  std::vector<CheckReport> sections;
  json skipped = json::array();
  sections.push_back(verify_zero_set_lemma(ring, c.bound, opts));
  sections.push_back(verify_zero_shape_lemma(ring, c.bound, opts));
  sections.push_back(verify_lemma21(ring, c.bound, c.samples, c.tol, opts));
  if (ring.is_full()) {
    sections.push_back(verify_lemma32(ring, c.bound, c.samples, c.tol, opts));
    sections.push_back(verify_lemma34(ring, c.bound, opts));
  } else {
    skipped.push_back("lemma32");
    skipped.push_back("lemma34");
  }
  sections.push_back(verify_lemma23(c.samples, c.tol, opts));
  if (!ring.is_full()) {
    std::optional<ProjMat> l;
    for (const auto& g : enumerate(ring, c.bound, opts.threads)) {
      if (kernel_class(g) == KernelClass::LPlus) {
        l = g;
        break;
      }
    }
    if (l) {
      sections.push_back(verify_remark_formula(*l, c.samples, c.tol, opts));
    } else {
      skipped.push_back("remark-formula");
    }
    sections.push_back(verify_linverse_outside_kernel(ring, c.bound, opts));
  }
  CheckReport r = merge_sections("lemmas", box_label(ring, c.bound) +
                                               fmt::format("; {} float samples", c.samples),
                                 sections, opts.max_witnesses);
  r.stats["skipped_sections"] = std::move(skipped);
  return r;
}

CheckReport run_ank(RingParam ring, const RunConfig& c, const ExecOptions& opts) {
  const CheckReport sections[] = {
      verify_ank_roundtrip(c.samples, c.tol, opts),
      verify_ank_lattice(ring, c.bound, c.tol, opts),
  };
  return merge_sections("ank", "float samples and lattice box", sections, opts.max_witnesses);
}

CheckReport run_enumerate(RingParam ring, const RunConfig& c, const ExecOptions& opts) {
  CheckReport r;
  const auto elems = enumerate(ring, c.bound, opts.threads);
  r.check = "enumerate";
  r.universe = box_label(ring, c.bound);
  r.total_checked = elems.size();
  json list = json::array();
  for (const auto& g : elems) list.push_back(format_matrix(g));
  r.stats["count"] = elems.size();
  r.stats["elements"] = std::move(list);
  return r;
}

CheckReport run_replay(const RunConfig& c) {
  if (c.input.empty()) throw UsageError("replay needs --input <report.json>");
  std::ifstream in(c.input);
  if (!in) throw UsageError("cannot open replay input '" + c.input + "'");
  json report;
  try {
    report = json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("replay input is not valid JSON: ") + e.what());
  }
  const ReplayOutcome outcome = replay_report(report, c.tol);
  CheckReport r;
  r.check = "replay";
  r.universe = "violations and witness of " + report.value("check", std::string("?"));
  r.total_checked = outcome.replayed;
  for (const auto& d : outcome.details) {
    if (!d["match"].get<bool>()) r.add_violation({{d["check"].get<std::string>()}, d}, c.max_witnesses);
  }
  r.stats["skipped"] = outcome.skipped;
  r.stats["details"] = outcome.details;
  return r;
}

/// Exit code for a finished report: Bianchi succeeds on a witness, the rest on zero violations.
int exit_code_for(Command cmd, const CheckReport& r) {
  if (cmd == Command::CounterexampleBianchi) return r.witness ? 0 : 1;
  return r.passed() ? 0 : 1;
}

CheckReport dispatch(const RunConfig& c) {
  if (c.command == Command::Replay) return run_replay(c);
  if (c.bound < 1) throw UsageError("--bound must be >= 1");
  const RingParam ring = RingParam::make(c.n, c.kind);
  const ExecOptions opts = exec_options(c);
  switch (c.command) {
    case Command::VerifyTheoremB: return verify_theorem_b(ring, c.bound, opts);
    case Command::VerifyCotlar: {
      CotlarOptions co;
      co.bound = c.bound;
      co.pair_budget = c.pair_budget;
      return verify_cotlar(ring, co, opts);
    }
    case Command::VerifyInvariance: return timed([&] { return run_invariance(ring, c, opts); });
    case Command::VerifyLemmas: return timed([&] { return run_lemmas(ring, c, opts); });
    case Command::VerifyProofTerms:
      return verify_proof_terms(ring, c.bound, c.samples, c.tol, opts);
    case Command::CounterexampleBianchi: return run_bianchi_search(ring, c.bound, opts);
    case Command::AnkRoundtrip: return timed([&] { return run_ank(ring, c, opts); });
    case Command::NormExperiment: {
      NormExperimentOptions no;
      no.ks = c.ks;
      no.trials = c.trials;
      no.support_size = c.support_size;
      no.bound = c.bound;
      no.budget = c.support_budget;
      return norm_ratio_experiment(ring, no, opts);
    }
    case Command::Enumerate: return timed([&] { return run_enumerate(ring, c, opts); });
    case Command::Replay: break;
  }
  throw UsageError("unhandled command");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string join_inputs(const json& inputs) {
  std::string out;
  for (const auto& s : inputs) {
    if (!out.empty()) out += " | ";
    out += s.get<std::string>();
  }
  return out;
}

}  // namespace

std::string to_string(Command c) {
  for (const auto& [cmd, name] : kCommands) {
    if (cmd == c) return name;
  }
  return "?";
}

std::optional<Command> parse_command(const std::string& s) {
  for (const auto& [cmd, name] : kCommands) {
    if (s == name) return cmd;
  }
  return std::nullopt;
}

std::vector<std::string> command_names() {
  std::vector<std::string> out;
  for (const auto& [cmd, name] : kCommands) out.emplace_back(name);
  return out;
}

std::string to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Text: return "text";
  }
  return "?";
}

std::optional<OutputFormat> parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "text") return OutputFormat::Text;
  return std::nullopt;
}

json config_echo(const RunConfig& c) {
  json j = {{"command", to_string(c.command)},
            {"n", c.n},
            {"kind", cotlab::to_string(c.kind)},
            {"bound", c.bound},
            {"pair_budget", c.pair_budget},
            {"samples", c.samples},
            {"seed", c.seed},
            {"tol", c.tol},
            {"max_witnesses", c.max_witnesses}};
  if (c.command == Command::NormExperiment) {
    j["ks"] = c.ks;
    j["trials"] = c.trials;
    j["support_size"] = c.support_size;
    j["support_budget"] = c.support_budget;
  }
  if (c.command == Command::Replay) j["input"] = c.input;
  return j;
}

RunResult run(const RunConfig& config) {
  RunResult result;
  try {
    const CheckReport r = dispatch(config);
    json doc = report_body(r);
    doc["config"] = config_echo(config);
    doc["elapsed_ms"] = r.elapsed.count();
    doc["version"] = kVersion;
    result.exit_code = exit_code_for(config.command, r);
    result.rendered = render(doc, config.format);
    result.document = std::move(doc);
  } catch (const UsageError& e) {
    result.exit_code = 2;
    result.rendered = e.what();
  } catch (const std::invalid_argument& e) {
    result.exit_code = 2;
    result.rendered = e.what();
  } catch (const PreconditionError& e) {
    result.exit_code = 2;
    result.rendered = e.what();
  } catch (const SupportBudgetError& e) {
    result.exit_code = 2;
    result.rendered = e.what();
  }
  return result;
}

std::string render(const json& doc, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: return doc.dump(2) + "\n";
    case OutputFormat::Csv: {
      std::ostringstream out;
      out << "row,check,total_checked,violation_count,detail\n";
      out << "summary," << csv_field(doc["check"].get<std::string>()) << ','
          << doc["total_checked"] << ',' << doc["violation_count"] << ','
          << csv_field(doc["universe"].get<std::string>()) << '\n';
      if (doc["stats"].contains("sections")) {
        for (const auto& [name, s] : doc["stats"]["sections"].items()) {
          out << "section," << csv_field(name) << ',' << s["total_checked"] << ','
              << s["violation_count"] << ',' << csv_field(s["universe"].get<std::string>()) << '\n';
        }
      }
      for (const auto& v : doc["violations"]) {
        const std::string check = v["observed"].value("check", doc["check"].get<std::string>());
        out << "violation," << csv_field(check) << ",,,"
            << csv_field(join_inputs(v["inputs"]) + " -> " + v["observed"].dump()) << '\n';
      }
      if (!doc["witness"].is_null()) {
        out << "witness," << csv_field(doc["check"].get<std::string>()) << ",,,"
            << csv_field(join_inputs(doc["witness"]["inputs"]) + " -> " +
                         doc["witness"]["observed"].dump())
            << '\n';
      }
      return out.str();
    }
    case OutputFormat::Text: {
      std::ostringstream out;
      out << "check:           " << doc["check"].get<std::string>() << '\n'
          << "universe:        " << doc["universe"].get<std::string>() << '\n'
          << "total_checked:   " << doc["total_checked"] << '\n'
          << "violation_count: " << doc["violation_count"] << '\n';
      if (doc["stats"].contains("sections")) {
        for (const auto& [name, s] : doc["stats"]["sections"].items()) {
          out << fmt::format("  {:<26} checked {:>9}  violations {}\n", name,
                             s["total_checked"].get<std::uint64_t>(),
                             s["violation_count"].get<std::uint64_t>());
        }
      }
      for (const auto& v : doc["violations"]) {
        out << "  violation: " << join_inputs(v["inputs"]) << "\n    observed: "
            << v["observed"].dump() << '\n';
      }
      if (!doc["witness"].is_null()) {
        out << "witness: " << join_inputs(doc["witness"]["inputs"]) << "\n  observed: "
            << doc["witness"]["observed"].dump() << '\n';
      }
      out << "elapsed_ms:      " << doc["elapsed_ms"] << '\n';
      return out.str();
    }
  }
  return {};
}

}  // namespace cotlab::cli
