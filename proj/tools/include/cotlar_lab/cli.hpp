#pragma once

// Command dispatch behind the cotlar-lab executable.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cotlar_lab/ncfourier.hpp"
#include "cotlar_lab/quadring.hpp"
#include "cotlar_lab/report.hpp"

namespace cotlab::cli {

inline constexpr const char* kVersion = "0.1.0";

enum class Command {
  VerifyTheoremB,
  VerifyCotlar,
  VerifyInvariance,
  VerifyLemmas,
  VerifyProofTerms,
  CounterexampleBianchi,
  AnkRoundtrip,
  NormExperiment,
  Enumerate,
  Replay,
};

enum class OutputFormat { Json, Csv, Text };

std::string to_string(Command c);
std::optional<Command> parse_command(const std::string& s);
std::vector<std::string> command_names();

std::string to_string(OutputFormat f);
std::optional<OutputFormat> parse_format(const std::string& s);

struct RunConfig {
  Command command = Command::VerifyTheoremB;
  std::int64_t n = 1;
  RingKind kind = RingKind::Full;
  int bound = 2;
  std::uint64_t pair_budget = 1'000'000;
  std::uint64_t samples = 100'000;
  std::uint64_t seed = 42;
  double tol = 1e-9;
  OutputFormat format = OutputFormat::Json;
  std::string output;  // empty: stdout
  unsigned threads = 0;  // 0: COTLAR_LAB_THREADS, then hardware concurrency
  std::size_t max_witnesses = 32;

  // norm-experiment
  std::vector<int> ks{1, 2, 3};
  std::uint64_t trials = 100;
  std::size_t support_size = 20;
  std::size_t support_budget = kDefaultSupportBudget;

  // replay
  std::string input;
};

struct RunResult {
  int exit_code = 0;      // 0 pass or witness found, 1 violations, 2 usage/config error
  json document;          // report body + config + elapsed_ms + version; null on error
  std::string rendered;   // document in the requested format, or the error message
};

/// Echo of the settings that affect the result (threads excluded).
json config_echo(const RunConfig& config);

RunResult run(const RunConfig& config);

std::string render(const json& document, OutputFormat format);

}  // namespace cotlab::cli
