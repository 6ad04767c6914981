#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cotlar_lab/cli.hpp"

int main(int argc, char** argv) {
  using namespace cotlab::cli;
  RunConfig config;
  std::string command, kind = "full", format = "json";

  CLI::App app{"Exact verification of the Hilbert-transform symbol on PSL2 lattices"};
  app.set_version_flag("--version", std::string(kVersion));
  std::string names;
  for (const auto& n : command_names()) names += (names.empty() ? "" : "|") + n;
  app.add_option("command", command, names)->required()->check(CLI::IsMember(command_names()));
  app.add_option("--n", config.n, "Ring parameter n >= 1")->capture_default_str();
  app.add_option("--kind", kind, "full: Z[sqrt(-n)], max: maximal order (n = 3 mod 4)")
      ->check(CLI::IsMember({"full", "max"}))
      ->capture_default_str();
  app.add_option("--bound", config.bound, "Enumeration box B")->capture_default_str();
  app.add_option("--pair-budget", config.pair_budget, "Minimum Cotlar pairs")->capture_default_str();
  app.add_option("--samples", config.samples, "Float samples / sampled pairs")->capture_default_str();
  app.add_option("--seed", config.seed, "Master seed")->capture_default_str();
  app.add_option("--tol", config.tol, "Float tolerance")->capture_default_str();
  app.add_option("--threads", config.threads, "Workers (0: COTLAR_LAB_THREADS or all cores)")
      ->capture_default_str();
  app.add_option("--format", format, "json|csv|text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--output", config.output, "Report file (default stdout)");
  app.add_option("--max-witnesses", config.max_witnesses, "Violations kept in the report")
      ->capture_default_str();
  app.add_option("--ks", config.ks, "norm-experiment: moment orders k (p = 2k)")->capture_default_str();
  app.add_option("--trials", config.trials, "norm-experiment: random elements")->capture_default_str();
  app.add_option("--support-size", config.support_size, "norm-experiment: support per element")
      ->capture_default_str();
  app.add_option("--budget", config.support_budget, "norm-experiment: support-size budget")
      ->capture_default_str();
  app.add_option("--input", config.input, "replay: report JSON to re-verify");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  config.command = *parse_command(command);
  config.kind = kind == "max" ? cotlab::RingKind::MaximalOrder : cotlab::RingKind::Full;
  config.format = *parse_format(format);

  const RunResult result = run(config);
  if (result.document.is_null()) {
    std::cerr << "error: " << result.rendered << '\n';
    return result.exit_code;
  }
  if (config.output.empty()) {
    std::cout << result.rendered;
  } else {
    std::ofstream out(config.output, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write '" << config.output << "'\n";
      return 2;
    }
    out << result.rendered;
  }
  return result.exit_code;
}
