#include "cotlar_lab/ncfourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "scan.hpp"

namespace cotlab {

namespace {

constexpr std::uint64_t kNormStream = 9;
constexpr double kContractionSlack = 1e-12;

}  // namespace

SupportBudgetError::SupportBudgetError(std::size_t size, std::size_t budget)
    : std::length_error(
          fmt::format("support size {} exceeds the budget of {} terms", size, budget)),
      size_(size) {}

NormProfile norm2k(const AlgElem& x, int k, std::size_t budget) {
  NormProfile p;
  p.k = k;
  p.exact_moment = moment(x, k, budget);
  p.value = std::pow(std::max(p.exact_moment, 0.0), 1.0 / (2.0 * k));
  return p;
}

std::string format_alg_elem(const AlgElem& x) {
  std::string out;
  for (const auto& [g, c] : x.terms()) {
    out += fmt::format("{:.17g},{:.17g} : {}\n", c.real(), c.imag(), format_matrix(g));
  }
  return out;
}

AlgElem parse_alg_elem(const std::string& text, RingParam ring) {
  AlgElem x(ring);
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto colon = line.find(" : ");
    if (colon == std::string::npos) {
      throw std::invalid_argument("term must read '<re>,<im> : <matrix>': " + line);
    }
    const std::string coeff = line.substr(0, colon);
    const auto comma = coeff.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("coefficient needs re,im: " + line);
    std::size_t used_re = 0, used_im = 0;
    const std::string re_s = coeff.substr(0, comma);
    const std::string im_s = coeff.substr(comma + 1);
    const double re = std::stod(re_s, &used_re);
    const double im = std::stod(im_s, &used_im);
    if (used_re != re_s.size() || used_im != im_s.size()) {
      throw std::invalid_argument("bad coefficient: " + line);
    }
    std::string mat = line.substr(colon + 3);
    while (!mat.empty() && (mat.back() == '\r' || mat.back() == ' ')) mat.pop_back();
    x.add_term(parse_matrix(mat), {re, im});
  }
  return x;
}

AlgElem random_alg_elem(std::span<const ProjMat> box, std::span<const ProjMat> gens,
                        std::size_t support_size, std::mt19937_64& rng) {
  if (box.empty() && gens.empty()) throw std::invalid_argument("no elements to draw support from");
  const RingParam ring = box.empty() ? gens.front().ring() : box.front().ring();
  std::set<ProjMat> support;
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<std::size_t> length(1, 8);
  std::normal_distribution<double> gauss;
  // Box draws stop mattering once the box is exhausted; words keep the loop finite.
  while (support.size() < support_size) {
    if (!box.empty() && (gens.empty() || coin(rng) == 0)) {
      std::uniform_int_distribution<std::size_t> pick(0, box.size() - 1);
      support.insert(box[pick(rng)]);
    } else {
      support.insert(random_word(gens, length(rng), rng));
    }
  }
  AlgElem x(ring);
  for (const auto& g : support) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    x.add_term(g, {re, im});
  }
  return x;
}

double theory_bound(double p) {
  const double beta = 1.0 + std::log2(1.0 + std::numbers::sqrt2);
  return std::pow(p * p / (p - 1.0), beta);
}

json observe_norm_ratio(const AlgElem& x, int k, std::size_t budget) {
  const NormProfile nx = norm2k(x, k, budget);
  const NormProfile ntx = norm2k(apply_multiplier(x), k, budget);
  const double ratio = nx.value > 0.0 ? ntx.value / nx.value : 0.0;
  const bool ok = k != 1 || ratio <= 1.0 + kContractionSlack;
  return {{"ok", ok}, {"k", k}, {"ratio", ratio}, {"norm_x", nx.value}, {"norm_tx", ntx.value}};
}

CheckReport norm_ratio_experiment(RingParam ring, const NormExperimentOptions& nopts,
                                  const ExecOptions& opts) {
  return timed([&] {
    for (int k : nopts.ks) {
      if (k < 1) throw std::invalid_argument("moment order k must be >= 1");
    }
    const auto box = enumerate(ring, nopts.bound, opts.threads);
    const auto gens = standard_generators(ring);

    struct Trial {
      CheckReport part;
      std::vector<double> ratios;  // one per k
    };
    auto trials = map_chunks<Trial>(
        nopts.trials, resolve_threads(opts.threads), [&](std::size_t t) {
          Trial out;
          auto rng = chunk_rng(opts.seed, kNormStream, t);
          const AlgElem x = random_alg_elem(box, gens, nopts.support_size, rng);
          const std::string text = format_alg_elem(x);
          for (int k : nopts.ks) {
            json obs = observe_norm_ratio(x, k, nopts.budget);
            out.ratios.push_back(obs.at("ratio").get<double>());
            detail::record(out.part, {text, std::to_string(k)}, std::move(obs), opts.max_witnesses);
          }
          return out;
        });

    std::vector<CheckReport> parts;
    parts.reserve(trials.size());
    for (auto& t : trials) parts.push_back(std::move(t.part));
    CheckReport r = detail::fold(
        "norm-experiment",
        fmt::format("{} random elements of {} with support {} (box B={} and words)", nopts.trials,
                    describe(ring), nopts.support_size, nopts.bound),
        parts, opts.max_witnesses);

    json table = json::array();
    for (std::size_t i = 0; i < nopts.ks.size(); ++i) {
      const int k = nopts.ks[i];
      double max_ratio = 0.0, sum = 0.0;
      for (const auto& t : trials) {
        max_ratio = std::max(max_ratio, t.ratios[i]);
        sum += t.ratios[i];
      }
      const double bound = theory_bound(2.0 * k);
      table.push_back({{"k", k},
                       {"p", 2 * k},
                       {"max_ratio", max_ratio},
                       {"mean_ratio", trials.empty() ? 0.0 : sum / trials.size()},
                       {"theory_bound", bound},
                       {"c_report", max_ratio / bound}});
    }
    r.stats["table"] = std::move(table);
    r.stats["trials"] = nopts.trials;
    r.stats["support_size"] = nopts.support_size;
    return r;
  });
}

}  // namespace cotlab
