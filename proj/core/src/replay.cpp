#include "cotlar_lab/replay.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "cotlar_lab/ank.hpp"
#include "cotlar_lab/cotlar.hpp"
#include "cotlar_lab/lemmas.hpp"
#include "cotlar_lab/ncfourier.hpp"
#include "cotlar_lab/symbol.hpp"

namespace cotlab {

namespace {

using Args = std::vector<std::string>;
using Recompute = std::function<json(const Args&, double)>;

const std::string& arg(const Args& in, std::size_t i, std::size_t expected) {
  if (in.size() != expected) {
    throw std::invalid_argument("expected " + std::to_string(expected) + " inputs, got " +
                                std::to_string(in.size()));
  }
  return in[i];
}

template <json (*F)(const ProjMat&)>
Recompute unary() {
  return [](const Args& in, double) { return F(parse_matrix(arg(in, 0, 1))); };
}

template <json (*F)(const ProjMat&, const ProjMat&)>
Recompute binary() {
  return [](const Args& in, double) {
    return F(parse_matrix(arg(in, 0, 2)), parse_matrix(arg(in, 1, 2)));
  };
}

template <json (*F)(const CMat2&, double)>
Recompute float_unary() {
  return [](const Args& in, double tol) { return F(parse_cmat(arg(in, 0, 1)), tol); };
}

const std::map<std::string, Recompute>& registry() {
  static const std::map<std::string, Recompute> r = {
      {"theorem-b", unary<observe_theorem_b>()},
      {"kernel-zero-set", unary<observe_zero_set>()},
      {"kernel-zero-shape", unary<observe_zero_shape>()},
      {"omega-swap", unary<observe_omega_swap>()},
      {"chi-homomorphism", binary<observe_chi_product>()},
      {"cotlar", binary<observe_cotlar>()},
      {"kernel-invariance", binary<observe_kernel_invariance>()},
      {"g0-invariance",
       [](const Args& in, double tol) {
         return observe_g0_invariance(parse_cmat(arg(in, 0, 2)), parse_cmat(arg(in, 1, 2)), tol);
       }},
      {"psu2-invariance",
       [](const Args& in, double tol) {
         return observe_psu2_invariance(parse_cmat(arg(in, 0, 2)), parse_cmat(arg(in, 1, 2)), tol);
       }},
      {"remark-formula",
       [](const Args& in, double tol) {
         return check_remark_formula(parse_matrix(arg(in, 0, 2)), parse_cmat(arg(in, 1, 2)), tol);
       }},
      {"l-inverse-outside-kernel", unary<observe_linverse>()},
      {"bianchi-counterexample",
       [](const Args& in, double) {
         return observe_bianchi_witness(parse_matrix(arg(in, 0, 3)), parse_matrix(arg(in, 1, 3)),
                                        parse_matrix(arg(in, 2, 3)));
       }},
      {"proof-terms",
       [](const Args& in, double tol) {
         return observe_proof_terms(parse_matrix(arg(in, 0, 2)), parse_matrix(arg(in, 1, 2)), tol);
       }},
      {"lemma21-float", float_unary<check_lemma21>()},
      {"lemma21-exact", unary<check_lemma21>()},
      {"lemma32-float", float_unary<check_lemma32>()},
      {"lemma32-exact", unary<check_lemma32>()},
      {"lemma34", unary<check_lemma34>()},
      {"lemma23", float_unary<check_lemma23>()},
      {"ank-roundtrip", float_unary<observe_ank_roundtrip>()},
      {"ank-lattice",
       [](const Args& in, double tol) { return observe_ank_lattice(parse_matrix(arg(in, 0, 1)), tol); }},
      {"norm-experiment",
       [](const Args& in, double) {
         const std::string& text = arg(in, 0, 2);
         const auto bar = text.find(" : ");
         if (bar == std::string::npos) throw std::invalid_argument("empty group algebra element");
         const auto eol = text.find('\n', bar);
         const RingParam ring = parse_matrix(text.substr(bar + 3, eol - bar - 3)).ring();
         return observe_norm_ratio(parse_alg_elem(text, ring), std::stoi(arg(in, 1, 2)));
       }},
  };
  return r;
}

json strip(json observed) {
  if (observed.is_object()) observed.erase("check");
  return observed;
}

}  // namespace

std::vector<std::string> replayable_checks() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  return names;
}

json replay_observation(const std::string& check, const std::vector<std::string>& inputs,
                        double tol) {
  const auto it = registry().find(check);
  if (it == registry().end()) throw std::invalid_argument("no replay rule for check '" + check + "'");
  return it->second(inputs, tol);
}

ReplayOutcome replay_report(const json& report, double default_tol) {
  ReplayOutcome out;
  const std::string top = report.at("check").get<std::string>();
  double config_tol = default_tol;
  if (report.contains("config") && report["config"].contains("tol")) {
    config_tol = report["config"]["tol"].get<double>();
  }

  auto replay_one = [&](const json& entry) {
    const Violation v = violation_from_json(entry);
    if (v.inputs.empty()) {
      ++out.skipped;
      return;
    }
    const std::string check = v.observed.is_object() ? v.observed.value("check", top) : top;
    const double tol = v.observed.is_object() && v.observed.contains("tol")
                           ? v.observed["tol"].get<double>()
                           : config_tol;
    const json recorded = strip(v.observed);
    const json recomputed = replay_observation(check, v.inputs, tol);
    ++out.replayed;
    const bool match = recorded == recomputed;
    if (!match) ++out.mismatched;
    out.details.push_back(
        {{"check", check}, {"match", match}, {"recorded", recorded}, {"recomputed", recomputed}});
  };

  for (const auto& v : report.value("violations", json::array())) replay_one(v);
  if (report.contains("witness") && !report["witness"].is_null()) replay_one(report["witness"]);
  return out;
}

}  // namespace cotlab
