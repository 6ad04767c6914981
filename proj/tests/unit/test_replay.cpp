#include "support.hpp"
#include "cotlar_lab/ank.hpp"
#include "cotlar_lab/cotlar.hpp"
#include "cotlar_lab/lemmas.hpp"
#include "cotlar_lab/ncfourier.hpp"
#include "cotlar_lab/replay.hpp"
#include "cotlar_lab/symbol.hpp"

using namespace testing;

TEST_CASE("every registered check recomputes its observation") {
  const RingParam f = RingParam::full(2);
  const RingParam m = RingParam::maximal(7);
  const ProjMat t = translation(f);
  const ProjMat w = omega(f);
  const ProjMat l = mat(m, {1, 1, -1, 1, 2, 0, 2, 0});
  const CMat2 g = random_psl2c(19);
  const std::string tm = format_matrix(t), wm = format_matrix(w), gm = format_cmat(g);
  const double tol = 1e-9;

  CHECK(replay_observation("theorem-b", {tm}, tol) == observe_theorem_b(t));
  CHECK(replay_observation("kernel-zero-set", {tm}, tol) == observe_zero_set(t));
  CHECK(replay_observation("kernel-zero-shape", {wm}, tol) == observe_zero_shape(w));
  CHECK(replay_observation("omega-swap", {wm}, tol) == observe_omega_swap(w));
  CHECK(replay_observation("chi-homomorphism", {wm, wm}, tol) == observe_chi_product(w, w));
  CHECK(replay_observation("cotlar", {tm, wm}, tol) == observe_cotlar(t, w));
  CHECK(replay_observation("kernel-invariance", {tm, wm}, tol) == observe_kernel_invariance(t, w));
  const CMat2 g0 = g0_element(1.5, 0.3, -0.2);
  CHECK(replay_observation("g0-invariance", {format_cmat(g0), gm}, tol) ==
        observe_g0_invariance(g0, g, tol));
  CHECK(replay_observation("psu2-invariance", {gm, gm}, tol) == observe_psu2_invariance(g, g, tol));
  CHECK(replay_observation("remark-formula", {format_matrix(l), gm}, tol) ==
        check_remark_formula(l, g, tol));
  CHECK(replay_observation("l-inverse-outside-kernel", {format_matrix(l)}, tol) ==
        observe_linverse(l));
  CHECK(replay_observation("bianchi-counterexample",
                           {format_matrix(l), format_matrix(l), format_matrix(l)}, tol) ==
        observe_bianchi_witness(l, l, l));
  CHECK(replay_observation("proof-terms", {tm, tm}, tol) == observe_proof_terms(t, t, tol));
  CHECK(replay_observation("lemma21-float", {gm}, tol) == check_lemma21(g, tol));
  CHECK(replay_observation("lemma21-exact", {tm}, tol) == check_lemma21(t));
  CHECK(replay_observation("lemma32-float", {gm}, tol) == check_lemma32(g, tol));
  CHECK(replay_observation("lemma32-exact", {tm}, tol) == check_lemma32(t));
  CHECK(replay_observation("lemma34", {tm}, tol) == check_lemma34(t));
  CHECK(replay_observation("lemma23", {gm}, tol) == check_lemma23(g, tol));
  CHECK(replay_observation("ank-roundtrip", {gm}, tol) == observe_ank_roundtrip(g, tol));
  CHECK(replay_observation("ank-lattice", {tm}, tol) == observe_ank_lattice(t, tol));

  std::mt19937_64 rng(20);
  const auto box = enumerate(f, 1);
  const auto gens = standard_generators(f);
  const AlgElem x = random_alg_elem(box, gens, 6, rng);
  CHECK(replay_observation("norm-experiment", {format_alg_elem(x), "2"}, tol) ==
        observe_norm_ratio(x, 2));

  CHECK(replayable_checks().size() == 22);
  CHECK_THROWS_AS(replay_observation("unknown", {tm}, tol), std::invalid_argument);
  CHECK_THROWS_AS(replay_observation("theorem-b", {tm, tm}, tol), std::invalid_argument);
}

TEST_CASE("violations re-verify through a JSON round trip") {
  const CheckReport rep = verify_theorem_b(RingParam::maximal(3), 2);
  REQUIRE(rep.violation_count > 0);
  const json doc = json::parse(report_body(rep).dump());
  const ReplayOutcome out = replay_report(doc);
  CHECK(out.ok());
  CHECK(out.replayed == rep.violations.size());

  json tampered = doc;
  tampered["violations"][0]["observed"]["m"] = 7;
  CHECK(replay_report(tampered).mismatched == 1);
}

TEST_CASE("witness and merged sections re-verify") {
  const CheckReport bianchi = run_bianchi_search(RingParam::maximal(11), 2);
  const ReplayOutcome wb = replay_report(json::parse(report_body(bianchi).dump()));
  CHECK(wb.ok());
  CHECK(wb.replayed == 1);

  const CheckReport lin = verify_linverse_outside_kernel(RingParam::maximal(7), 2);
  const CheckReport sections[] = {lin};
  const CheckReport merged = merge_sections("lemmas", "u", sections, 32);
  const ReplayOutcome wl = replay_report(json::parse(report_body(merged).dump()));
  CHECK(wl.ok());
  CHECK(wl.replayed == 2);
}
