#include <numbers>

#include "support.hpp"
#include "cotlar_lab/ncfourier.hpp"

using namespace testing;
using C = std::complex<double>;

namespace {

// Closed walks of length 2k on Z with steps +-1, by dynamic programming.
std::int64_t closed_walks(int k) {
  std::map<int, std::int64_t> at{{0, 1}};
  for (int step = 0; step < 2 * k; ++step) {
    std::map<int, std::int64_t> next;
    for (auto [pos, count] : at) {
      next[pos - 1] += count;
      next[pos + 1] += count;
    }
    at = std::move(next);
  }
  return at[0];
}

AlgElem random_element(RingParam r, std::size_t support, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto box = enumerate(r, 1);
  const auto gens = standard_generators(r);
  return random_alg_elem(box, gens, support, rng);
}

bool near(const AlgElem& x, const AlgElem& y, double tol) {
  const AlgElem diff = add(x, scale(y, C(-1.0)));
  for (const auto& [g, c] : diff.terms()) {
    if (std::abs(c) > tol) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("convolution examples") {
  const RingParam r = RingParam::full(2);
  const ProjMat e = ProjMat::identity(r);
  const ProjMat g = translation(r);
  const ProjMat h = omega(r);
  const AlgElem x = random_element(r, 10, 1);
  CHECK(convolve(AlgElem::delta(e, 1.0), x) == x);
  CHECK(convolve(AlgElem::delta(g, 1.0), AlgElem::delta(h, 1.0)) == AlgElem::delta(g * h, 1.0));

  const AlgElem a = add(AlgElem::delta(e, 1.0), AlgElem::delta(g, 1.0));
  const AlgElem b = add(AlgElem::delta(e, 1.0), AlgElem::delta(pm_inverse(g), 1.0));
  const AlgElem p = convolve(a, b);
  CHECK(p.support_size() == 3);
  CHECK(p.coeff(e) == C(2.0));
  CHECK(p.coeff(g) == C(1.0));
  CHECK(p.coeff(pm_inverse(g)) == C(1.0));

  const AlgElem y = random_element(r, 7, 2);
  CHECK(convolve(x, y).support_size() <= x.support_size() * y.support_size());
  CHECK_THROWS_AS(convolve(x, AlgElem::delta(ProjMat::identity(RingParam::full(3)), 1.0)),
                  RingError);
}

TEST_CASE("adjoint") {
  const RingParam r = RingParam::maximal(7);
  const ProjMat g = translation(r);
  CHECK(adjoint(AlgElem::delta(g, 1.0)) == AlgElem::delta(pm_inverse(g), 1.0));
  CHECK(adjoint(AlgElem::delta(ProjMat::identity(r), C(0.0, 1.0))) ==
        AlgElem::delta(ProjMat::identity(r), C(0.0, -1.0)));
  const AlgElem x = random_element(r, 12, 3);
  const AlgElem y = random_element(r, 9, 4);
  CHECK(adjoint(adjoint(x)) == x);
  CHECK(near(adjoint(convolve(x, y)), convolve(adjoint(y), adjoint(x)), 1e-12));
}

TEST_CASE("trace") {
  const RingParam r = RingParam::full(1);
  CHECK(trace(AlgElem::delta(ProjMat::identity(r), 1.0)) == C(1.0));
  CHECK(trace(AlgElem::delta(translation(r), 1.0)) == C(0.0));
  for (std::uint64_t s = 0; s < 20; ++s) {
    const AlgElem x = random_element(r, 15, 10 + s);
    const AlgElem y = random_element(r, 15, 100 + s);
    CHECK(std::abs(trace(convolve(x, adjoint(x))) - l2_norm_squared(x)) < 1e-12 * l2_norm_squared(x));
    CHECK(std::abs(trace(convolve(x, y)) - trace(convolve(y, x))) < 1e-12);
  }
}

TEST_CASE("moments of a translation pair are central binomials") {
  const RingParam r = RingParam::full(1);
  const ProjMat e = ProjMat::identity(r);
  const ProjMat g = translation(r);
  const AlgElem x = add(AlgElem::delta(e, 1.0), AlgElem::delta(g, 1.0));
  const ExactAlgElem xe = add(ExactAlgElem::delta(e, {1, 0}), ExactAlgElem::delta(g, {1, 0}));
  for (int k = 1; k <= 6; ++k) {
    const std::int64_t walks = closed_walks(k);
    CHECK(moment(xe, k) == walks);
    CHECK(moment_by_power(xe, k) == GaussInt{walks, 0});
    CHECK(norm2k(x, k).exact_moment == doctest::Approx(static_cast<double>(walks)).epsilon(1e-14));
  }
  CHECK(closed_walks(1) == 2);
  CHECK(closed_walks(2) == 6);
  CHECK(closed_walks(3) == 20);
}

TEST_CASE("norms") {
  const RingParam r = RingParam::full(2);
  const AlgElem atom = AlgElem::delta(translation(r), 1.0);
  for (int k = 1; k <= 4; ++k) CHECK(norm2k(atom, k).value == doctest::Approx(1.0));

  const AlgElem x = random_element(r, 8, 5);
  const C c(0.6, -1.7);
  for (int k = 1; k <= 3; ++k) {
    const NormProfile p = norm2k(x, k);
    CHECK(p.k == k);
    CHECK(p.exact_moment >= 0.0);
    CHECK(p.value == doctest::Approx(std::pow(p.exact_moment, 1.0 / (2 * k))));
    CHECK(norm2k(scale(x, c), k).value == doctest::Approx(std::abs(c) * p.value).epsilon(1e-12));
    const C direct = moment_by_power(x, k, 1u << 22);
    CHECK(std::abs(direct.imag()) < 1e-12 * (1 + std::abs(direct)));
    CHECK(direct.real() == doctest::Approx(p.exact_moment).epsilon(1e-12));
  }
  CHECK_THROWS_AS(moment(x, 0), std::invalid_argument);
}

TEST_CASE("support budget") {
  const AlgElem x = random_element(RingParam::full(2), 30, 6);
  try {
    moment(x, 3, 100);
    FAIL("expected SupportBudgetError");
  } catch (const SupportBudgetError& e) {
    CHECK(e.size() > 100);
    CHECK(std::string(e.what()).find(std::to_string(e.size())) != std::string::npos);
  }
}

TEST_CASE("multiplier") {
  const RingParam r = RingParam::full(3);
  CHECK(apply_multiplier(AlgElem::delta(ProjMat::identity(r), 1.0)).is_zero());
  CHECK(apply_multiplier(AlgElem::delta(translation(r), 1.0)) == AlgElem::delta(translation(r), 1.0));
  for (std::uint64_t s = 0; s < 20; ++s) {
    const AlgElem x = random_element(r, 20, 200 + s);
    const AlgElem y = random_element(r, 20, 300 + s);
    const AlgElem tx = apply_multiplier(x);
    CHECK(apply_multiplier(apply_multiplier(tx)) == tx);
    CHECK(l2_norm_squared(tx) <= l2_norm_squared(x) * (1 + 1e-12));
    const C lhs = trace(convolve(adjoint(tx), y));
    const C rhs = trace(convolve(adjoint(x), apply_multiplier(y)));
    CHECK(std::abs(lhs - rhs) <= 1e-12 * (1 + std::abs(lhs)));
  }
}

TEST_CASE("text format") {
  const RingParam r = RingParam::maximal(11);
  const AlgElem x = random_element(r, 10, 7);
  const std::string text = format_alg_elem(x);
  CHECK(parse_alg_elem(text, r) == x);
  CHECK(parse_alg_elem("", r).is_zero());
  CHECK(format_alg_elem(AlgElem::delta(ProjMat::identity(r), C(1.5, -2.0))) ==
        "1.5,-2 : n=11;kind=max;a=2/0;b=0/0;c=0/0;d=2/0\n");
  CHECK_THROWS_AS(parse_alg_elem("1.0 : n=11;kind=max;a=2/0;b=0/0;c=0/0;d=2/0", r),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_alg_elem("1,0 n=11", r), std::invalid_argument);
}

TEST_CASE("theory bound") {
  const double beta = 1.0 + std::log2(1.0 + std::numbers::sqrt2);
  CHECK(theory_bound(2.0) == doctest::Approx(std::pow(4.0, beta)));
  CHECK(theory_bound(4.0) == doctest::Approx(std::pow(16.0 / 3.0, beta)));
}

TEST_CASE("norm ratio experiment") {
  NormExperimentOptions no;
  no.ks = {1, 2};
  no.trials = 20;
  no.support_size = 10;
  const CheckReport rep = norm_ratio_experiment(RingParam::full(2), no);
  CHECK(rep.passed());
  CHECK(rep.total_checked == 40);
  const json& table = rep.stats["table"];
  REQUIRE(table.size() == 2);
  CHECK(table[0]["max_ratio"].get<double>() <= 1.0 + 1e-12);
  CHECK(table[1]["theory_bound"].get<double>() == doctest::Approx(theory_bound(4.0)));

  ExecOptions threaded;
  threaded.threads = 3;
  CHECK(report_body(norm_ratio_experiment(RingParam::full(2), no, threaded)) == report_body(rep));

  for (const auto& g : enumerate(RingParam::full(2), 1)) {
    const double ratio = observe_norm_ratio(AlgElem::delta(g, 1.0), 2)["ratio"];
    CHECK((ratio == 0.0 || ratio == doctest::Approx(1.0)));
  }
}

TEST_CASE("norms are nondecreasing in k") {
  const RingParam r = RingParam::full(2);
  for (std::uint64_t s = 0; s < 10; ++s) {
    const AlgElem x = random_element(r, 6, 400 + s);
    double prev = 0.0;
    for (int k = 1; k <= 3; ++k) {
      const double v = norm2k(x, k).value;
      CHECK(v >= prev * (1 - 1e-12));
      prev = v;
    }
  }
}
