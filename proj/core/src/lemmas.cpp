#include "cotlar_lab/lemmas.hpp"

#include <cmath>

#include <fmt/format.h>

#include "cotlar_lab/cotlar.hpp"
#include "scan.hpp"

namespace cotlab {

namespace {

enum Stream : std::uint64_t { kLemma21 = 21, kLemma32 = 32, kLemma23 = 23 };

double re_prod(cplx x, cplx y) { return (x * std::conj(y)).real(); }
double im_prod(cplx x, cplx y) { return (x * std::conj(y)).imag(); }

void require_full(const ProjMat& g, const char* what) {
  if (!g.ring().is_full()) {
    throw PreconditionError(fmt::format("{} needs PSL2(Z[sqrt(-n)]), got {}", what,
                                        describe(g.ring())));
  }
}

// Integer coordinates x = x1 + x2 sqrt(-n) of a full-ring entry.
std::int64_t c1(const QInt& x) { return x.u() / 2; }
std::int64_t c2(const QInt& x) { return x.v() / 2; }

int sgn(std::int64_t x) { return (x > 0) - (x < 0); }

}  // namespace

json check_lemma21(const CMat2& g, double tol) {
  const double product = re_prod(g.a, g.c) * re_prod(g.b, g.d);
  return {{"ok", product >= -0.25 - tol}, {"product", product}, {"tol", tol}};
}

json check_lemma21(const ProjMat& g) {
  const std::int64_t ac = re4(g.a(), g.c());
  const std::int64_t bd = re4(g.b(), g.d());
  const std::int64_t product16 = checked::mul(ac, bd);
  const std::int64_t floor16 = g.ring().is_full() ? 0 : -4;
  return {{"ok", product16 >= floor16}, {"product16", product16}, {"bound16", floor16}};
}

json check_lemma32(const CMat2& g, double tol) {
  const double im = im_prod(g.b, g.c) - im_prod(g.a, g.d);
  const double lhs = im * im - 4.0 * re_prod(g.a, g.c) * re_prod(g.b, g.d);
  return {{"ok", lhs <= 1.0 + tol}, {"lhs", lhs}, {"tol", tol}};
}

json check_lemma32(const ProjMat& g) {
  require_full(g, "exact quadratic identity");
  using namespace checked;
  const std::int64_t n = g.ring().n;
  const std::int64_t t = sub(im_coeff4(g.b(), g.c()), im_coeff4(g.a(), g.d()));
  const std::int64_t lhs16 =
      sub(mul(n, mul(t, t)), mul(4, mul(re4(g.a(), g.c()), re4(g.b(), g.d()))));
  const std::int64_t x = add(mul(n, mul(c2(g.a()), c2(g.d()))), mul(c1(g.b()), c1(g.c())));
  const std::int64_t p16 = mul(-64, mul(x, add(1, x)));
  return {{"ok", lhs16 == p16 && lhs16 <= 0}, {"lhs16", lhs16}, {"p16", p16}, {"X", x}};
}

json check_lemma34(const ProjMat& g) {
  require_full(g, "transpose relation");
  using namespace checked;
  const QInt &a = g.a(), &b = g.b(), &c = g.c(), &d = g.d();
  const int m = sgn(add(re4(a, c), re4(b, d)));
  const int mt = sgn(add(re4(a, b), re4(c, d)));
  const std::int64_t cross = add(re4(a, d), re4(b, c));
  const int value = m * mt * sgn(cross);
  json obs = {{"ok", value >= 0}, {"m_g", m}, {"m_gt", mt}, {"re4_ad_bc", cross}};

  const std::int64_t ac = re4(a, c);
  const std::int64_t ab = re4(a, b);
  const bool applicable = ac != 0 && ab != 0;
  obs["identity_applicable"] = applicable;
  if (applicable) {
    const std::int64_t n = g.ring().n;
    const std::int64_t x = add(mul(c1(b), c1(c)), mul(n, mul(c2(a), c2(d))));
    const std::int64_t bb = mul(n, mul(c2(a), c2(a)));
    const std::int64_t two_x1 = add(mul(2, x), 1);
    const std::int64_t a_printed = mul(n, add(mul(c1(a), c1(a)), mul(c2(a), c2(a))));
    const std::int64_t a_norm = add(mul(c1(a), c1(a)), mul(n, mul(c2(a), c2(a))));
    // re4 products carry a factor 4 each.
    const std::int64_t printed_lhs = mul(mul(ac, re4(a, d)), cross);
    const std::int64_t printed_rhs = mul(add(mul(a_printed, x), bb), two_x1);
    const std::int64_t corrected_lhs = mul(mul(ac, ab), cross);
    const std::int64_t corrected_rhs = mul(64, mul(add(mul(a_norm, x), bb), two_x1));
    obs["printed_form_equal"] = printed_lhs == printed_rhs;
    obs["corrected_form_equal"] = corrected_lhs == corrected_rhs;
  }
  return obs;
}

json check_lemma23(const CMat2& g, double tol) {
  const double ac = re_prod(g.a, g.c);
  const double bd = re_prod(g.b, g.d);
  const double scale = 1.0 + std::max({std::abs(g.a), std::abs(g.b), std::abs(g.c), std::abs(g.d)});
  const double entry_tol = std::sqrt(tol) * scale;
  auto near = [](double x, double y, double t) { return std::abs(x - y) <= t; };

  const bool lhs1 = near(ac, 0.5, tol) && near(bd, -0.5, tol);
  const bool rhs1 = std::abs(g.c - std::conj(g.d)) <= entry_tol &&
                    std::abs(g.a + std::conj(g.b)) <= entry_tol && near(ac, 0.5, tol);
  const bool lhs2 = near(ac, -0.5, tol) && near(bd, 0.5, tol);
  const bool rhs2 = std::abs(g.c + std::conj(g.d)) <= entry_tol &&
                    std::abs(g.a - std::conj(g.b)) <= entry_tol && near(ac, -0.5, tol);
  return {{"ok", lhs1 == rhs1 && lhs2 == rhs2},
          {"item1", {lhs1, rhs1}},
          {"item2", {lhs2, rhs2}},
          {"tol", tol}};
}

CMat2 sample_l_plus_shape(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  for (;;) {
    const cplx a(gauss(rng), gauss(rng));
    const cplx c(gauss(rng), gauss(rng));
    const double r = re_prod(a, c);
    if (std::abs(r) < 1e-3) continue;
    const cplx as = a / (2.0 * r);
    return {as, -std::conj(as), c, std::conj(c)};
  }
}

namespace {

template <class Check>
CheckReport exact_box(std::string check, RingParam ring, int bound, const ExecOptions& opts,
                      Check&& fn) {
  const auto elems = enumerate(ring, bound, opts.threads);
  return detail::fold(std::move(check), detail::box_universe(ring, bound, elems.size()),
                      detail::scan_elements(elems, opts, fn), opts.max_witnesses);
}

/// Float samples; the extreme value of obs[field] across all samples goes to stats.
template <class Sample>
CheckReport float_samples(std::string check, std::uint64_t samples, std::uint64_t stream,
                          const ExecOptions& opts, const char* field, bool track_min,
                          Sample&& sample) {
  auto parts = map_chunks<CheckReport>(
      chunk_count(samples, detail::kChunk), resolve_threads(opts.threads), [&](std::size_t c) {
        CheckReport part;
        auto rng = chunk_rng(opts.seed, stream, c);
        double extreme = track_min ? INFINITY : -INFINITY;
        const std::uint64_t end = std::min<std::uint64_t>(samples, (c + 1) * detail::kChunk);
        for (std::uint64_t i = c * detail::kChunk; i < end; ++i) {
          const CMat2 g = sample(rng, i);
          json obs = sample.observe(g);
          if (field) {
            const double v = obs[field].template get<double>();
            extreme = track_min ? std::min(extreme, v) : std::max(extreme, v);
          }
          detail::record(part, {format_cmat(g)}, std::move(obs), opts.max_witnesses);
        }
        if (field) part.stats["extreme"] = extreme;
        return part;
      });
  CheckReport r = detail::fold(
      std::move(check), fmt::format("{} random samples in PSL2(C), seed {}", samples, opts.seed),
      parts, opts.max_witnesses);
  if (field) {
    double extreme = track_min ? INFINITY : -INFINITY;
    for (const auto& p : parts) {
      const double v = p.stats["extreme"].template get<double>();
      extreme = track_min ? std::min(extreme, v) : std::max(extreme, v);
    }
    r.stats[track_min ? std::string("min_") + field : std::string("max_") + field] =
        std::isfinite(extreme) ? json(extreme) : json(nullptr);
  }
  return r;
}

struct PlainSampler {
  double tol;
  json (*check)(const CMat2&, double);
  CMat2 operator()(std::mt19937_64& rng, std::uint64_t) const { return random_psl2c(rng); }
  json observe(const CMat2& g) const { return check(g, tol); }
};

struct Lemma23Sampler {
  double tol;
  CMat2 operator()(std::mt19937_64& rng, std::uint64_t i) const {
    switch (i % 4) {
      case 0: return sample_l_plus_shape(rng);
      case 1: {
        std::normal_distribution<double> gauss;
        const double x = std::exp(0.5 * gauss(rng));
        return CMat2{x, 0.0, 0.0, 1.0 / x} * sample_l_plus_shape(rng);
      }
      case 2: {
        const CMat2 l = sample_l_plus_shape(rng);
        return {l.a, -l.b, -l.c, l.d};
      }
      default: return random_psl2c(rng);
    }
  }
  json observe(const CMat2& g) const { return check_lemma23(g, tol); }
};

}  // namespace

CheckReport verify_lemma21(RingParam ring, int bound, std::uint64_t samples, double tol,
                           const ExecOptions& opts) {
  return timed([&] {
    CheckReport sampled = float_samples(
        "lemma21-float", samples, kLemma21, opts, "product", true,
        PlainSampler{tol, static_cast<json (*)(const CMat2&, double)>(&check_lemma21)});
    CheckReport exact = exact_box("lemma21-exact", ring, bound, opts,
                                  [](const ProjMat& g) { return check_lemma21(g); });
    const CheckReport sections[] = {sampled, exact};
    return merge_sections("lemma21", "float samples and exact box", sections, opts.max_witnesses);
  });
}

CheckReport verify_lemma32(RingParam ring, int bound, std::uint64_t samples, double tol,
                           const ExecOptions& opts) {
  return timed([&] {
    CheckReport sampled = float_samples(
        "lemma32-float", samples, kLemma32, opts, "lhs", false,
        PlainSampler{tol, static_cast<json (*)(const CMat2&, double)>(&check_lemma32)});
    CheckReport exact = exact_box("lemma32-exact", ring, bound, opts,
                                  [](const ProjMat& g) { return check_lemma32(g); });
    const CheckReport sections[] = {sampled, exact};
    return merge_sections("lemma32", "float samples and exact box", sections, opts.max_witnesses);
  });
}

CheckReport verify_lemma34(RingParam ring, int bound, const ExecOptions& opts) {
  return timed([&] {
    const auto elems = enumerate(ring, bound, opts.threads);
    CheckReport r = detail::fold("lemma34", detail::box_universe(ring, bound, elems.size()),
                                 detail::scan_elements(elems, opts, check_lemma34),
                                 opts.max_witnesses);
    std::uint64_t applicable = 0, printed = 0, corrected = 0;
    for (const auto& g : elems) {
      const json obs = check_lemma34(g);
      if (!obs["identity_applicable"].get<bool>()) continue;
      ++applicable;
      printed += obs["printed_form_equal"].get<bool>();
      corrected += obs["corrected_form_equal"].get<bool>();
    }
    r.stats["identity_applicable"] = applicable;
    r.stats["printed_form_equal"] = printed;
    r.stats["corrected_form_equal"] = corrected;
    return r;
  });
}

CheckReport verify_lemma23(std::uint64_t samples, double tol, const ExecOptions& opts) {
  return timed([&] {
    return float_samples("lemma23", samples, kLemma23, opts, nullptr, false, Lemma23Sampler{tol});
  });
}

}  // namespace cotlab
