#include "cotlar_lab/cotlar.hpp"

#include <cmath>

#include <fmt/format.h>

#include "cotlar_lab/ank.hpp"
#include "cotlar_lab/symbol.hpp"
#include "scan.hpp"

namespace cotlab {

namespace {

enum Stream : std::uint64_t {
  kBoxPairs = 1,
  kWordPairs = 2,
  kG0 = 3,
  kPsu2 = 4,
  kRemark = 5,
  kProofPairs = 6,
};

int sign_of(double x, double tol) {
  if (std::abs(x) <= tol) return 0;
  return x > 0 ? 1 : -1;
}

}  // namespace

int cotlar_residual(const ProjMat& g, const ProjMat& h) {
  return (m_exact(pm_inverse(g)) - m_exact(h)) * (m_exact(pm_mul(g, h)) - m_exact(g));
}

json observe_cotlar(const ProjMat& g, const ProjMat& h) {
  const int mg_inv = m_exact(pm_inverse(g));
  const int mh = m_exact(h);
  const int mgh = m_exact(pm_mul(g, h));
  const int mg = m_exact(g);
  const int residual = (mg_inv - mh) * (mgh - mg);
  return {{"ok", residual == 0},
          {"residual", residual},
          {"m_g_inv", mg_inv},
          {"m_h", mh},
          {"m_gh", mgh},
          {"m_g", mg}};
}

CheckReport verify_cotlar(RingParam ring, const CotlarOptions& copts, const ExecOptions& opts) {
  if (!ring.is_full()) {
    throw PreconditionError("verify_cotlar covers PSL2(Z[sqrt(-n)]); use the Bianchi search for " +
                            describe(ring));
  }
  return timed([&] {
    const auto elems = enumerate(ring, copts.bound, opts.threads);
    std::vector<ProjMat> outside;
    for (const auto& g : elems) {
      if (m_exact(g) != 0) outside.push_back(g);
    }
    const auto gens = standard_generators(ring);
    const unsigned threads = resolve_threads(opts.threads);

    const std::uint64_t full = static_cast<std::uint64_t>(outside.size()) * elems.size();
    const bool exhaustive = full <= copts.pair_budget;
    const std::uint64_t box_pairs = exhaustive ? full : copts.pair_budget;
    const std::uint64_t word_pairs =
        copts.word_pairs + (copts.pair_budget > box_pairs ? copts.pair_budget - box_pairs : 0);

    auto box_parts = map_chunks<CheckReport>(
        chunk_count(box_pairs, detail::kChunk), threads, [&](std::size_t c) {
          CheckReport part;
          auto rng = chunk_rng(opts.seed, kBoxPairs, c);
          std::uniform_int_distribution<std::size_t> pick_g(0, outside.size() - 1);
          std::uniform_int_distribution<std::size_t> pick_h(0, elems.size() - 1);
          const std::uint64_t end = std::min<std::uint64_t>(box_pairs, (c + 1) * detail::kChunk);
          for (std::uint64_t p = c * detail::kChunk; p < end; ++p) {
            const ProjMat& g = exhaustive ? outside[p / elems.size()] : outside[pick_g(rng)];
            const ProjMat& h = exhaustive ? elems[p % elems.size()] : elems[pick_h(rng)];
            detail::record(part, {format_matrix(g), format_matrix(h)}, observe_cotlar(g, h),
                           opts.max_witnesses);
          }
          return part;
        });

    auto word_parts = map_chunks<CheckReport>(
        chunk_count(word_pairs, detail::kChunk), threads, [&](std::size_t c) {
          CheckReport part;
          auto rng = chunk_rng(opts.seed, kWordPairs, c);
          std::uniform_int_distribution<std::size_t> length(1, copts.max_word_length);
          std::uniform_int_distribution<std::size_t> pick_h(0, elems.size() - 1);
          std::bernoulli_distribution word_h(0.5);
          const std::uint64_t end = std::min<std::uint64_t>(word_pairs, (c + 1) * detail::kChunk);
          for (std::uint64_t p = c * detail::kChunk; p < end; ++p) {
            ProjMat g = random_word(gens, length(rng), rng);
            while (m_exact(g) == 0) g = random_word(gens, length(rng), rng);
            const ProjMat h = word_h(rng) ? random_word(gens, length(rng), rng) : elems[pick_h(rng)];
            detail::record(part, {format_matrix(g), format_matrix(h)}, observe_cotlar(g, h),
                           opts.max_witnesses);
          }
          return part;
        });

    CheckReport r = detail::fold("cotlar", "", box_parts, opts.max_witnesses);
    for (const auto& p : word_parts) r.absorb(p, opts.max_witnesses);
    r.universe = detail::box_universe(ring, copts.bound, elems.size()) +
                 fmt::format("; g outside K; {} box pairs ({}), {} random-word pairs of length <= {}, seed {}",
                             box_pairs, exhaustive ? "exhaustive" : "sampled", word_pairs,
                             copts.max_word_length, opts.seed);
    r.stats["box_pairs"] = box_pairs;
    r.stats["box_exhaustive"] = exhaustive;
    r.stats["word_pairs"] = word_pairs;
    r.stats["elements"] = elems.size();
    r.stats["elements_outside_kernel"] = outside.size();
    return r;
  });
}

json observe_kernel_invariance(const ProjMat& g, const ProjMat& h) {
  const int mg = m_exact(g);
  const int mgh = m_exact(pm_mul(g, h));
  const int mhg = m_exact(pm_mul(h, g));
  const int ch = chi(h);
  return {{"ok", mgh == mg && mhg == ch * mg},
          {"m_g", mg},
          {"m_gh", mgh},
          {"m_hg", mhg},
          {"chi_h", ch}};
}

CheckReport verify_invariance(RingParam ring, int bound, const ExecOptions& opts) {
  return timed([&] {
    const auto elems = enumerate(ring, bound, opts.threads);
    std::vector<ProjMat> kernel;
    for (const auto& g : elems) {
      if (in_kernel_subgroup(kernel_class(g))) kernel.push_back(g);
    }
    auto parts = map_chunks<CheckReport>(
        chunk_count(elems.size(), 64), resolve_threads(opts.threads), [&](std::size_t c) {
          CheckReport part;
          const std::size_t end = std::min(elems.size(), (c + 1) * 64);
          for (std::size_t i = c * 64; i < end; ++i) {
            for (const auto& h : kernel) {
              detail::record(part, {format_matrix(elems[i]), format_matrix(h)},
                             observe_kernel_invariance(elems[i], h), opts.max_witnesses);
            }
          }
          return part;
        });
    CheckReport r = detail::fold(
        "kernel-invariance",
        detail::box_universe(ring, bound, elems.size()) +
            fmt::format(" x {} kernel elements", kernel.size()),
        parts, opts.max_witnesses);
    r.stats["kernel_size"] = kernel.size();
    return r;
  });
}

CMat2 g0_element(double x, double y, double z) {
  const cplx i(0.0, 1.0);
  return {x, i * y, i * z, (1.0 - y * z) / x};
}

json observe_g0_invariance(const CMat2& g0, const CMat2& g, double tol) {
  const double base = symbol_real_part(g);
  const bool guarded = std::abs(base) > 10.0 * tol;
  const int before = m_float(g, tol);
  const int after = m_float(g0 * g, tol);
  return {{"ok", !guarded || before == after},
          {"guarded", guarded},
          {"m_g", before},
          {"m_g0g", after},
          {"tol", tol}};
}

json observe_psu2_invariance(const CMat2& g, const CMat2& u, double tol) {
  const double base = symbol_real_part(g);
  const bool guarded = std::abs(base) > 10.0 * tol;
  const int before = m_float(g, tol);
  const int after = m_float(g * u, tol);
  return {{"ok", !guarded || before == after},
          {"guarded", guarded},
          {"m_g", before},
          {"m_gu", after},
          {"tol", tol}};
}

namespace {

template <class Sample>
CheckReport float_sweep(std::string check, std::string universe, std::uint64_t samples,
                        std::uint64_t stream, const ExecOptions& opts, Sample&& sample) {
  auto parts = map_chunks<CheckReport>(
      chunk_count(samples, detail::kChunk), resolve_threads(opts.threads), [&](std::size_t c) {
        CheckReport part;
        auto rng = chunk_rng(opts.seed, stream, c);
        std::uint64_t skipped = 0;
        const std::uint64_t end = std::min<std::uint64_t>(samples, (c + 1) * detail::kChunk);
        for (std::uint64_t i = c * detail::kChunk; i < end; ++i) {
          auto [inputs, obs] = sample(rng);
          if (!obs.value("guarded", true)) {
            ++skipped;
            continue;
          }
          detail::record(part, std::move(inputs), std::move(obs), opts.max_witnesses);
        }
        part.stats["skipped"] = skipped;
        return part;
      });
  CheckReport r = detail::fold(std::move(check), std::move(universe), parts, opts.max_witnesses);
  std::uint64_t skipped = 0;
  for (const auto& p : parts) skipped += p.stats["skipped"].template get<std::uint64_t>();
  r.stats["dead_zone_skipped"] = skipped;
  return r;
}

}  // namespace

CheckReport verify_g0_invariance(std::uint64_t samples, double tol, const ExecOptions& opts) {
  return timed([&] {
    return float_sweep(
        "g0-invariance",
        fmt::format("{} random (g0, g), g0 in G0, g in PSL2(C), tol {}, seed {}", samples, tol,
                    opts.seed),
        samples, kG0, opts, [&](std::mt19937_64& rng) {
          std::normal_distribution<double> gauss;
          std::bernoulli_distribution flip(0.5);
          const double x = (flip(rng) ? -1.0 : 1.0) * std::exp(0.5 * gauss(rng));
          const CMat2 g0 = g0_element(x, gauss(rng), gauss(rng));
          const CMat2 g = random_psl2c(rng);
          return std::pair{std::vector<std::string>{format_cmat(g0), format_cmat(g)},
                           observe_g0_invariance(g0, g, tol)};
        });
  });
}

CheckReport verify_psu2_invariance(std::uint64_t samples, double tol, const ExecOptions& opts) {
  return timed([&] {
    return float_sweep(
        "psu2-invariance",
        fmt::format("{} random (g, u), g in PSL2(C), u Haar in PSU(2), tol {}, seed {}", samples,
                    tol, opts.seed),
        samples, kPsu2, opts, [&](std::mt19937_64& rng) {
          const CMat2 g = random_psl2c(rng);
          const CMat2 u = random_psu2(rng);
          return std::pair{std::vector<std::string>{format_cmat(g), format_cmat(u)},
                           observe_psu2_invariance(g, u, tol)};
        });
  });
}

json check_remark_formula(const ProjMat& l, const CMat2& g, double tol) {
  if (kernel_class(l) != KernelClass::LPlus) {
    throw PreconditionError("remark formula needs l in L+: " + format_matrix(l));
  }
  const double r1 = std::hypot(std::abs(g.a), std::abs(g.b));
  const double r2 = std::hypot(std::abs(g.c), std::abs(g.d));
  const CMat2 lg = embed_to_complex(l) * g;
  const int lhs = m_float(lg, tol);
  const int rhs = sign_of(r1 - r2, tol);
  // Re <r1, r2>(lg) = (|r1(g)|^2 - |r2(g)|^2) / 2 drives both signs.
  const double predicted = (r1 * r1 - r2 * r2) / 2.0;
  const bool guarded = std::abs(predicted) > 10.0 * tol;
  return {{"ok", lhs == rhs || !guarded},
          {"guarded", guarded},
          {"m_lg", lhs},
          {"sign_row_norms", rhs},
          {"tol", tol}};
}

CheckReport verify_remark_formula(const ProjMat& l, std::uint64_t samples, double tol,
                                  const ExecOptions& opts) {
  return timed([&] {
    return float_sweep(
        "remark-formula",
        fmt::format("l = {}; {} random g in PSL2(C), tol {}, seed {}", format_matrix(l), samples,
                    tol, opts.seed),
        samples, kRemark, opts, [&](std::mt19937_64& rng) {
          const CMat2 g = random_psl2c(rng);
          return std::pair{std::vector<std::string>{format_matrix(l), format_cmat(g)},
                           check_remark_formula(l, g, tol)};
        });
  });
}

json observe_linverse(const ProjMat& l) {
  const ProjMat inv = pm_inverse(l);
  const int m = m_exact(inv);
  return {{"ok", m != 0}, {"m_l_inv", m}, {"class_l_inv", to_string(kernel_class(inv))}};
}

CheckReport verify_linverse_outside_kernel(RingParam ring, int bound, const ExecOptions& opts) {
  return timed([&] {
    std::vector<ProjMat> ls;
    for (const auto& g : enumerate(ring, bound, opts.threads)) {
      if (kernel_class(g) == KernelClass::LPlus) ls.push_back(g);
    }
    CheckReport r = detail::fold(
        "l-inverse-outside-kernel",
        detail::box_universe(ring, bound, 0) + fmt::format("; {} elements of L+", ls.size()),
        detail::scan_elements(ls, opts, observe_linverse), opts.max_witnesses);
    r.stats["l_plus_size"] = ls.size();
    return r;
  });
}

json observe_bianchi_witness(const ProjMat& l, const ProjMat& h, const ProjMat& h_prime) {
  json obs = observe_cotlar(l, h_prime);
  const int residual = obs["residual"].get<int>();
  obs["ok"] = residual != 0 && kernel_class(l) == KernelClass::LPlus;
  obs["l_class"] = to_string(kernel_class(l));
  obs["m_lh"] = m_exact(pm_mul(l, h));
  obs["m_h_original"] = m_exact(h);
  return obs;
}

std::optional<BianchiWitness> search_bianchi_counterexample(RingParam ring, int bound,
                                                            unsigned threads) {
  if (ring.is_full()) {
    throw PreconditionError("Bianchi counterexample search needs the maximal order, got " +
                            describe(ring));
  }
  const auto elems = enumerate(ring, bound, threads);
  const ProjMat w = omega(ring);
  std::vector<ProjMat> ls;
  for (const auto& g : elems) {
    if (kernel_class(g) == KernelClass::LPlus && m_exact(pm_inverse(g)) != 0) ls.push_back(g);
  }
  for (const auto& l : ls) {
    const int target = m_exact(pm_inverse(l));
    for (const auto& h : elems) {
      if (m_exact(pm_mul(l, h)) == 0 || m_exact(h) != target) continue;
      const ProjMat hp = pm_mul(pm_mul(w, h), w);
      const int res = cotlar_residual(l, hp);
      if (res != 0) return BianchiWitness{l, h, hp, res, "omega-conjugation"};
    }
  }
  for (const auto& l : ls) {
    for (const auto& h : elems) {
      const int res = cotlar_residual(l, h);
      if (res != 0) return BianchiWitness{l, h, h, res, "exhaustive"};
    }
  }
  return std::nullopt;
}

CheckReport run_bianchi_search(RingParam ring, int bound, const ExecOptions& opts) {
  return timed([&] {
    CheckReport r;
    r.check = "bianchi-counterexample";
    r.universe = detail::box_universe(ring, bound, enumerate(ring, bound, opts.threads).size());
    const auto found = search_bianchi_counterexample(ring, bound, opts.threads);
    r.total_checked = 1;
    if (found) {
      json obs = observe_bianchi_witness(found->l, found->h, found->h_prime);
      r.witness = json{{"inputs",
                        {format_matrix(found->l), format_matrix(found->h),
                         format_matrix(found->h_prime)}},
                       {"observed", obs},
                       {"method", found->method}};
    } else {
      r.add_violation({{}, {{"ok", false}, {"reason", "no witness within the box"}}},
                      opts.max_witnesses);
    }
    return r;
  });
}

ProofTerms proof_terms(const ProjMat& g, const ProjMat& h) {
  if (m_exact(g) == 0) throw PreconditionError("proof_terms: g lies in K");
  if (m_exact(h) == 0) throw PreconditionError("proof_terms: h lies in K");
  if (m_exact(pm_inverse(g)) == m_exact(h)) throw PreconditionError("proof_terms: m(g^-1) = m(h)");

  const CMat2 ge = embed_to_complex(g);
  const AnkCoords ank = ank_decompose(embed_to_complex(h));
  const double re_ac = (ge.a * std::conj(ge.c)).real();
  const double re_bd = (ge.b * std::conj(ge.d)).real();
  const double re_ad_bc = (ge.a * std::conj(ge.d) + ge.b * std::conj(ge.c)).real();
  const double im_bc_ad = (ge.b * std::conj(ge.c) - ge.a * std::conj(ge.d)).imag();
  const double m_arg = re_ac + re_bd;
  const double s2 = ank.s * ank.s;
  const double re_t = ank.t.real();
  const double im_t = ank.t.imag();

  ProofTerms terms;
  terms.first = m_arg * re_ac / s2 * (1.0 + re_t * re_t);
  terms.second = m_arg * re_ad_bc * re_t;
  terms.third = m_arg * (re_ac / s2 * im_t * im_t + re_bd * s2 + im_bc_ad * im_t);
  return terms;
}

json observe_proof_terms(const ProjMat& g, const ProjMat& h, double tol) {
  const ProofTerms t = proof_terms(g, h);
  const double total = t.total();
  const int expected = m_exact(pm_mul(g, h)) * m_exact(g);
  const int got = sign_of(total, 10.0 * tol);
  const bool nonneg = t.first >= -tol && t.second >= -tol && t.third >= -tol;
  return {{"ok", nonneg && (got == 0 || got == expected)},
          {"I", t.first},
          {"II", t.second},
          {"III", t.third},
          {"sign_total", got},
          {"m_gh_m_g", expected},
          {"tol", tol}};
}

CheckReport verify_proof_terms(RingParam ring, int bound, std::uint64_t pairs, double tol,
                               const ExecOptions& opts) {
  return timed([&] {
    const auto elems = enumerate(ring, bound, opts.threads);
    std::vector<ProjMat> outside;
    std::vector<int> m_inv;
    for (const auto& g : elems) {
      if (m_exact(g) != 0) {
        outside.push_back(g);
        m_inv.push_back(m_exact(pm_inverse(g)));
      }
    }
    if (outside.empty()) throw PreconditionError("no elements outside K in the box");
    auto parts = map_chunks<CheckReport>(
        chunk_count(pairs, detail::kChunk), resolve_threads(opts.threads), [&](std::size_t c) {
          CheckReport part;
          auto rng = chunk_rng(opts.seed, kProofPairs, c);
          std::uniform_int_distribution<std::size_t> pick(0, outside.size() - 1);
          double min_term = INFINITY;
          const std::uint64_t end = std::min<std::uint64_t>(pairs, (c + 1) * detail::kChunk);
          for (std::uint64_t p = c * detail::kChunk; p < end; ++p) {
            std::size_t i = pick(rng), j = pick(rng);
            while (m_inv[i] == m_exact(outside[j])) {
              i = pick(rng);
              j = pick(rng);
            }
            json obs = observe_proof_terms(outside[i], outside[j], tol);
            min_term = std::min({min_term, obs["I"].get<double>(), obs["II"].get<double>(),
                                 obs["III"].get<double>()});
            detail::record(part, {format_matrix(outside[i]), format_matrix(outside[j])},
                           std::move(obs), opts.max_witnesses);
          }
          part.stats["min_term"] = min_term;
          return part;
        });
    CheckReport r = detail::fold(
        "proof-terms",
        detail::box_universe(ring, bound, elems.size()) +
            fmt::format("; {} sampled pairs with g, h outside K and m(g^-1) != m(h), seed {}",
                        pairs, opts.seed),
        parts, opts.max_witnesses);
    double min_term = INFINITY;
    for (const auto& p : parts) min_term = std::min(min_term, p.stats["min_term"].get<double>());
    r.stats["min_term"] = std::isfinite(min_term) ? json(min_term) : json(nullptr);
    return r;
  });
}

}  // namespace cotlab
