#include "cotlar_lab/ank.hpp"

#include <cmath>

#include <fmt/format.h>

#include "cotlar_lab/symbol.hpp"
#include "scan.hpp"

namespace cotlab {

namespace {

constexpr std::uint64_t kAnkStream = 7;

bool needs_flip(const CMat2& u, double tol) {
  for (cplx z : {u.a, u.b, u.c, u.d}) {
    if (std::abs(z) <= tol) continue;
    if (std::abs(z.real()) > tol) return z.real() < 0.0;
    return z.imag() < 0.0;
  }
  return false;
}

}  // namespace

AnkCoords ank_decompose(const CMat2& g, double tol) {
  const double s = std::hypot(std::abs(g.c), std::abs(g.d));
  if (s < 1e-14) throw std::domain_error("ank_decompose: degenerate second row");
  // Second row of u is r2 / s; the first row completes it to SU(2).
  CMat2 u{std::conj(g.d) / s, -std::conj(g.c) / s, g.c / s, g.d / s};
  if (needs_flip(u, tol)) u = -u;
  return {s, inner(g.a, g.b, g.c, g.d), u};
}

json observe_ank_roundtrip(const CMat2& g, double tol) {
  const AnkCoords k = ank_decompose(g, tol);
  const double err = projective_distance(k.reconstruct(), g);
  const CMat2 uu = k.u * k.u.adjoint();
  const double unitary_err = projective_distance(uu, CMat2{});
  return {{"ok", err < tol && unitary_err < tol && k.s > 0.0},
          {"error", err},
          {"unitary_error", unitary_err},
          {"tol", tol}};
}

json observe_ank_lattice(const ProjMat& h, double tol) {
  const AnkCoords k = ank_decompose(embed_to_complex(h), tol);
  const double re_t = k.t.real();
  const int m = m_exact(h);
  const int sign_t = std::abs(re_t) <= tol ? 0 : (re_t > 0 ? 1 : -1);
  const bool kernel = in_kernel_subgroup(kernel_class(h));
  const bool ok = sign_t == m && (!kernel || std::abs(re_t) < tol);
  return {{"ok", ok}, {"re_t", re_t}, {"m", m}, {"in_kernel", kernel}, {"tol", tol}};
}

CheckReport verify_ank_roundtrip(std::uint64_t samples, double tol, const ExecOptions& opts) {
  return timed([&] {
    auto parts = map_chunks<CheckReport>(
        chunk_count(samples, detail::kChunk), resolve_threads(opts.threads), [&](std::size_t c) {
          CheckReport part;
          auto rng = chunk_rng(opts.seed, kAnkStream, c);
          double worst = 0.0;
          const std::uint64_t end = std::min<std::uint64_t>(samples, (c + 1) * detail::kChunk);
          for (std::uint64_t i = c * detail::kChunk; i < end; ++i) {
            const CMat2 g = random_psl2c(rng);
            json obs = observe_ank_roundtrip(g, tol);
            worst = std::max(worst, obs["error"].get<double>());
            detail::record(part, {format_cmat(g)}, std::move(obs), opts.max_witnesses);
          }
          part.stats["max_error"] = worst;
          return part;
        });
    CheckReport r = detail::fold(
        "ank-roundtrip",
        fmt::format("{} random samples in PSL2(C), tol {}, seed {}", samples, tol, opts.seed),
        parts, opts.max_witnesses);
    double worst = 0.0;
    for (const auto& p : parts) worst = std::max(worst, p.stats["max_error"].get<double>());
    r.stats["max_error"] = worst;
    return r;
  });
}

CheckReport verify_ank_lattice(RingParam ring, int bound, double tol, const ExecOptions& opts) {
  return timed([&] {
    const auto elems = enumerate(ring, bound, opts.threads);
    return detail::fold("ank-lattice", detail::box_universe(ring, bound, elems.size()),
                        detail::scan_elements(elems, opts,
                                              [tol](const ProjMat& h) {
                                                return observe_ank_lattice(h, tol);
                                              }),
                        opts.max_witnesses);
  });
}

}  // namespace cotlab
