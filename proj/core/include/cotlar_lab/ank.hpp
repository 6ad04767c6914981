#pragma once

// g = [[1/s, t/s], [0, s]] * u with s = |r2(g)|, t = <r1(g), r2(g)> and u in PSU(2).

#include <cstdint>
#include <stdexcept>

#include "cotlar_lab/parallel.hpp"
#include "cotlar_lab/psl2.hpp"
#include "cotlar_lab/report.hpp"

namespace cotlab {

struct AnkCoords {
  double s = 1.0;
  cplx t{};
  CMat2 u{};

  CMat2 reconstruct() const { return upper_ank(s, t) * u; }
};

/// <x, y> = x1 conj(y1) + x2 conj(y2); conjugation on the second argument.
inline cplx inner(cplx x1, cplx x2, cplx y1, cplx y2) {
  return x1 * std::conj(y1) + x2 * std::conj(y2);
}

/// Throws std::domain_error when the second row has norm below 1e-14.
/// The sign of u is fixed so that its first nonzero entry (row-major) has
/// nonnegative real part, nonnegative imaginary part on ties.
AnkCoords ank_decompose(const CMat2& g, double tol = 1e-9);

/// Reconstruction error (up to sign) and deviation of u u* from the identity.
json observe_ank_roundtrip(const CMat2& g, double tol);

/// sign(Re t) = m(h) on a lattice element; Re t = 0 within tol on K+ and K-.
json observe_ank_lattice(const ProjMat& h, double tol);

CheckReport verify_ank_roundtrip(std::uint64_t samples, double tol, const ExecOptions& opts = {});
CheckReport verify_ank_lattice(RingParam ring, int bound, double tol, const ExecOptions& opts = {});

}  // namespace cotlab
