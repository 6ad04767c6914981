#pragma once

// Inequalities and identities on the entries of g = [[a, b], [c, d]], checked
// in floating point on PSL2(C) and exactly on the lattices.

#include <cstdint>

#include "cotlar_lab/parallel.hpp"
#include "cotlar_lab/psl2.hpp"
#include "cotlar_lab/report.hpp"

namespace cotlab {

/// Re(a conj c) Re(b conj d) >= -1/4 - tol.
json check_lemma21(const CMat2& g, double tol);
/// 16 Re(a conj c) Re(b conj d) >= 0 on the full ring, >= -4 on the maximal order.
json check_lemma21(const ProjMat& g);

/// Im(b conj c - a conj d)^2 - 4 Re(a conj c) Re(b conj d) <= 1 + tol.
json check_lemma32(const CMat2& g, double tol);

/// Full ring only: 16 LHS = 16 (-4 X (1 + X)) with X = n a2 d2 + b1 c1 where
/// x = x1 + x2 sqrt(-n), and LHS <= 0.
json check_lemma32(const ProjMat& g);

/// Full ring only: m(g) m(g^t) Re(a conj d + b conj c) >= 0.
///
/// When Re(a conj c) and Re(a conj b) are nonzero, two polynomial forms are
/// also evaluated with X = b1 c1 + n a2 d2 and B = n a2^2:
///   printed:   64 Re(a conj c) Re(a conj d) Re(a conj d + b conj c) = (A X + B)(2X + 1), A = n (a1^2 + a2^2)
///   corrected: 64 Re(a conj c) Re(a conj b) Re(a conj d + b conj c) = 64 (|a|^2 X + B)(2X + 1)
/// Only the corrected form holds in general; both are reported, neither affects "ok".
json check_lemma34(const ProjMat& g);

/// Both items of the equivalence
///   Re(a conj c) = -Re(b conj d) = +-1/2  <=>  c = +-conj d, a = -+conj b, Re(a conj c) = +-1/2.
/// Scalar conditions use tol; entry equalities use sqrt(tol) scaled by the entry size.
json check_lemma23(const CMat2& g, double tol);

CheckReport verify_lemma21(RingParam ring, int bound, std::uint64_t samples, double tol,
                           const ExecOptions& opts = {});
CheckReport verify_lemma32(RingParam ring, int bound, std::uint64_t samples, double tol,
                           const ExecOptions& opts = {});
CheckReport verify_lemma34(RingParam ring, int bound, const ExecOptions& opts = {});

/// Samples cycle through: conditioned [[a, -conj a], [c, conj c]], the same
/// left-multiplied by diag(x, 1/x), the mirrored [[a, conj a], [c, -conj c]],
/// and unconditioned PSL2(C) elements.
CheckReport verify_lemma23(std::uint64_t samples, double tol, const ExecOptions& opts = {});

/// [[a, -conj a], [c, conj c]] with c random and a rescaled so that Re(a conj c) = 1/2.
CMat2 sample_l_plus_shape(std::mt19937_64& rng);

}  // namespace cotlab
