#pragma once

// The symbol m(g) = sign Re(a conj(c) + b conj(d)), the shape classification of
// its zero set, and the character on the kernel subgroup.

#include <cstdint>
#include <string>

#include "cotlar_lab/parallel.hpp"
#include "cotlar_lab/psl2.hpp"
#include "cotlar_lab/report.hpp"

namespace cotlab {

/// 4 * Re(a conj(c) + b conj(d)), exact.
std::int64_t symbol_re4(const ProjMat& g);

/// Re(a conj(c) + b conj(d)) = Re <r1(g), r2(g)>.
double symbol_real_part(const CMat2& g);

int m_exact(const ProjMat& g);

/// Sign with dead zone: 0 when |Re <r1, r2>| <= tol.
int m_float(const CMat2& g, double tol = 1e-9);

/// KPlus:  [[x, y r], [z r, w]]        (a, d real; b, c multiples of r = sqrt(-n))
/// KMinus: [[x r, y], [z, w r]]        (a, d multiples of r; b, c real)
/// LPlus:  [[a, -conj a], [c, conj c]]  with Re(a conj c) = 1/2
/// LMinus: [[a, conj a], [c, -conj c]]  with Re(a conj c) = -1/2
/// All four shapes carry det = 1; on KMinus that reads n x w + y z = -1.
enum class KernelClass { KPlus, KMinus, LPlus, LMinus, NotKernel };

std::string to_string(KernelClass k);

KernelClass kernel_class(const ProjMat& g);

inline bool in_kernel_subgroup(KernelClass k) {
  return k == KernelClass::KPlus || k == KernelClass::KMinus;
}

/// +1 on KPlus, -1 on KMinus; std::domain_error otherwise.
int chi(const ProjMat& g);

// Per-element observations. Each returns a JSON object whose "ok" field says
// whether the property holds; the same function is used by replay.
json observe_theorem_b(const ProjMat& g);
json observe_zero_set(const ProjMat& g);
json observe_zero_shape(const ProjMat& g);
json observe_omega_swap(const ProjMat& k);
json observe_chi_product(const ProjMat& g, const ProjMat& h);

/// m(g) = 0 exactly when g has one of the kernel shapes; the L shapes never
/// occur over the full ring. Every violation is listed with its witness.
CheckReport verify_theorem_b(RingParam ring, int bound, const ExecOptions& opts = {});

/// m = 0 iff Re(a conj c) = Re(b conj d) = 0 (full ring), or additionally
/// Re(a conj c) = -Re(b conj d) = +-1/2 (maximal order).
CheckReport verify_zero_set_lemma(RingParam ring, int bound, const ExecOptions& opts = {});

/// Re(a conj c) = Re(b conj d) = 0 forces the KPlus or KMinus shape.
CheckReport verify_zero_shape_lemma(RingParam ring, int bound, const ExecOptions& opts = {});

/// omega K+ = K+ omega = K- on the box, and chi(gh) = chi(g) chi(h) on all kernel pairs.
CheckReport verify_character(RingParam ring, int bound, const ExecOptions& opts = {});

}  // namespace cotlab
