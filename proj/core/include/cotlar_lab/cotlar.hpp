#pragma once

// Cotlar identity for the symbol, the invariance laws it rests on, the sign
// decomposition used to prove it on PSL2(Z[sqrt(-n)]), and the counterexample
// on Bianchi groups over the maximal order.

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "cotlar_lab/parallel.hpp"
#include "cotlar_lab/psl2.hpp"
#include "cotlar_lab/report.hpp"

namespace cotlab {

/// Raised when an operation is called outside its stated hypotheses.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// (m(g^-1) - m(h)) (m(gh) - m(g)), in {-4, ..., 4}.
int cotlar_residual(const ProjMat& g, const ProjMat& h);

json observe_cotlar(const ProjMat& g, const ProjMat& h);

struct CotlarOptions {
  int bound = 2;
  /// Minimum number of (g, h) pairs; box pairs first, topped up with word pairs.
  std::uint64_t pair_budget = 1'000'000;
  /// Random-word pairs checked in addition to the budget.
  std::uint64_t word_pairs = 10'000;
  std::size_t max_word_length = 8;
};

/// Residual = 0 for every checked pair with g outside K. Pairs come from the
/// enumeration box (exhaustive when it fits the budget, seeded sample otherwise)
/// and from seeded random words over standard_generators.
CheckReport verify_cotlar(RingParam ring, const CotlarOptions& copts, const ExecOptions& opts = {});

/// m(gh) = m(g) and m(hg) = chi(h) m(g) for h in K+ or K-.
json observe_kernel_invariance(const ProjMat& g, const ProjMat& h);

/// Every box element against every box kernel element.
CheckReport verify_invariance(RingParam ring, int bound, const ExecOptions& opts = {});

/// [[x, i y], [i z, w]] with x w + y z = 1.
CMat2 g0_element(double x, double y, double z);

/// m(g0 g) = m(g); comparisons are skipped when |Re <r1, r2>(g)| <= 10 tol.
json observe_g0_invariance(const CMat2& g0, const CMat2& g, double tol);
/// m(g u) = m(g) for unitary u, same guard.
json observe_psu2_invariance(const CMat2& g, const CMat2& u, double tol);

CheckReport verify_g0_invariance(std::uint64_t samples, double tol, const ExecOptions& opts = {});
CheckReport verify_psu2_invariance(std::uint64_t samples, double tol, const ExecOptions& opts = {});

/// For l in L+: m(l g) = sign(|r1(g)| - |r2(g)|). Throws PreconditionError when l is not in L+.
json check_remark_formula(const ProjMat& l, const CMat2& g, double tol);
CheckReport verify_remark_formula(const ProjMat& l, std::uint64_t samples, double tol,
                                  const ExecOptions& opts = {});

/// l^-1 is never in the zero set of m for l in L+ (box sweep).
json observe_linverse(const ProjMat& l);
CheckReport verify_linverse_outside_kernel(RingParam ring, int bound, const ExecOptions& opts = {});

struct BianchiWitness {
  ProjMat l;        // in L+, l^-1 outside the zero set
  ProjMat h;        // m(l h) != 0 and m(h) = m(l^-1)
  ProjMat h_prime;  // omega h omega, or h itself for the exhaustive fallback
  int residual = 0;
  std::string method;  // "omega-conjugation" | "exhaustive"
};

json observe_bianchi_witness(const ProjMat& l, const ProjMat& h, const ProjMat& h_prime);

/// Needs the maximal order (square-free n = 3 mod 4); PreconditionError otherwise.
std::optional<BianchiWitness> search_bianchi_counterexample(RingParam ring, int bound,
                                                            unsigned threads = 1);

/// Report wrapper: witness block on success, one violation when nothing is found.
CheckReport run_bianchi_search(RingParam ring, int bound, const ExecOptions& opts = {});

/// The three summands whose total has the sign of m(gh) m(g), computed from
/// the ANK coordinates (s, t) of h.
struct ProofTerms {
  double first = 0.0;   // Re<r1,r2>(g) Re(a conj c) s^-2 (1 + (Re t)^2)
  double second = 0.0;  // Re<r1,r2>(g) Re(a conj d + b conj c) Re t
  double third = 0.0;   // Re<r1,r2>(g) [Re(a conj c) s^-2 (Im t)^2 + Re(b conj d) s^2 + Im(b conj c - a conj d) Im t]
  double total() const { return first + second + third; }
};

/// Requires g, h outside K and m(g^-1) != m(h); PreconditionError otherwise.
ProofTerms proof_terms(const ProjMat& g, const ProjMat& h);

json observe_proof_terms(const ProjMat& g, const ProjMat& h, double tol);

/// Seeded sample of qualifying box pairs.
CheckReport verify_proof_terms(RingParam ring, int bound, std::uint64_t pairs, double tol,
                               const ExecOptions& opts = {});

}  // namespace cotlab
