#pragma once

// PSL2 over the quadratic rings (exact) and over the complex numbers (double precision).

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "cotlar_lab/quadring.hpp"

namespace cotlab {

/// Exact 2x2 matrix [[a, b], [c, d]] over a quadratic ring. No determinant constraint.
struct Mat2 {
  QInt a, b, c, d;

  const RingParam& ring() const { return a.ring(); }
  QInt det() const { return a * d - b * c; }
  Mat2 operator-() const { return {-a, -b, -c, -d}; }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

Mat2 operator*(const Mat2& g, const Mat2& h);

using MatKey = std::array<std::int64_t, 8>;

/// Half-coordinates (a.u, a.v, b.u, b.v, c.u, c.v, d.u, d.v).
MatKey key_of(const Mat2& g);

/// Canonical representative of the class {g, -g} in PSL2: the first nonzero
/// half-coordinate of the scan order in key_of is positive.
class ProjMat {
 public:
  ProjMat() = default;

  /// Throws RingError unless det(g) == 1 exactly and all entries share one ring.
  explicit ProjMat(const Mat2& g);

  static ProjMat identity(RingParam ring);

  const Mat2& mat() const { return m_; }
  const QInt& a() const { return m_.a; }
  const QInt& b() const { return m_.b; }
  const QInt& c() const { return m_.c; }
  const QInt& d() const { return m_.d; }
  const RingParam& ring() const { return m_.ring(); }
  MatKey key() const { return key_of(m_); }

  bool is_identity() const;

  friend bool operator==(const ProjMat& g, const ProjMat& h) { return g.m_ == h.m_; }
  friend bool operator<(const ProjMat& g, const ProjMat& h);

 private:
  struct Trusted {};
  ProjMat(const Mat2& g, Trusted) : m_(g) {}
  friend ProjMat pm_from_unit_det(const Mat2& g);

  Mat2 m_;
};

/// Canonical sign choice; the input must already have det 1.
Mat2 canonicalize(const Mat2& g);

/// Skips the determinant check. Only for products and inverses of ProjMat values.
ProjMat pm_from_unit_det(const Mat2& g);

ProjMat pm_mul(const ProjMat& g, const ProjMat& h);
ProjMat pm_inverse(const ProjMat& g);
ProjMat pm_transpose(const ProjMat& g);

inline ProjMat operator*(const ProjMat& g, const ProjMat& h) { return pm_mul(g, h); }

/// [[0, -1], [1, 0]].
ProjMat omega(RingParam ring);

/// Upper and lower unipotents by 1 and by the ring generator, plus omega.
/// For the maximal order the generator is (1 + sqrt(-n)) / 2.
std::vector<ProjMat> standard_generators(RingParam ring);

/// Every PSL2 class whose eight half-coordinates lie in [-2B, 2B], once each,
/// in lexicographic order of key().
std::vector<ProjMat> enumerate(RingParam ring, int bound, unsigned threads = 1);

/// Product of `length` uniform picks from gens, each taken as itself or its inverse.
ProjMat random_word(std::span<const ProjMat> gens, std::size_t length, std::mt19937_64& rng);
ProjMat random_word(std::span<const ProjMat> gens, std::size_t length, std::uint64_t seed);

/// Matrix text format: n=<n>;kind=<full|max>;a=<u>/<v>;b=<u>/<v>;c=<u>/<v>;d=<u>/<v>
std::string format_matrix(const ProjMat& g);
ProjMat parse_matrix(const std::string& text);

struct ProjMatHash {
  std::size_t operator()(const ProjMat& g) const noexcept;
};

// ---------------------------------------------------------------------------
// Floating layer.

using cplx = std::complex<double>;

struct CMat2 {
  cplx a{1.0}, b{0.0}, c{0.0}, d{1.0};

  cplx det() const { return a * d - b * c; }
  CMat2 operator-() const { return {-a, -b, -c, -d}; }
  CMat2 adjoint() const { return {std::conj(a), std::conj(c), std::conj(b), std::conj(d)}; }
  CMat2 transpose() const { return {a, c, b, d}; }
  /// Inverse for det = 1 matrices (adjugate).
  CMat2 inverse() const { return {d, -b, -c, a}; }

  /// True when |det - 1| <= tol.
  bool is_special(double tol = 1e-9) const { return std::abs(det() - 1.0) <= tol; }
};

CMat2 operator*(const CMat2& g, const CMat2& h);

/// Largest entrywise distance between g and either h or -h.
double projective_distance(const CMat2& g, const CMat2& h);

CMat2 embed_to_complex(const ProjMat& g);
cplx embed_to_complex(const QInt& x);

/// [[1/s, t/s], [0, s]].
CMat2 upper_ank(double s, cplx t);

/// Haar-random element of SU(2) (projectively PSU(2)).
CMat2 random_psu2(std::mt19937_64& rng);

/// A * u with u Haar in SU(2), s log-normal and t complex Gaussian.
CMat2 random_psl2c(std::mt19937_64& rng);
CMat2 random_psl2c(std::uint64_t seed);

/// cmat:<re>,<im>;<re>,<im>;<re>,<im>;<re>,<im> with round-trip precision.
std::string format_cmat(const CMat2& g);
CMat2 parse_cmat(const std::string& text);

}  // namespace cotlab
