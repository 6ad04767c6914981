#pragma once

// Exact arithmetic in Z[sqrt(-n)] and in the maximal order Z[(1 + sqrt(-n)) / 2].
//
// Every element is stored in half-coordinates (u, v) meaning (u + v sqrt(-n)) / 2
// with u = v (mod 2). Elements of the full ring Z[sqrt(-n)] have u and v even.
// All quantities the symbol and the lemma checks need (real and imaginary parts
// of x * conj(y)) are returned as exact integers scaled by 4.

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "cotlar_lab/checked.hpp"

namespace cotlab {

enum class RingKind : std::uint8_t { Full, MaximalOrder };

/// Raised when operands live in different rings or a ring parameter is invalid.
class RingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool is_square_free(std::int64_t n);

struct RingParam {
  std::int32_t n = 1;
  RingKind kind = RingKind::Full;

  /// Validates n >= 1 and, for the maximal order, square-free n = 3 (mod 4).
  static RingParam make(std::int64_t n, RingKind kind);
  static RingParam full(std::int64_t n) { return make(n, RingKind::Full); }
  static RingParam maximal(std::int64_t n) { return make(n, RingKind::MaximalOrder); }

  bool is_full() const { return kind == RingKind::Full; }

  friend auto operator<=>(const RingParam&, const RingParam&) = default;
};

std::string to_string(RingKind kind);  // "full" | "max"
RingKind parse_ring_kind(const std::string& s);
std::string describe(const RingParam& ring);

class QInt {
 public:
  QInt() = default;
  /// Half-coordinate constructor; throws RingError on a parity violation.
  QInt(RingParam ring, std::int64_t u, std::int64_t v);

  /// x + y sqrt(-n) with integer x, y.
  static QInt from_int(RingParam ring, std::int64_t x, std::int64_t y = 0);
  static QInt zero(RingParam ring) { return {ring, 0, 0}; }
  static QInt one(RingParam ring) { return {ring, 2, 0}; }

  std::int64_t u() const { return u_; }
  std::int64_t v() const { return v_; }
  const RingParam& ring() const { return ring_; }

  bool is_zero() const { return u_ == 0 && v_ == 0; }
  bool is_real() const { return v_ == 0; }
  bool is_pure_imaginary() const { return u_ == 0; }

  double real_value() const { return static_cast<double>(u_) / 2.0; }
  double imag_value() const;

  friend bool operator==(const QInt& x, const QInt& y) {
    return x.u_ == y.u_ && x.v_ == y.v_ && x.ring_ == y.ring_;
  }

 private:
  RingParam ring_{};
  std::int64_t u_ = 0;
  std::int64_t v_ = 0;
};

QInt ring_add(const QInt& x, const QInt& y);
QInt ring_sub(const QInt& x, const QInt& y);
QInt ring_neg(const QInt& x);
QInt ring_mul(const QInt& x, const QInt& y);
QInt ring_conj(const QInt& x);

/// 4 * Re(x * conj(y)) = u1 u2 + n v1 v2.
std::int64_t re4(const QInt& x, const QInt& y);

/// t with Im(x * conj(y)) = t * sqrt(n) / 4, namely u2 v1 - u1 v2.
std::int64_t im_coeff4(const QInt& x, const QInt& y);

/// 4 * |x|^2.
inline std::int64_t norm4(const QInt& x) { return re4(x, x); }

inline QInt operator+(const QInt& x, const QInt& y) { return ring_add(x, y); }
inline QInt operator-(const QInt& x, const QInt& y) { return ring_sub(x, y); }
inline QInt operator-(const QInt& x) { return ring_neg(x); }
inline QInt operator*(const QInt& x, const QInt& y) { return ring_mul(x, y); }

std::string to_string(const QInt& x);  // "<u>/<v>"

}  // namespace cotlab
