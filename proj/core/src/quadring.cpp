#include "cotlar_lab/quadring.hpp"

#include <cmath>

#include <fmt/format.h>

namespace cotlab {

bool is_square_free(std::int64_t n) {
  if (n < 1) return false;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
  }
  return true;
}

RingParam RingParam::make(std::int64_t n, RingKind kind) {
  if (n < 1) throw RingError(fmt::format("ring parameter n must be >= 1, got {}", n));
  if (n > INT32_MAX) throw RingError(fmt::format("ring parameter n = {} is too large", n));
  if (kind == RingKind::MaximalOrder && (n % 4 != 3 || !is_square_free(n))) {
    throw RingError(fmt::format(
        "maximal order Z[(1+sqrt(-n))/2] requires square-free n = 3 (mod 4), got n = {}", n));
  }
  return RingParam{static_cast<std::int32_t>(n), kind};
}

std::string to_string(RingKind kind) { return kind == RingKind::Full ? "full" : "max"; }

RingKind parse_ring_kind(const std::string& s) {
  if (s == "full") return RingKind::Full;
  if (s == "max") return RingKind::MaximalOrder;
  throw RingError("unknown ring kind '" + s + "' (expected full|max)");
}

std::string describe(const RingParam& ring) {
  return ring.is_full() ? fmt::format("Z[sqrt(-{})]", ring.n)
                        : fmt::format("Z[(1+sqrt(-{}))/2]", ring.n);
}

QInt::QInt(RingParam ring, std::int64_t u, std::int64_t v) : ring_(ring), u_(u), v_(v) {
  if (((u ^ v) & 1) != 0) {
    throw RingError(fmt::format("half-coordinates ({}, {}) violate u = v (mod 2)", u, v));
  }
  if (ring.is_full() && (u & 1) != 0) {
    throw RingError(fmt::format("({}, {}) is not in {}", u, v, describe(ring)));
  }
}

QInt QInt::from_int(RingParam ring, std::int64_t x, std::int64_t y) {
  return {ring, checked::mul(2, x), checked::mul(2, y)};
}

double QInt::imag_value() const {
  return static_cast<double>(v_) * std::sqrt(static_cast<double>(ring_.n)) / 2.0;
}

namespace {

void require_same_ring(const QInt& x, const QInt& y) {
  if (!(x.ring() == y.ring())) {
    throw RingError("operands from different rings: " + describe(x.ring()) + " vs " +
                    describe(y.ring()));
  }
}

}  // namespace

QInt ring_add(const QInt& x, const QInt& y) {
  require_same_ring(x, y);
  return {x.ring(), checked::add(x.u(), y.u()), checked::add(x.v(), y.v())};
}

QInt ring_sub(const QInt& x, const QInt& y) {
  require_same_ring(x, y);
  return {x.ring(), checked::sub(x.u(), y.u()), checked::sub(x.v(), y.v())};
}

QInt ring_neg(const QInt& x) { return {x.ring(), checked::neg(x.u()), checked::neg(x.v())}; }

QInt ring_mul(const QInt& x, const QInt& y) {
  require_same_ring(x, y);
  const std::int64_t n = x.ring().n;
  // ((u1 + v1 r)(u2 + v2 r)) / 4 with r^2 = -n; both numerators are even by parity.
  const std::int64_t re = checked::sub(checked::mul(x.u(), y.u()),
                                       checked::mul(n, checked::mul(x.v(), y.v())));
  const std::int64_t im = checked::add(checked::mul(x.u(), y.v()), checked::mul(y.u(), x.v()));
  return {x.ring(), re / 2, im / 2};
}

QInt ring_conj(const QInt& x) { return {x.ring(), x.u(), checked::neg(x.v())}; }

std::int64_t re4(const QInt& x, const QInt& y) {
  require_same_ring(x, y);
  const std::int64_t n = x.ring().n;
  return checked::add(checked::mul(x.u(), y.u()), checked::mul(n, checked::mul(x.v(), y.v())));
}

std::int64_t im_coeff4(const QInt& x, const QInt& y) {
  require_same_ring(x, y);
  return checked::sub(checked::mul(y.u(), x.v()), checked::mul(x.u(), y.v()));
}

std::string to_string(const QInt& x) { return fmt::format("{}/{}", x.u(), x.v()); }

}  // namespace cotlab
