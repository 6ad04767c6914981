#pragma once

#include <array>
#include <cstdint>
#include <random>

#include <doctest.h>

#include "cotlar_lab/psl2.hpp"
#include "cotlar_lab/quadring.hpp"

namespace testing {

using namespace cotlab;

/// Matrix from eight half-coordinates (a.u, a.v, b.u, b.v, c.u, c.v, d.u, d.v).
inline ProjMat mat(RingParam r, std::array<std::int64_t, 8> h) {
  return ProjMat(Mat2{QInt(r, h[0], h[1]), QInt(r, h[2], h[3]), QInt(r, h[4], h[5]),
                      QInt(r, h[6], h[7])});
}

inline ProjMat translation(RingParam r) { return mat(r, {2, 0, 2, 0, 0, 0, 2, 0}); }

/// Random element with half-coordinates in [-lim, lim].
inline QInt random_qint(RingParam r, std::mt19937_64& rng, std::int64_t lim = 20) {
  std::uniform_int_distribution<std::int64_t> pick(-lim, lim);
  for (;;) {
    const std::int64_t u = pick(rng), v = pick(rng);
    if (((u ^ v) & 1) != 0) continue;
    if (r.is_full() && (u & 1) != 0) continue;
    return QInt(r, u, v);
  }
}

inline bool close(cplx x, cplx y, double tol) { return std::abs(x - y) <= tol; }

}  // namespace testing
