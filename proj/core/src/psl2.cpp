#include "cotlar_lab/psl2.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include <fmt/format.h>

#include "cotlar_lab/parallel.hpp"

namespace cotlab {

Mat2 operator*(const Mat2& g, const Mat2& h) {
  return {g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d, g.c * h.a + g.d * h.c,
          g.c * h.b + g.d * h.d};
}

MatKey key_of(const Mat2& g) {
  return {g.a.u(), g.a.v(), g.b.u(), g.b.v(), g.c.u(), g.c.v(), g.d.u(), g.d.v()};
}

Mat2 canonicalize(const Mat2& g) {
  for (std::int64_t x : key_of(g)) {
    if (x > 0) return g;
    if (x < 0) return -g;
  }
  return g;  // zero matrix, unreachable for det 1
}

ProjMat pm_from_unit_det(const Mat2& g) { return ProjMat(canonicalize(g), ProjMat::Trusted{}); }

ProjMat::ProjMat(const Mat2& g) {
  if (!(g.a.ring() == g.b.ring() && g.a.ring() == g.c.ring() && g.a.ring() == g.d.ring())) {
    throw RingError("matrix entries from different rings");
  }
  if (!(g.det() == QInt::one(g.ring()))) {
    throw RingError("matrix does not have determinant 1");
  }
  m_ = canonicalize(g);
}

ProjMat ProjMat::identity(RingParam ring) {
  return pm_from_unit_det({QInt::one(ring), QInt::zero(ring), QInt::zero(ring), QInt::one(ring)});
}

bool ProjMat::is_identity() const {
  const RingParam& r = ring();
  return a() == QInt::one(r) && b().is_zero() && c().is_zero() && d() == QInt::one(r);
}

bool operator<(const ProjMat& g, const ProjMat& h) {
  if (!(g.ring() == h.ring())) return g.ring() < h.ring();
  return g.key() < h.key();
}

ProjMat pm_mul(const ProjMat& g, const ProjMat& h) {
  if (!(g.ring() == h.ring())) {
    throw RingError("cannot multiply matrices over " + describe(g.ring()) + " and " +
                    describe(h.ring()));
  }
  return pm_from_unit_det(g.mat() * h.mat());
}

ProjMat pm_inverse(const ProjMat& g) {
  return pm_from_unit_det({g.d(), -g.b(), -g.c(), g.a()});
}

ProjMat pm_transpose(const ProjMat& g) {
  return pm_from_unit_det({g.a(), g.c(), g.b(), g.d()});
}

ProjMat omega(RingParam ring) {
  const QInt one = QInt::one(ring);
  return pm_from_unit_det({QInt::zero(ring), -one, one, QInt::zero(ring)});
}

std::vector<ProjMat> standard_generators(RingParam ring) {
  const QInt zero = QInt::zero(ring);
  const QInt one = QInt::one(ring);
  const QInt gen = ring.is_full() ? QInt(ring, 0, 2) : QInt(ring, 1, 1);
  return {
      pm_from_unit_det({one, one, zero, one}),
      pm_from_unit_det({one, gen, zero, one}),
      pm_from_unit_det({one, zero, one, one}),
      pm_from_unit_det({one, zero, gen, one}),
      omega(ring),
  };
}

std::vector<ProjMat> enumerate(RingParam ring, int bound, unsigned threads) {
  if (bound < 1) throw std::invalid_argument("enumeration bound must be >= 1");
  const std::int64_t lim = 2 * static_cast<std::int64_t>(bound);
  std::vector<QInt> entries;
  for (std::int64_t u = -lim; u <= lim; ++u) {
    for (std::int64_t v = -lim; v <= lim; ++v) {
      if (((u ^ v) & 1) != 0) continue;
      if (ring.is_full() && (u & 1) != 0) continue;
      entries.emplace_back(ring, u, v);
    }
  }
  const QInt one = QInt::one(ring);

  // One chunk per value of the top-left entry; loops nest in key order.
  auto chunks = map_chunks<std::vector<ProjMat>>(
      entries.size(), resolve_threads(threads), [&](std::size_t ia) {
        std::vector<ProjMat> out;
        const QInt& a = entries[ia];
        for (const QInt& b : entries) {
          for (const QInt& c : entries) {
            const QInt bc = b * c;
            for (const QInt& d : entries) {
              if (!(a * d - bc == one)) continue;
              const Mat2 g{a, b, c, d};
              if (canonicalize(g) == g) out.push_back(pm_from_unit_det(g));
            }
          }
        }
        return out;
      });

  std::vector<ProjMat> all;
  for (auto& c : chunks) all.insert(all.end(), c.begin(), c.end());
  return all;
}

ProjMat random_word(std::span<const ProjMat> gens, std::size_t length, std::mt19937_64& rng) {
  if (gens.empty()) throw std::invalid_argument("random_word needs at least one generator");
  const RingParam ring = gens.front().ring();
  for (const auto& g : gens) {
    if (!(g.ring() == ring)) throw RingError("generators from different rings");
  }
  std::uniform_int_distribution<std::size_t> pick(0, 2 * gens.size() - 1);
  ProjMat w = ProjMat::identity(ring);
  for (std::size_t i = 0; i < length; ++i) {
    const std::size_t k = pick(rng);
    const ProjMat& g = gens[k / 2];
    w = pm_mul(w, (k % 2 == 0) ? g : pm_inverse(g));
  }
  return w;
}

ProjMat random_word(std::span<const ProjMat> gens, std::size_t length, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_word(gens, length, rng);
}

std::string format_matrix(const ProjMat& g) {
  return fmt::format("n={};kind={};a={};b={};c={};d={}", g.ring().n, to_string(g.ring().kind),
                     to_string(g.a()), to_string(g.b()), to_string(g.c()), to_string(g.d()));
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view what) {
  std::int64_t x = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument(fmt::format("bad integer '{}' for {}", s, what));
  }
  return x;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

}  // namespace

ProjMat parse_matrix(const std::string& text) {
  const auto fields = split(text, ';');
  if (fields.size() != 6) {
    throw std::invalid_argument("matrix text needs 6 ';'-separated fields: '" + text + "'");
  }
  auto value = [&](std::size_t i, std::string_view name) {
    const std::string& f = fields[i];
    if (f.size() <= name.size() + 1 || f.compare(0, name.size(), name) != 0 ||
        f[name.size()] != '=') {
      throw std::invalid_argument(fmt::format("expected field '{}=' in '{}'", name, text));
    }
    return f.substr(name.size() + 1);
  };
  const RingParam ring = RingParam::make(parse_int(value(0, "n"), "n"), parse_ring_kind(value(1, "kind")));
  auto entry = [&](std::size_t i, std::string_view name) {
    const std::string v = value(i, name);
    const auto slash = v.find('/');
    if (slash == std::string::npos) {
      throw std::invalid_argument(fmt::format("entry {} must be <u>/<v>, got '{}'", name, v));
    }
    return QInt(ring, parse_int(std::string_view(v).substr(0, slash), name),
                parse_int(std::string_view(v).substr(slash + 1), name));
  };
  return ProjMat(Mat2{entry(2, "a"), entry(3, "b"), entry(4, "c"), entry(5, "d")});
}

std::size_t ProjMatHash::operator()(const ProjMat& g) const noexcept {
  std::size_t h = static_cast<std::size_t>(g.ring().n) * 0x9e3779b97f4a7c15ULL +
                  static_cast<std::size_t>(g.ring().kind);
  for (std::int64_t x : g.key()) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

// ---------------------------------------------------------------------------

CMat2 operator*(const CMat2& g, const CMat2& h) {
  return {g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d, g.c * h.a + g.d * h.c,
          g.c * h.b + g.d * h.d};
}

double projective_distance(const CMat2& g, const CMat2& h) {
  auto dist = [](const CMat2& x, const CMat2& y) {
    return std::max({std::abs(x.a - y.a), std::abs(x.b - y.b), std::abs(x.c - y.c),
                     std::abs(x.d - y.d)});
  };
  return std::min(dist(g, h), dist(g, -h));
}

cplx embed_to_complex(const QInt& x) { return {x.real_value(), x.imag_value()}; }

CMat2 embed_to_complex(const ProjMat& g) {
  return {embed_to_complex(g.a()), embed_to_complex(g.b()), embed_to_complex(g.c()),
          embed_to_complex(g.d())};
}

CMat2 upper_ank(double s, cplx t) { return {1.0 / s, t / s, 0.0, s}; }

CMat2 random_psu2(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  double q[4];
  double norm = 0.0;
  do {
    norm = 0.0;
    for (double& x : q) {
      x = gauss(rng);
      norm += x * x;
    }
  } while (norm < 1e-12);
  norm = std::sqrt(norm);
  const cplx alpha(q[0] / norm, q[1] / norm);
  const cplx beta(q[2] / norm, q[3] / norm);
  return {alpha, beta, -std::conj(beta), std::conj(alpha)};
}

CMat2 random_psl2c(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  const double s = std::exp(0.5 * gauss(rng));
  const cplx t(gauss(rng), gauss(rng));
  return upper_ank(s, t) * random_psu2(rng);
}

CMat2 random_psl2c(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_psl2c(rng);
}

std::string format_cmat(const CMat2& g) {
  return fmt::format("cmat:{:.17g},{:.17g};{:.17g},{:.17g};{:.17g},{:.17g};{:.17g},{:.17g}",
                     g.a.real(), g.a.imag(), g.b.real(), g.b.imag(), g.c.real(), g.c.imag(),
                     g.d.real(), g.d.imag());
}

CMat2 parse_cmat(const std::string& text) {
  if (text.rfind("cmat:", 0) != 0) throw std::invalid_argument("expected 'cmat:' prefix: " + text);
  const auto entries = split(text.substr(5), ';');
  if (entries.size() != 4) throw std::invalid_argument("cmat needs 4 entries: " + text);
  cplx z[4];
  for (std::size_t i = 0; i < 4; ++i) {
    const auto parts = split(entries[i], ',');
    if (parts.size() != 2) throw std::invalid_argument("cmat entry needs re,im: " + text);
    std::size_t used_re = 0, used_im = 0;
    const double re = std::stod(parts[0], &used_re);
    const double im = std::stod(parts[1], &used_im);
    if (used_re != parts[0].size() || used_im != parts[1].size()) {
      throw std::invalid_argument("bad number in cmat: " + text);
    }
    z[i] = {re, im};
  }
  return {z[0], z[1], z[2], z[3]};
}

}  // namespace cotlab
