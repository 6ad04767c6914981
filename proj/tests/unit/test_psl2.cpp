#include <algorithm>
#include <set>

#include "support.hpp"

using namespace testing;

namespace {

using Key = std::array<std::int64_t, 8>;

// Second enumerator: raw 8-tuples, determinant through quarter-scaled
// real/imaginary parts, and dedup of {g, -g} by lexicographic maximum.
std::set<Key> brute_force(RingParam r, int bound) {
  const std::int64_t lim = 2 * bound;
  std::vector<std::pair<std::int64_t, std::int64_t>> vals;
  for (std::int64_t u = -lim; u <= lim; ++u) {
    for (std::int64_t v = -lim; v <= lim; ++v) {
      const bool ok = r.is_full() ? (u % 2 == 0 && v % 2 == 0) : ((u - v) % 2 == 0);
      if (ok) vals.emplace_back(u, v);
    }
  }
  const std::int64_t n = r.n;
  std::set<Key> out;
  for (auto [au, av] : vals)
    for (auto [bu, bv] : vals)
      for (auto [cu, cv] : vals)
        for (auto [du, dv] : vals) {
          const std::int64_t re = au * du - n * av * dv - (bu * cu - n * bv * cv);
          const std::int64_t im = au * dv + av * du - (bu * cv + bv * cu);
          if (re != 4 || im != 0) continue;
          const Key k{au, av, bu, bv, cu, cv, du, dv};
          Key neg;
          std::transform(k.begin(), k.end(), neg.begin(), [](std::int64_t x) { return -x; });
          out.insert(std::max(k, neg));
        }
  return out;
}

std::set<Key> as_keys(const std::vector<ProjMat>& elems) {
  std::set<Key> out;
  for (const auto& g : elems) {
    const MatKey k = g.key();
    out.insert(Key{k[0], k[1], k[2], k[3], k[4], k[5], k[6], k[7]});
  }
  return out;
}

bool contains(const std::vector<ProjMat>& v, const ProjMat& g) {
  return std::find(v.begin(), v.end(), g) != v.end();
}

}  // namespace

TEST_CASE("constructor validates determinant") {
  const RingParam r = RingParam::full(1);
  CHECK_THROWS_AS(mat(r, {2, 0, 2, 0, 2, 0, 2, 0}), RingError);
  CHECK_THROWS_AS(mat(r, {4, 0, 0, 0, 0, 0, 2, 0}), RingError);
  CHECK_NOTHROW(mat(r, {2, 0, 4, 2, 0, 0, 2, 0}));
}

TEST_CASE("canonical sign") {
  const RingParam r = RingParam::full(2);
  const ProjMat g = mat(r, {-2, 0, -2, 0, 0, 0, -2, 0});
  CHECK(g == translation(r));
  std::mt19937_64 rng(5);
  const auto gens = standard_generators(r);
  for (int i = 0; i < 500; ++i) {
    const ProjMat w = random_word(gens, 6, rng);
    CHECK(canonicalize(w.mat()) == canonicalize(-w.mat()));
    for (std::int64_t x : w.key()) {
      if (x == 0) continue;
      CHECK(x > 0);
      break;
    }
  }
}

TEST_CASE("enumeration matches the independent scan") {
  for (RingParam r : {RingParam::full(1), RingParam::full(2), RingParam::full(3),
                      RingParam::maximal(7)}) {
    CAPTURE(describe(r));
    const auto elems = enumerate(r, 2);
    CHECK(as_keys(elems) == brute_force(r, 2));
    CHECK(as_keys(elems).size() == elems.size());
  }
}

TEST_CASE("enumeration counts") {
  // Frozen from an exhaustive scan written outside this code base.
  CHECK(enumerate(RingParam::full(1), 2).size() == 1236);
  CHECK(enumerate(RingParam::full(2), 2).size() == 582);
  CHECK(enumerate(RingParam::full(3), 2).size() == 646);
  CHECK(enumerate(RingParam::full(5), 2).size() == 462);
  CHECK(enumerate(RingParam::full(6), 2).size() == 394);
  CHECK(enumerate(RingParam::maximal(3), 2).size() == 3814);
  CHECK(enumerate(RingParam::maximal(7), 2).size() == 1398);
  CHECK(enumerate(RingParam::maximal(11), 2).size() == 1118);
}

TEST_CASE("small box membership") {
  const RingParam r = RingParam::full(1);
  const auto elems = enumerate(r, 1);
  CHECK(contains(elems, ProjMat::identity(r)));
  CHECK(contains(elems, omega(r)));
  CHECK(contains(elems, translation(r)));
  CHECK(contains(elems, mat(r, {2, 0, 0, 2, 0, 0, 2, 0})));
  for (const auto& g : elems) CHECK(g.mat().det() == QInt::one(r));
}

TEST_CASE("enumeration is thread-count independent") {
  const RingParam r = RingParam::maximal(7);
  CHECK(enumerate(r, 2, 1) == enumerate(r, 2, 3));
}

TEST_CASE("box closed under inverse and transpose") {
  for (int n : {1, 2, 3}) {
    const auto elems = enumerate(RingParam::full(n), 2);
    const std::set<ProjMat> all(elems.begin(), elems.end());
    for (const auto& g : elems) {
      CHECK(all.count(pm_inverse(g)) == 1);
      CHECK(all.count(pm_transpose(g)) == 1);
    }
  }
}

TEST_CASE("group law") {
  const RingParam r = RingParam::maximal(7);
  const auto gens = standard_generators(r);
  const ProjMat e = ProjMat::identity(r);
  const ProjMat w = omega(r);
  CHECK(w * w == e);
  CHECK(pm_transpose(w) == w);
  std::mt19937_64 rng(6);
  for (int i = 0; i < 1000; ++i) {
    const ProjMat g = random_word(gens, 8, rng);
    const ProjMat h = random_word(gens, 8, rng);
    CHECK(g * pm_inverse(g) == e);
    CHECK(pm_inverse(g * h) == pm_inverse(h) * pm_inverse(g));
    CHECK((g * h) * w == g * (h * w));
  }
}

TEST_CASE("random words") {
  const RingParam r = RingParam::full(2);
  const auto gens = standard_generators(r);
  CHECK(random_word(gens, 0, 1).is_identity());
  const std::vector<ProjMat> only_omega{omega(r)};
  CHECK(random_word(only_omega, 1, 7) == omega(r));
  CHECK(random_word(gens, 8, 99) == random_word(gens, 8, 99));
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::size_t> len(0, 12);
  for (int i = 0; i < 10000; ++i) {
    const ProjMat g = random_word(gens, len(rng), rng);
    REQUIRE(g.mat().det() == QInt::one(r));
  }
  CHECK_THROWS_AS(random_word(std::span<const ProjMat>{}, 3, 1), std::invalid_argument);
}

TEST_CASE("matrix text format") {
  const RingParam r = RingParam::maximal(7);
  const ProjMat l = mat(r, {1, 1, -1, 1, 2, 0, 2, 0});
  CHECK(format_matrix(l) == "n=7;kind=max;a=1/1;b=-1/1;c=2/0;d=2/0");
  CHECK(parse_matrix(format_matrix(l)) == l);
  std::mt19937_64 rng(9);
  const auto gens = standard_generators(r);
  for (int i = 0; i < 200; ++i) {
    const ProjMat g = random_word(gens, 8, rng);
    CHECK(parse_matrix(format_matrix(g)) == g);
  }
  CHECK_THROWS_AS(parse_matrix("n=7;kind=max;a=1/1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_matrix("n=7;kind=max;a=1/0;b=0/0;c=0/0;d=2/0"), RingError);
  CHECK_THROWS_AS(parse_matrix("n=7;kind=max;a=x/1;b=-1/1;c=2/0;d=2/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_matrix("n=5;kind=max;a=2/0;b=0/0;c=0/0;d=2/0"), RingError);
}

TEST_CASE("float layer") {
  CHECK(projective_distance(upper_ank(1.0, 0.0) * CMat2{}, CMat2{}) == 0.0);
  const CMat2 t = embed_to_complex(translation(RingParam::full(1)));
  CHECK(close(t.b, 1.0, 0.0));
  CHECK(close(embed_to_complex(QInt(RingParam::maximal(7), 1, 1)),
              cplx(0.5, std::sqrt(7.0) / 2.0), 1e-15));

  CHECK(projective_distance(random_psl2c(11), random_psl2c(11)) == 0.0);
  std::mt19937_64 rng(10);
  double worst = 0.0, worst_unitary = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const CMat2 g = random_psl2c(rng);
    worst = std::max(worst, std::abs(g.det() - 1.0));
    const CMat2 u = random_psu2(rng);
    worst_unitary = std::max(worst_unitary, projective_distance(u * u.adjoint(), CMat2{}));
  }
  CHECK(worst < 1e-12);
  CHECK(worst_unitary < 1e-12);

  const CMat2 g = random_psl2c(rng);
  CHECK(projective_distance(parse_cmat(format_cmat(g)), g) == 0.0);
  CHECK_THROWS_AS(parse_cmat("cmat:1,0;0,0;0,0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cmat("1,0;0,0;0,0;1,0"), std::invalid_argument);
}
