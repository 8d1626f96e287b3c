#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "wittsig/errors.hpp"
#include "wittsig/interval.hpp"

using namespace wittsig;

namespace {

double to_double(const Rational& q) { return q.get_d(); }

CyclotomicNumber random_cyclo(std::mt19937_64& rng, long m) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  const long phi = conductor_data(m).phi;
  std::vector<Rational> c;
  for (long i = 0; i < phi; ++i) c.emplace_back(coeff(rng));
  return CyclotomicNumber(m, std::move(c));
}

bool boxes_intersect(const BoxC& a, const BoxC& b) {
  return !(a.re.hi < b.re.lo || b.re.hi < a.re.lo || a.im.hi < b.im.lo || b.im.hi < a.im.lo);
}

}  // namespace

TEST_CASE("interval arithmetic basics") {
  RatInterval a{Rational(-1), Rational(2)};
  RatInterval b{Rational(3), Rational(4)};
  CHECK((a * b).lo == -4);
  CHECK((a * b).hi == 8);
  CHECK(square(a).lo == 0);
  CHECK(square(a).hi == 4);
  CHECK((a + b).contains(Rational(3)));
}

TEST_CASE("unit_root_box axis points are exact") {
  for (long N : {1L, 2L, 4L, 8L, 12L}) {
    BoxC b = unit_root_box(N, 0, 64);
    CHECK(b.re.lo == 1);
    CHECK(b.re.hi == 1);
    CHECK(b.im.lo == 0);
  }
  BoxC i = unit_root_box(4, 1, 64);
  CHECK(i.re.lo == 0);
  CHECK(i.im.lo == 1);
  BoxC mi = unit_root_box(8, 6, 64);
  CHECK(mi.im.hi == -1);
}

TEST_CASE("unit_root_box encloses the true value tightly") {
  for (long j = 1; j < 5; ++j) {
    BoxC b = unit_root_box(5, j, 80);
    const double c = std::cos(2 * M_PI * j / 5), s = std::sin(2 * M_PI * j / 5);
    CHECK(to_double(b.re.lo) <= c + 1e-13);
    CHECK(c <= to_double(b.re.hi) + 1e-13);
    CHECK(to_double(b.im.lo) <= s + 1e-13);
    CHECK(s <= to_double(b.im.hi) + 1e-13);
    CHECK(to_double(b.re.radius()) <= std::ldexp(1.0, -78));
  }
}

TEST_CASE("embed_numeric on the golden-ratio element") {
  const CyclotomicNumber x =
      CyclotomicNumber::root_of_unity(5, 1) + CyclotomicNumber::root_of_unity(5, 4);
  const auto g0 = embeddings_G0(5);
  CertifiedInterval c1 = embed_numeric(x, g0[0], 96);
  const double expect1 = 2 * std::cos(2 * M_PI / 5);  // 0.6180...
  CHECK(to_double(c1.box.re.lo) <= expect1 + 1e-13);
  CHECK(expect1 <= to_double(c1.box.re.hi) + 1e-13);
  CHECK(c1.box.re.lo > 0);
  CHECK(c1.box.im.contains_zero());

  CertifiedInterval c2 = embed_numeric(x, g0[1], 96);
  const double expect2 = 2 * std::cos(4 * M_PI / 5);  // -1.6180...
  CHECK(to_double(c2.box.re.lo) <= expect2 + 1e-13);
  CHECK(expect2 <= to_double(c2.box.re.hi) + 1e-13);
  CHECK(c2.box.re.hi < 0);
}

TEST_CASE("embed_numeric of zero has radius zero") {
  CertifiedInterval c = embed_numeric(CyclotomicNumber::zero(5), identity_embedding(5), 64);
  CHECK(c.box.re.lo == 0);
  CHECK(c.box.re.hi == 0);
  CHECK(c.box.im.lo == 0);
  CHECK(c.box.im.hi == 0);
}

TEST_CASE("refinement shrinks the radius") {
  const CyclotomicNumber x =
      CyclotomicNumber::root_of_unity(5, 1) + CyclotomicNumber::root_of_unity(5, 4);
  const Embedding rho = identity_embedding(5);
  const Rational r64 = embed_numeric(x, rho, 64).box.re.radius();
  const Rational r128 = embed_numeric(x, rho, 128).box.re.radius();
  const Rational r256 = embed_numeric(x, rho, 256).box.re.radius();
  CHECK(r128 < r64);
  CHECK(r256 < r128);
  CHECK(r128 * pow2(32) < r64);  // at least geometric
}

TEST_CASE("embed_numeric respects multiplication") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 20; ++i) {
    for (long m : {5L, 8L, 12L}) {
      const CyclotomicNumber x = random_cyclo(rng, m);
      const CyclotomicNumber y = random_cyclo(rng, m);
      for (const Embedding& rho : embeddings_G0(m)) {
        const BoxC bx = embed_numeric(x, rho, 64).box;
        const BoxC by = embed_numeric(y, rho, 64).box;
        const BoxC bxy = embed_numeric(x * y, rho, 64).box;
        CHECK(boxes_intersect(bxy, bx * by));
      }
    }
  }
}

TEST_CASE("real_sign examples") {
  const CyclotomicNumber x =
      CyclotomicNumber::root_of_unity(5, 1) + CyclotomicNumber::root_of_unity(5, 4);
  const auto g0 = embeddings_G0(5);
  CHECK(real_sign(x, g0[0]) == 1);
  CHECK(real_sign(x, g0[1]) == -1);
  const CyclotomicNumber z =
      CyclotomicNumber::one(4) + CyclotomicNumber::root_of_unity(4, 2);
  CHECK(real_sign(z, identity_embedding(4)) == 0);
}

TEST_CASE("real_sign requires a conjugation-fixed element") {
  CHECK_THROWS_AS((void)real_sign(CyclotomicNumber::root_of_unity(4, 1), identity_embedding(4)),
                  ValidationError);
}

TEST_CASE("norms are nonnegative") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 25; ++i) {
    for (long m : {4L, 5L, 12L}) {
      const CyclotomicNumber x = random_cyclo(rng, m);
      for (const Embedding& rho : embeddings_G0(m)) {
        const int s = real_sign(x * conjugate(x), rho);
        if (x.is_zero())
          CHECK(s == 0);
        else
          CHECK(s == 1);
      }
    }
  }
}

TEST_CASE("lift then embed with the induced exponent agrees") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 15; ++i) {
    const CyclotomicNumber x = random_cyclo(rng, 4);
    const CyclotomicNumber lx = lift_to_compositum(x, 12);
    for (const Embedding& rho : embeddings_G0(4)) {
      const Embedding lifted(12, unit_lift(rho.k, 4, 12));
      CHECK(boxes_intersect(embed_numeric(x, rho, 80).box, embed_numeric(lx, lifted, 80).box));
    }
  }
}

TEST_CASE("angle intervals") {
  // a small box around e^{2 pi i / 8}
  const BoxC b = unit_root_box(8, 1, 64);
  auto a = angle_interval_turns(b, 64);
  REQUIRE(a.has_value());
  CHECK(a->contains(Rational(1, 8)));
  CHECK(a->hi - a->lo < Rational(1, 1000));

  // a box straddling the positive real axis wraps coherently
  const BoxC w{{Rational(99, 100), Rational(101, 100)}, {Rational(-1, 100), Rational(1, 100)}};
  auto aw = angle_interval_turns(w, 64);
  REQUIRE(aw.has_value());
  CHECK(aw->hi - aw->lo < Rational(1, 10));
  CHECK(aw->contains(aw->lo / 2 + aw->hi / 2));

  // boxes containing the origin are rejected
  const BoxC o{{Rational(-1), Rational(1)}, {Rational(-1), Rational(1)}};
  CHECK(!angle_interval_turns(o, 64).has_value());
}

TEST_CASE("recip through boxes") {
  const BoxC b = unit_root_box(8, 3, 64);
  const BoxC r = recip(b);
  // 1/e^{2 pi i 3/8} = e^{-2 pi i 3/8}
  const BoxC expect = unit_root_box(8, -3, 64);
  CHECK(boxes_intersect(r, expect));
  const BoxC o{{Rational(-1), Rational(1)}, {Rational(-1), Rational(1)}};
  CHECK_THROWS_AS((void)recip(o), IndeterminateIntervalError);
}
