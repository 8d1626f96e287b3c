#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wittsig/cyclotomic.hpp"
#include "wittsig/errors.hpp"

using namespace wittsig;

namespace {

CyclotomicNumber zeta(long m, long e = 1) { return CyclotomicNumber::root_of_unity(m, e); }

CyclotomicNumber random_cyclo(std::mt19937_64& rng, long m) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  const long phi = conductor_data(m).phi;
  std::vector<Rational> c;
  for (long i = 0; i < phi; ++i) c.emplace_back(coeff(rng), den(rng));
  return CyclotomicNumber(m, std::move(c));
}

}  // namespace

TEST_CASE("phi and conductor data") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(4) == 2);
  CHECK(euler_phi(5) == 4);
  CHECK(euler_phi(12) == 4);
  CHECK(conductor_data(8).phi == 4);
  // Phi_4 = x^2 + 1
  CHECK(conductor_data(4).min_poly == std::vector<Rational>{1, 0, 1});
  // Phi_12 = x^4 - x^2 + 1
  CHECK(conductor_data(12).min_poly == std::vector<Rational>{1, 0, -1, 0, 1});
}

TEST_CASE("1 + zeta_4^2 = 0") {
  CyclotomicNumber x = CyclotomicNumber::one(4) + zeta(4, 2);
  CHECK(x.is_zero());
}

TEST_CASE("inverse of zeta_5 is zeta_5^4 = -1 - z - z^2 - z^3") {
  CyclotomicNumber inv = inverse(zeta(5));
  CHECK(inv == zeta(5, 4));
  CHECK(inv.coeffs() == std::vector<Rational>{-1, -1, -1, -1});
  CHECK((inv * zeta(5)) == CyclotomicNumber::one(5));
}

TEST_CASE("(zeta_8 + zeta_8^-1)^2 = 2") {
  CyclotomicNumber s = zeta(8) + zeta(8, -1);
  CHECK(s * s == CyclotomicNumber(Rational(2)) * CyclotomicNumber::one(8));
}

TEST_CASE("conjugation") {
  CHECK(conjugate(zeta(4)) == -zeta(4));
  CHECK(conjugate(CyclotomicNumber(Rational(7, 3))) == CyclotomicNumber(Rational(7, 3)));
  const CyclotomicNumber real5 = zeta(5) + zeta(5, 4);
  CHECK(conjugate(real5) == real5);
  CHECK(is_conjugation_fixed(real5));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 40; ++i) {
    for (long m : {5L, 8L, 12L}) {
      const CyclotomicNumber x = random_cyclo(rng, m);
      const CyclotomicNumber y = random_cyclo(rng, m);
      CHECK(conjugate(conjugate(x)) == x);
      CHECK(conjugate(x * y) == conjugate(x) * conjugate(y));
      CHECK(conjugate(x + y) == conjugate(x) + conjugate(y));
    }
  }
}

TEST_CASE("field axioms and exact zero test on random elements") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 30; ++i) {
    for (long m : {1L, 3L, 4L, 5L, 8L, 12L}) {
      const CyclotomicNumber x = random_cyclo(rng, m);
      const CyclotomicNumber y = random_cyclo(rng, m);
      const CyclotomicNumber z = random_cyclo(rng, m);
      CHECK((x - x).is_zero());
      CHECK(x * (y + z) == x * y + x * z);
      if (!y.is_zero()) CHECK((x / y) * y == x);
      if (!x.is_zero()) CHECK(x * inverse(x) == CyclotomicNumber::one(m));
    }
  }
}

TEST_CASE("division by zero and conductor mismatch errors") {
  CHECK_THROWS_AS((void)inverse(CyclotomicNumber::zero(5)), DivideByZeroError);
  CHECK_THROWS_AS((void)(zeta(3) + zeta(4)), ConductorMismatchError);
  // rationals embed everywhere silently
  CHECK(zeta(4) * CyclotomicNumber(Rational(2)) == zeta(4) + zeta(4));
}

TEST_CASE("embeddings_G0") {
  CHECK(embeddings_G0(1).size() == 1);
  CHECK(embeddings_G0(2).size() == 1);
  auto g5 = embeddings_G0(5);
  REQUIRE(g5.size() == 2);
  CHECK(g5[0].k == 1);
  CHECK(g5[1].k == 2);
  auto g12 = embeddings_G0(12);
  REQUIRE(g12.size() == 2);
  CHECK(g12[0].k == 1);
  CHECK(g12[1].k == 5);
  for (long m : {3L, 4L, 5L, 7L, 8L, 9L, 12L, 16L, 20L}) {
    auto g = embeddings_G0(m);
    CHECK(static_cast<long>(g.size()) == std::max(1L, euler_phi(m) / 2));
    for (const auto& a : g)
      for (const auto& b : g) CHECK((a.k + b.k) % m != 0);
  }
}

TEST_CASE("lift_to_compositum") {
  CHECK(lift_to_compositum(CyclotomicNumber(Rational(3)), 4) ==
        Rational(3) * CyclotomicNumber::one(4));
  CHECK(lift_to_compositum(zeta(4), 12) == zeta(12, 3));
  CHECK(lift_to_compositum(zeta(3), 12) == zeta(12, 4));
  CHECK_THROWS_AS((void)lift_to_compositum(zeta(5), 12), ValidationError);
  // ring homomorphism, commutes with conjugation
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const CyclotomicNumber x = random_cyclo(rng, 4);
    const CyclotomicNumber y = random_cyclo(rng, 4);
    CHECK(lift_to_compositum(x * y, 12) == lift_to_compositum(x, 12) * lift_to_compositum(y, 12));
    CHECK(lift_to_compositum(conjugate(x), 12) == conjugate(lift_to_compositum(x, 12)));
  }
}

TEST_CASE("galois action is a ring automorphism respecting G0 pairing") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    const CyclotomicNumber x = random_cyclo(rng, 12);
    const CyclotomicNumber y = random_cyclo(rng, 12);
    CHECK(galois_apply(x * y, 5) == galois_apply(x, 5) * galois_apply(y, 5));
    CHECK(galois_apply(galois_apply(x, 5), 5) == x);  // 5^2 = 25 = 1 mod 12
  }
  CHECK(galois_apply(zeta(12), 7) == zeta(12, 7));
}

TEST_CASE("field trace") {
  CHECK(field_trace(CyclotomicNumber::one(4)) == 2);
  CHECK(field_trace(zeta(4)) == 0);
  CHECK(field_trace(CyclotomicNumber::one(5)) == 4);
  CHECK(field_trace(zeta(5)) == -1);
}

TEST_CASE("unit_lift") {
  CHECK(unit_lift(1, 4, 12) == 1);
  CHECK(unit_lift(3, 4, 12) == 7);  // 3 mod 4, coprime to 12
  CHECK(unit_lift(2, 5, 20) == 7);  // 2 mod 5, coprime to 20
  for (long k2 : {unit_lift(2, 5, 20)}) CHECK(gcd_long(k2, 20) == 1);
}

TEST_CASE("unity points normalize") {
  UnityPoint p(8, 6);
  CHECK(p.N == 4);
  CHECK(p.j == 3);
  CHECK(p.angle_turns() == Rational(3, 4));
  CHECK(UnityPoint(4, 0).is_one());
  CHECK(UnityPoint(6, 3) == UnityPoint(2, 1));
  CHECK(UnityPoint(4, 3).value(4) == zeta(4, 3));
}
