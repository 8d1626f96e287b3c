#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wittsig/errors.hpp"
#include "wittsig/ratfunc.hpp"

using namespace wittsig;

namespace {

const CyclotomicNumber one1 = CyclotomicNumber::one(1);

RationalFunction random_rf(std::mt19937_64& rng, long m) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  const long phi = conductor_data(m).phi;
  auto rand_poly = [&](long lo, long hi) {
    LaurentPoly p(m);
    for (long e = lo; e <= hi; ++e) {
      std::vector<Rational> c;
      for (long i = 0; i < phi; ++i) c.emplace_back(coeff(rng));
      p.set_term(e, CyclotomicNumber(m, std::move(c)));
    }
    return p;
  };
  LaurentPoly den = rand_poly(0, 1);
  while (den.is_zero()) den = rand_poly(0, 1);
  return RationalFunction(rand_poly(-1, 2), den);
}

}  // namespace

TEST_CASE("canonical form") {
  const RationalFunction t = RationalFunction::variable(1);
  CHECK(t * inverse(t) == RationalFunction(Rational(1)));
  // (1-t)/(1-t) = 1
  const RationalFunction one(Rational(1));
  const RationalFunction f = (one - t) / (one - t);
  CHECK(f == one);
  // denominators are monic polynomials with nonzero constant term
  const RationalFunction g = one / (RationalFunction(Rational(2)) * t - RationalFunction(Rational(2)));
  CHECK(g.den().coeff(g.den().max_exp()) == CyclotomicNumber::one(1));
  CHECK(!g.den().coeff(0).is_zero());
}

TEST_CASE("bar of 1/(1-t)") {
  const RationalFunction t = RationalFunction::variable(1);
  const RationalFunction one(Rational(1));
  const RationalFunction f = one / (one - t);
  const RationalFunction expect = t / (t - one);  // = -t/(1-t)
  CHECK(bar(f) == expect);
  // cross-multiplication check of the same identity
  CHECK(bar(f) * (t - one) == t);
}

TEST_CASE("bar is an involutive field automorphism") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 25; ++i) {
    for (long m : {1L, 4L, 5L, 12L}) {
      const RationalFunction a = random_rf(rng, m);
      const RationalFunction b = random_rf(rng, m);
      CHECK(bar(bar(a)) == a);
      CHECK(bar(a * b) == bar(a) * bar(b));
      CHECK(bar(a + b) == bar(a) + bar(b));
      if (!b.is_zero()) CHECK(bar(a / b) == bar(a) / bar(b));
    }
  }
}

TEST_CASE("m=4: bar(i t) = -i t^-1") {
  const CyclotomicNumber i4 = CyclotomicNumber::root_of_unity(4, 1);
  const RationalFunction f(LaurentPoly::monomial(i4, 1));
  const RationalFunction expect(LaurentPoly::monomial(conjugate(i4), -1));
  CHECK(bar(f) == expect);
}

TEST_CASE("evaluation at roots of unity") {
  const RationalFunction t = RationalFunction::variable(1);
  const RationalFunction s = t + inverse(t);
  const CyclotomicNumber v = eval_root_of_unity(s, 8, 1);
  CHECK(v == CyclotomicNumber(8, {Rational(0), Rational(1), Rational(0), Rational(-1)}));
  CHECK(eval_root_of_unity(RationalFunction(Rational(1)), 12, 5) ==
        CyclotomicNumber::one(12));
  const RationalFunction pole = RationalFunction(Rational(1)) / (RationalFunction(Rational(1)) - t);
  CHECK_THROWS_AS((void)eval_root_of_unity(pole, 1, 0), PoleError);
}

TEST_CASE("evaluation is a field homomorphism off poles") {
  std::mt19937_64 rng(43);
  int done = 0;
  while (done < 30) {
    const RationalFunction a = random_rf(rng, 4);
    const RationalFunction b = random_rf(rng, 4);
    try {
      const CyclotomicNumber va = eval_root_of_unity(a, 8, 3);
      const CyclotomicNumber vb = eval_root_of_unity(b, 8, 3);
      CHECK(eval_root_of_unity(a * b, 8, 3) == va * vb);
      CHECK(eval_root_of_unity(a + b, 8, 3) == va + vb);
      ++done;
    } catch (const PoleError&) {
      continue;
    }
  }
}

TEST_CASE("bar evaluates to the conjugate on the circle") {
  std::mt19937_64 rng(47);
  int done = 0;
  while (done < 20) {
    const RationalFunction a = random_rf(rng, 12);
    try {
      const CyclotomicNumber v = eval_root_of_unity(a, 8, 1);
      CHECK(eval_root_of_unity(bar(a), 8, 1) == conjugate(v));
      ++done;
    } catch (const PoleError&) {
      continue;
    }
  }
}

TEST_CASE("eval_numeric basics") {
  const RationalFunction t = RationalFunction::variable(1);
  // a = t at a box around i
  const BoxC zi = unit_root_box(4, 1, 64);
  CertifiedInterval ci = eval_numeric(t, identity_embedding(1), zi, 64);
  CHECK(ci.box.im.lo == 1);
  // a = 2 - t - t^-1 at z = -1 gives 4
  const RationalFunction a = RationalFunction(Rational(2)) - t - inverse(t);
  const BoxC zm1 = unit_root_box(2, 1, 64);
  ci = eval_numeric(a, identity_embedding(1), zm1, 64);
  CHECK(ci.box.re.contains(Rational(4)));
  CHECK(ci.box.re.radius() < Rational(1, 1000));
  // 1/(1-t) at a box containing 1 is indeterminate
  const RationalFunction pole = RationalFunction(Rational(1)) / (RationalFunction(Rational(1)) - t);
  const BoxC z1{{Rational(99, 100), Rational(101, 100)}, {Rational(-1, 100), Rational(1, 100)}};
  CHECK_THROWS_AS((void)eval_numeric(pole, identity_embedding(1), z1, 64),
                  IndeterminateIntervalError);
}

TEST_CASE("eval_numeric contains the exact evaluation") {
  std::mt19937_64 rng(53);
  int done = 0;
  while (done < 25) {
    const RationalFunction a = random_rf(rng, 5);
    for (const Embedding& rho : embeddings_G0(5)) {
      try {
        const CyclotomicNumber exact = eval_root_of_unity(a, 8, 5);
        // apply the Galois substitution matching rho, then embed at identity
        const CyclotomicNumber mapped =
            eval_root_of_unity(galois_rf(a, rho.k), 8, 5);
        const CertifiedInterval exact_box = embed_numeric(mapped, identity_embedding(40), 96);
        const BoxC z = unit_root_box(8, 5, 96);
        const CertifiedInterval approx = eval_numeric(a, rho, z, 96);
        CHECK(!(approx.box.re.hi < exact_box.box.re.lo ||
                exact_box.box.re.hi < approx.box.re.lo));
        CHECK(!(approx.box.im.hi < exact_box.box.im.lo ||
                exact_box.box.im.hi < approx.box.im.lo));
        ++done;
      } catch (const PoleError&) {
        continue;
      } catch (const IndeterminateIntervalError&) {
        continue;
      }
    }
  }
}

TEST_CASE("division by zero rational function") {
  const RationalFunction t = RationalFunction::variable(1);
  CHECK_THROWS_AS((void)(t / RationalFunction()), DivideByZeroError);
  CHECK_THROWS_AS((void)inverse(RationalFunction()), DivideByZeroError);
}
