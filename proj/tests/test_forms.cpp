#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wittsig/errors.hpp"
#include "wittsig/forms.hpp"
#include "wittsig/interval.hpp"

using namespace wittsig;

namespace {

RationalFunction rf_t() { return RationalFunction::variable(1); }
RationalFunction rf(long n) { return RationalFunction(Rational(n)); }

HermitianForm hyperbolic_t() {
  // [[0, t], [t^-1, 1]]
  MatR g(2, 2);
  g(0, 0) = RationalFunction();
  g(0, 1) = rf_t();
  g(1, 0) = inverse(rf_t());
  g(1, 1) = rf(1);
  return HermitianForm(1, 1, g);
}

MatC diag_form(long m, const std::vector<CyclotomicNumber>& d) {
  MatC a = MatC::Zero(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
  for (size_t i = 0; i < d.size(); ++i)
    a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = lift_to_compositum(d[i], m);
  return a;
}

// The worked 1x1 split block for z = zeta_4:
//   i (1 - t^-1)(1 - i)^-1 - i (1 - t)(1 + i)^-1
// which expands to [ (i+1)/2 t - 1 - (i-1)/2 t^-1 ].
RationalFunction expected_block_zeta4() {
  const CyclotomicNumber i4 = CyclotomicNumber::root_of_unity(4, 1);
  const CyclotomicNumber half(Rational(1, 2));
  LaurentPoly p(4);
  p.set_term(1, (i4 + CyclotomicNumber::one(4)) * half);
  p.set_term(0, CyclotomicNumber(Rational(-1)));
  p.set_term(-1, -(i4 - CyclotomicNumber::one(4)) * half);
  return RationalFunction(p);
}

}  // namespace

TEST_CASE("validate examples") {
  CHECK(validate(hyperbolic_t()).ok);

  MatR bad(1, 1);
  bad(0, 0) = rf_t();
  HermitianForm f(1, 1, bad);
  ValidationReport rep = validate(f);
  CHECK(!rep.ok);
  CHECK(rep.row == 0);
  CHECK(rep.col == 0);
  CHECK(rep.message.find("(1,1)") != std::string::npos);

  MatR blk(1, 1);
  blk(0, 0) = expected_block_zeta4();
  CHECK(validate(HermitianForm(4, 1, blk)).ok);
}

TEST_CASE("witt element plumbing") {
  WittElement a(4, 1);
  a.add(hyperbolic_t(), Rational(1));
  WittElement empty(4, 1);
  CHECK(direct_sum(a, empty).summands().size() == 1);
  CHECK(scale(a, Rational(0)).empty());
  const WittElement half_then_double = scale(scale(a, Rational(1, 2)), Rational(2));
  REQUIRE(half_then_double.summands().size() == 1);
  CHECK(half_then_double.summands()[0].coeff == 1);
  CHECK_THROWS_AS((void)direct_sum(a, WittElement(3, 1)), ConductorMismatchError);
  CHECK_THROWS_AS((void)direct_sum(a, WittElement(4, -1)), ValidationError);
}

TEST_CASE("diagonalize_constant on the standard examples") {
  // [[0,1],[1,0]] -> {2, -1/2}
  MatC h = MatC::Zero(2, 2);
  h(0, 1) = CyclotomicNumber(Rational(1));
  h(1, 0) = CyclotomicNumber(Rational(1));
  auto d = diagonalize_constant(h);
  REQUIRE(d.size() == 2);
  CHECK(d[0] == CyclotomicNumber(Rational(2)));
  CHECK(d[1] == CyclotomicNumber(Rational(-1, 2)));

  // diag(1,-1) stays put
  MatC dm = diag_form(1, {CyclotomicNumber(Rational(1)), CyclotomicNumber(Rational(-1))});
  auto d2 = diagonalize_constant(dm);
  CHECK(d2[0] == CyclotomicNumber(Rational(1)));
  CHECK(d2[1] == CyclotomicNumber(Rational(-1)));

  // [[0, i], [-i, 0]] over Q(zeta_4): two entries of opposite sign
  const CyclotomicNumber i4 = CyclotomicNumber::root_of_unity(4, 1);
  MatC sk = MatC::Zero(2, 2);
  sk(0, 1) = i4;
  sk(1, 0) = -i4;
  auto d3 = diagonalize_constant(sk);
  REQUIRE(d3.size() == 2);
  const Embedding id4 = identity_embedding(4);
  CHECK(real_sign(d3[0], id4) * real_sign(d3[1], id4) == -1);
}

TEST_CASE("diagonalization is a congruence invariant of the signature") {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int rep = 0; rep < 15; ++rep) {
    for (long m : {1L, 4L, 5L}) {
      const long phi = conductor_data(m).phi;
      auto rand_c = [&] {
        std::vector<Rational> c;
        for (long i = 0; i < phi; ++i) c.emplace_back(coeff(rng));
        return CyclotomicNumber(m, std::move(c));
      };
      const Eigen::Index n = 3;
      MatC z(n, n);
      for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) z(i, j) = rand_c();
      MatC a = z + conj_transpose(z);  // hermitian
      if (det(a).is_zero()) continue;
      HermitianForm f = HermitianForm::constant(m, 1, a);
      // congruence by a random invertible P preserves every signature
      MatC p(n, n);
      do {
        for (Eigen::Index i = 0; i < n; ++i)
          for (Eigen::Index j = 0; j < n; ++j) p(i, j) = rand_c();
      } while (det(p).is_zero());
      HermitianForm g = HermitianForm::constant(m, 1, MatC(conj_transpose(p) * a * p));
      for (const Embedding& rho : embeddings_G0(m))
        CHECK(signature_constant(f, rho) == signature_constant(g, rho));
    }
  }
}

TEST_CASE("signature_constant examples") {
  MatC id2 = diag_form(1, {CyclotomicNumber(Rational(1)), CyclotomicNumber(Rational(1))});
  HermitianForm f = HermitianForm::constant(1, 1, id2);
  CHECK(signature_constant(f, identity_embedding(1)) == 2);

  MatC pm = diag_form(1, {CyclotomicNumber(Rational(1)), CyclotomicNumber(Rational(-1))});
  CHECK(signature_constant(HermitianForm::constant(1, 1, pm), identity_embedding(1)) == 0);

  const CyclotomicNumber gold =
      CyclotomicNumber::root_of_unity(5, 1) + CyclotomicNumber::root_of_unity(5, 4);
  HermitianForm g = HermitianForm::constant(5, 1, diag_form(5, {gold}));
  const auto g0 = embeddings_G0(5);
  CHECK(signature_constant(g, g0[0]) == 1);
  CHECK(signature_constant(g, g0[1]) == -1);

  MatC z = MatC::Zero(1, 1);
  CHECK_THROWS_AS((void)signature_constant(HermitianForm::constant(1, 1, z), identity_embedding(1)),
                  SingularFormError);
}

TEST_CASE("signature_vector examples") {
  MatC one = diag_form(5, {CyclotomicNumber(Rational(1))});
  auto v1 = signature_vector(HermitianForm::constant(5, 1, one));
  REQUIRE(v1.size() == 2);
  CHECK(v1[0].second == 1);
  CHECK(v1[1].second == 1);

  const CyclotomicNumber gold =
      CyclotomicNumber::root_of_unity(5, 1) + CyclotomicNumber::root_of_unity(5, 4);
  auto v2 = signature_vector(HermitianForm::constant(5, 1, diag_form(5, {gold})));
  CHECK(v2[0].second == 1);
  CHECK(v2[1].second == -1);

  auto v3 = signature_vector(HermitianForm::constant(5, 1, diag_form(5, {gold, -gold})));
  CHECK(v3[0].second == 0);
  CHECK(v3[1].second == 0);
}

TEST_CASE("signature additivity, negation, parity") {
  std::mt19937_64 rng(67);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int rep = 0; rep < 10; ++rep) {
    const long m = 5;
    const long phi = conductor_data(m).phi;
    auto rand_c = [&] {
      std::vector<Rational> c;
      for (long i = 0; i < phi; ++i) c.emplace_back(coeff(rng));
      return CyclotomicNumber(m, std::move(c));
    };
    auto rand_herm = [&](Eigen::Index n) {
      MatC z(n, n);
      for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) z(i, j) = rand_c();
      return MatC(z + conj_transpose(z));
    };
    MatC a = rand_herm(2), b = rand_herm(3);
    if (det(a).is_zero() || det(b).is_zero()) continue;
    MatC ab = MatC::Zero(5, 5);
    ab.topLeftCorner(2, 2) = a;
    ab.bottomRightCorner(3, 3) = b;
    for (const Embedding& rho : embeddings_G0(m)) {
      const int sa = signature_constant(HermitianForm::constant(m, 1, a), rho);
      const int sb = signature_constant(HermitianForm::constant(m, 1, b), rho);
      const int sab = signature_constant(HermitianForm::constant(m, 1, ab), rho);
      CHECK(sab == sa + sb);
      CHECK(signature_constant(HermitianForm::constant(m, 1, MatC(-a)), rho) == -sa);
      // parity: signature = rank mod 2
      CHECK((sa - 2) % 2 == 0);
      CHECK((sb - 3) % 2 == 0);
    }
  }
}

TEST_CASE("skew forms twist by i") {
  // <i> over Q(zeta_4) is skew; its twisted signature is the sign of
  // i * rho(i), i.e. -1 at the identity embedding (rho(i) = i, i*i = -1).
  const CyclotomicNumber i4 = CyclotomicNumber::root_of_unity(4, 1);
  HermitianForm f = HermitianForm::constant(4, -1, diag_form(4, {i4}));
  CHECK(validate(f).ok);
  CHECK(signature_constant(f, identity_embedding(4)) == -1);
  HermitianForm g = HermitianForm::constant(4, -1, diag_form(4, {-i4}));
  CHECK(signature_constant(g, identity_embedding(4)) == 1);
}

TEST_CASE("extend_constant") {
  MatC one = diag_form(3, {CyclotomicNumber::root_of_unity(3, 1) +
                           CyclotomicNumber::root_of_unity(3, 2)});
  // zeta_3 + zeta_3^2 = -1 exactly
  CHECK(one(0, 0) == CyclotomicNumber(Rational(-1)));
  HermitianForm f = HermitianForm::constant(3, 1, one);
  HermitianForm e = extend_constant(f);
  CHECK(e.is_constant());
  CHECK(e.gram()(0, 0) == RationalFunction(Rational(-1)));
  CHECK_THROWS_AS((void)extend_constant(hyperbolic_t()), ValidationError);
}

TEST_CASE("isometry triple validation") {
  const CyclotomicNumber i4 = CyclotomicNumber::root_of_unity(4, 1);
  MatC theta = diag_form(4, {i4});
  MatC f1 = diag_form(4, {CyclotomicNumber(Rational(1))});
  CHECK_THROWS_AS(IsometryTriple(4, -1, theta, f1), ValidationError);  // f = 1 not fibered
  MatC fz = diag_form(4, {i4});
  IsometryTriple ok(4, -1, theta, fz);
  CHECK(ok.dim() == 1);
  // not an isometry: f = 2
  MatC f2 = diag_form(4, {CyclotomicNumber(Rational(2))});
  CHECK_THROWS_AS(IsometryTriple(4, -1, theta, f2), ValidationError);
}

TEST_CASE("split_form reproduces the worked z = zeta_4 block") {
  const CyclotomicNumber i4 = CyclotomicNumber::root_of_unity(4, 1);
  IsometryTriple triple(4, -1, diag_form(4, {i4}), diag_form(4, {i4}));
  HermitianForm blk = split_form(triple, 1);
  CHECK(blk.epsilon() == 1);
  REQUIRE(blk.rank() == 1);
  CHECK(blk.gram()(0, 0) == expected_block_zeta4());
  CHECK(validate(blk).ok);
  CHECK(is_nonsingular(blk));

  // exact values: at t = -1 the entry is -2; at t = i it is -2
  CHECK(eval_root_of_unity(blk.gram()(0, 0), 2, 1) == CyclotomicNumber(Rational(-2)));
  CHECK(eval_root_of_unity(blk.gram()(0, 0), 4, 1) == CyclotomicNumber(Rational(-2)));
  // numeric: at t = e^{-i pi/4} the entry is sqrt(2) - 1 > 0
  const CyclotomicNumber v = eval_root_of_unity(blk.gram()(0, 0), 8, 7);
  CHECK(is_conjugation_fixed(v));
  const double mid = embed_numeric(v, identity_embedding(8), 96).box.re.mid().get_d();
  CHECK(std::abs(mid - 0.41421356237309515) < 1e-12);

  CHECK_THROWS_AS((void)split_form(triple, -1), ValidationError);  // epsilon mismatch
}

TEST_CASE("split_form is hermitian and nonsingular for random triples") {
  // 1x1 skew triples over assorted roots of unity
  for (long d : {3L, 4L, 8L, 12L}) {
    for (long j = 1; j < d; ++j) {
      if (gcd_long(j, d) != 1) continue;
      const long mb = lcm_long(4, d);
      MatC theta = diag_form(mb, {CyclotomicNumber::root_of_unity(mb, mb / 4)});
      MatC fz = diag_form(mb, {CyclotomicNumber::root_of_unity(mb, j * (mb / d))});
      HermitianForm blk = split_form(IsometryTriple(mb, -1, theta, fz), 1);
      CHECK(validate(blk).ok);
      CHECK(is_nonsingular(blk));
    }
  }
}

TEST_CASE("make_metabolic basics") {
  // the textbook instance [[0, t], [t^-1, 1]]
  CHECK(validate(hyperbolic_t()).ok);
  CHECK(is_nonsingular(hyperbolic_t()));
  CHECK(det(hyperbolic_t().gram()) == RationalFunction(Rational(-1)));

  for (long m : {1L, 3L, 4L, 5L, 8L, 12L}) {
    for (int n = 1; n <= 3; ++n) {
      HermitianForm f = make_metabolic(n, m, 1000 + static_cast<unsigned long>(m) + n);
      CHECK(f.rank() == 2 * n);
      CHECK(validate(f).ok);
      CHECK(is_nonsingular(f));
      // explicit zero upper-left block
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) CHECK(f.gram()(i, j).is_zero());
    }
  }
  // determinism
  HermitianForm a = make_metabolic(2, 5, 42), b = make_metabolic(2, 5, 42);
  CHECK(mats_equal(a.gram(), b.gram()));
}

TEST_CASE("make_canonical") {
  // r0 = 1, no blocks: the constant <1>
  WittElement w = make_canonical(Rational(1), {});
  REQUIRE(w.summands().size() == 1);
  CHECK(w.summands()[0].form.rank() == 1);
  CHECK(w.summands()[0].form.gram()(0, 0) == RationalFunction(Rational(1)));

  // r0 = 0, one block z = zeta_4: exactly the worked split form
  WittElement w2 = make_canonical(Rational(0), {CanonicalBlock{UnityPoint(4, 1), Rational(1)}});
  REQUIRE(w2.summands().size() == 1);
  CHECK(w2.conductor() == 4);
  CHECK(w2.summands()[0].form.gram()(0, 0) == expected_block_zeta4());

  // multiplicity is formal
  WittElement w3 = make_canonical(Rational(0), {CanonicalBlock{UnityPoint(4, 1), Rational(3)}});
  CHECK(w3.summands()[0].coeff == 3);

  CHECK_THROWS_AS((void)make_canonical(Rational(0), {CanonicalBlock{UnityPoint(1, 0), Rational(1)}}),
                  ValidationError);
  CHECK_THROWS_AS((void)make_canonical(Rational(0),
                                       {CanonicalBlock{UnityPoint(4, 1), Rational(1)},
                                        CanonicalBlock{UnityPoint(8, 2), Rational(2)}}),
                  ValidationError);  // zeta_8^2 = zeta_4: duplicate point
}
