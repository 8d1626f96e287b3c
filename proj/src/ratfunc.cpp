#include "wittsig/ratfunc.hpp"

#include <sstream>

#include "wittsig/errors.hpp"

namespace wittsig {

RationalFunction::RationalFunction() : num_(1), den_(1) {
  den_.set_term(0, CyclotomicNumber::one(1));
}

RationalFunction::RationalFunction(const LaurentPoly& num) : num_(num), den_(num.conductor()) {
  den_.set_term(0, CyclotomicNumber::one(num.conductor()));
  canonicalize();
}

RationalFunction::RationalFunction(const LaurentPoly& num, const LaurentPoly& den)
    : num_(num), den_(den) {
  canonicalize();
}

RationalFunction::RationalFunction(const CyclotomicNumber& c)
    : RationalFunction(LaurentPoly::constant(c)) {}

RationalFunction::RationalFunction(const Rational& q)
    : RationalFunction(LaurentPoly::constant(CyclotomicNumber(q))) {}

RationalFunction RationalFunction::variable(long m) {
  return RationalFunction(LaurentPoly::variable(m));
}

CyclotomicNumber RationalFunction::constant_value() const {
  if (!is_constant()) throw ValidationError("rational function is not constant");
  return num_.constant_value() / den_.constant_value();
}

void RationalFunction::canonicalize() {
  if (den_.is_zero()) throw DivideByZeroError("zero denominator in rational function");
  const long m = lcm_long(num_.conductor(), den_.conductor());
  num_ = lift_poly(num_, m);
  den_ = lift_poly(den_, m);
  if (num_.is_zero()) {
    den_ = LaurentPoly::constant(CyclotomicNumber::one(m));
    return;
  }
  // Push the denominator's monomial content into the numerator.
  const long vd = den_.min_exp();
  if (vd != 0) {
    den_ = shift(den_, -vd);
    num_ = shift(num_, -vd);
  }
  // Cancel the common polynomial factor.
  const long vn = num_.min_exp();
  LaurentPoly np = shift(num_, -vn);
  if (den_.max_exp() > 0) {
    const LaurentPoly g = poly_gcd(np, den_);
    if (!g.is_zero() && g.max_exp() > 0) {
      np = poly_exact_div(np, g);
      den_ = poly_exact_div(den_, g);
    }
  }
  // Monic denominator.
  const CyclotomicNumber lead = den_.coeff(den_.max_exp());
  if (!(lead == CyclotomicNumber::one(m))) {
    const CyclotomicNumber inv_lead = inverse(lead);
    den_ = inv_lead * den_;
    np = inv_lead * np;
  }
  num_ = shift(np, vn);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw DivideByZeroError("division by zero rational function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction inverse(const RationalFunction& a) {
  if (a.is_zero()) throw DivideByZeroError("inverse of zero rational function");
  return RationalFunction(a.den(), a.num());
}

RationalFunction bar(const RationalFunction& a) {
  return RationalFunction(bar(a.num()), bar(a.den()));
}

RationalFunction galois_rf(const RationalFunction& a, long k) {
  return RationalFunction(galois_poly(a.num(), k), galois_poly(a.den(), k));
}

RationalFunction lift_rf(const RationalFunction& a, long m2) {
  return RationalFunction(lift_poly(a.num(), m2), lift_poly(a.den(), m2));
}

CyclotomicNumber eval_root_of_unity(const RationalFunction& a, long N, long j) {
  const CyclotomicNumber dv = eval_at_root_of_unity(a.den(), N, j);
  if (dv.is_zero()) {
    long g = gcd_long(((j % N) + N) % N, N);
    throw PoleError("pole at t = zeta_" + std::to_string(N / g) + "^" +
                    std::to_string((((j % N) + N) % N) / g));
  }
  return eval_at_root_of_unity(a.num(), N, j) / dv;
}

namespace {

// Horner evaluation of a Laurent polynomial on a box; negative exponents go
// through a reciprocal of z.
BoxC eval_poly_box(const LaurentPoly& p, const Embedding& rho, const BoxC& z, long prec) {
  BoxC acc = BoxC::point(0, 0);
  if (p.is_zero()) return acc;
  const long vmin = p.min_exp();
  // Horner over the shifted polynomial p * t^{-vmin}.
  const long deg = p.max_exp() - vmin;
  for (long e = deg; e >= 0; --e) {
    acc = acc * z;
    const CyclotomicNumber c = p.coeff(e + vmin);
    if (!c.is_zero()) acc = acc + embed_numeric(c, rho, prec).box;
  }
  if (vmin != 0) {
    BoxC zp = vmin > 0 ? z : recip(z);
    long k = vmin > 0 ? vmin : -vmin;
    BoxC pw = BoxC::point(1, 0);
    for (long i = 0; i < k; ++i) pw = pw * zp;
    acc = acc * pw;
  }
  return acc;
}

}  // namespace

CertifiedInterval eval_numeric(const RationalFunction& a, const Embedding& rho, const BoxC& z,
                               long prec) {
  const BoxC nv = eval_poly_box(a.num(), rho, z, prec);
  if (a.den().is_constant() && a.den().constant_value() == CyclotomicNumber::one(a.conductor()))
    return CertifiedInterval{nv, prec};
  const BoxC dv = eval_poly_box(a.den(), rho, z, prec);
  return CertifiedInterval{nv * recip(dv), prec};
}

std::string to_string(const RationalFunction& a) {
  std::ostringstream os;
  os << "(" << to_string(a.num()) << ")/(" << to_string(a.den()) << ")";
  return os.str();
}

}  // namespace wittsig
