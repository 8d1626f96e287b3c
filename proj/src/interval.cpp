#include "wittsig/interval.hpp"

#include <mpfr.h>

#include <algorithm>

#include "wittsig/errors.hpp"

namespace wittsig {

RatInterval operator+(const RatInterval& a, const RatInterval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
RatInterval operator-(const RatInterval& a, const RatInterval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
RatInterval operator-(const RatInterval& a) { return {-a.hi, -a.lo}; }

RatInterval operator*(const RatInterval& a, const RatInterval& b) {
  const Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {std::min(std::min(p1, p2), std::min(p3, p4)), std::max(std::max(p1, p2), std::max(p3, p4))};
}

RatInterval operator*(const Rational& a, const RatInterval& b) {
  if (a >= 0) return {a * b.lo, a * b.hi};
  return {a * b.hi, a * b.lo};
}

RatInterval square(const RatInterval& a) {
  const Rational s1 = a.lo * a.lo, s2 = a.hi * a.hi;
  if (a.contains_zero()) return {Rational(0), std::max(s1, s2)};
  return {std::min(s1, s2), std::max(s1, s2)};
}

RatInterval hull(const RatInterval& a, const RatInterval& b) {
  return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

BoxC operator+(const BoxC& a, const BoxC& b) { return {a.re + b.re, a.im + b.im}; }
BoxC operator-(const BoxC& a, const BoxC& b) { return {a.re - b.re, a.im - b.im}; }

BoxC operator*(const BoxC& a, const BoxC& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

BoxC operator*(const Rational& a, const BoxC& b) { return {a * b.re, a * b.im}; }

BoxC conj(const BoxC& a) { return {a.re, -a.im}; }

RatInterval mag2(const BoxC& a) { return square(a.re) + square(a.im); }

BoxC recip(const BoxC& a) {
  const RatInterval m = mag2(a);
  if (m.lo <= 0)
    throw IndeterminateIntervalError("interval reciprocal of a box not separated from zero");
  const RatInterval inv_m{Rational(1) / m.hi, Rational(1) / m.lo};
  return {a.re * inv_m, (-a.im) * inv_m};
}

namespace {

struct Mpfr {
  mpfr_t x;
  explicit Mpfr(long prec) { mpfr_init2(x, prec); }
  ~Mpfr() { mpfr_clear(x); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  operator mpfr_ptr() { return x; }
  operator mpfr_srcptr() const { return x; }
};

Rational mpfr_to_rational_exact(mpfr_srcptr x) {
  if (mpfr_zero_p(x)) return Rational(0);
  Integer mant;
  const mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), x);
  return Rational(mant) * pow2(static_cast<long>(e));
}

RatInterval clip(const RatInterval& a, const Rational& lo, const Rational& hi) {
  return {std::max(a.lo, lo), std::min(a.hi, hi)};
}

}  // namespace

BoxC unit_root_box(long N, long j, long prec) {
  j %= N;
  if (j < 0) j += N;
  // Axis points are exact.
  if (j == 0) return BoxC::point(1, 0);
  if (2 * j == N) return BoxC::point(-1, 0);
  if (4 * j == N) return BoxC::point(0, 1);
  if (4 * j == 3 * N) return BoxC::point(0, -1);

  const long work = prec + 16;
  Mpfr theta(work), c(work), s(work);
  mpfr_const_pi(theta, MPFR_RNDN);
  mpfr_mul_si(theta, theta, 2 * j, MPFR_RNDN);
  mpfr_div_si(theta, theta, N, MPFR_RNDN);
  mpfr_sin_cos(s, c, theta, MPFR_RNDN);
  // theta carries a few ulps of error at the working precision; sine and
  // cosine are 1-Lipschitz, so 2^-prec dominates every contribution.
  const Rational delta = pow2(-prec);
  const Rational cv = mpfr_to_rational_exact(c);
  const Rational sv = mpfr_to_rational_exact(s);
  return {clip({cv - delta, cv + delta}, Rational(-1), Rational(1)),
          clip({sv - delta, sv + delta}, Rational(-1), Rational(1))};
}

CertifiedInterval embed_numeric(const CyclotomicNumber& x, const Embedding& rho, long prec) {
  const long m = x.conductor();
  long k = rho.k;
  if (rho.m != m) {
    if (m % rho.m != 0)
      throw ValidationError("embed_numeric: embedding conductor does not divide element conductor");
    k = unit_lift(rho.k, rho.m, m);
  }
  BoxC acc = BoxC::point(0, 0);
  const auto& c = x.coeffs();
  for (size_t jx = 0; jx < c.size(); ++jx) {
    if (c[jx] == 0) continue;
    acc = acc + c[jx] * unit_root_box(m, static_cast<long>(jx) * k % m, prec);
  }
  return CertifiedInterval{acc, prec};
}

int real_sign(const CyclotomicNumber& x, const Embedding& rho, const Budget& budget) {
  if (x.is_zero()) return 0;
  if (!is_conjugation_fixed(x))
    throw ValidationError("real_sign requires a conjugation-fixed element");
  for (long prec = budget.start_precision;; prec *= 2) {
    const CertifiedInterval ci = embed_numeric(x, rho, prec);
    if (auto s = ci.box.re.definite_sign()) {
      if (*s != 0) return *s;
    }
    if (prec >= budget.max_precision)
      throw RefinementBudgetError("real_sign: refinement budget exceeded at precision " +
                                  std::to_string(prec));
  }
}

std::optional<RatInterval> angle_interval_turns(const BoxC& box, long prec) {
  if (mag2(box).lo <= 0) return std::nullopt;
  const long work = prec + 16;
  const Rational delta = pow2(-prec);
  const Rational xs[2] = {box.re.lo, box.re.hi};
  const Rational ys[2] = {box.im.lo, box.im.hi};
  RatInterval out;
  bool first = true;
  Mpfr fx(work), fy(work), th(work), tp(work);
  for (int ix = 0; ix < 2; ++ix) {
    for (int iy = 0; iy < 2; ++iy) {
      mpfr_set_q(fx, xs[ix].get_mpq_t(), MPFR_RNDN);
      mpfr_set_q(fy, ys[iy].get_mpq_t(), MPFR_RNDN);
      mpfr_atan2(th, fy, fx, MPFR_RNDN);
      mpfr_const_pi(tp, MPFR_RNDN);
      mpfr_mul_ui(tp, tp, 2, MPFR_RNDN);
      mpfr_div(th, th, tp, MPFR_RNDN);  // angle in turns, in (-1/2, 1/2]
      Rational v = mpfr_to_rational_exact(th);
      RatInterval corner{v - delta, v + delta};
      if (first) {
        out = corner;
        first = false;
        continue;
      }
      // Shift by a whole turn to stay coherent with the hull so far.
      const Rational mid = out.mid();
      if (corner.mid() - mid > Rational(1, 2)) corner = {corner.lo - 1, corner.hi - 1};
      else if (mid - corner.mid() > Rational(1, 2)) corner = {corner.lo + 1, corner.hi + 1};
      out = hull(out, corner);
    }
  }
  if (out.hi - out.lo >= Rational(1, 2)) return std::nullopt;
  // Normalize lo into [0, 1).
  const Rational shift = Rational(rational_floor(out.lo));
  return RatInterval{out.lo - shift, out.hi - shift};
}

}  // namespace wittsig
