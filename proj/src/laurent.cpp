#include "wittsig/laurent.hpp"

#include <sstream>

#include "wittsig/errors.hpp"

namespace wittsig {

LaurentPoly LaurentPoly::constant(const CyclotomicNumber& c) {
  LaurentPoly p(c.conductor());
  p.set_term(0, c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const CyclotomicNumber& c, long e) {
  LaurentPoly p(c.conductor());
  p.set_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::variable(long m) {
  LaurentPoly p(m);
  p.set_term(1, CyclotomicNumber::one(m));
  return p;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

CyclotomicNumber LaurentPoly::constant_value() const { return coeff(0); }

CyclotomicNumber LaurentPoly::coeff(long e) const {
  auto it = terms_.find(e);
  if (it == terms_.end()) return CyclotomicNumber::zero(m_);
  return it->second;
}

long LaurentPoly::min_exp() const {
  if (terms_.empty()) throw ValidationError("min_exp of zero polynomial");
  return terms_.begin()->first;
}

long LaurentPoly::max_exp() const {
  if (terms_.empty()) throw ValidationError("max_exp of zero polynomial");
  return terms_.rbegin()->first;
}

void LaurentPoly::set_term(long e, const CyclotomicNumber& c) {
  CyclotomicNumber v = c;
  if (v.conductor() != m_) {
    if (m_ % v.conductor() == 0) {
      v = lift_to_compositum(v, m_);
    } else if (v.conductor() % m_ == 0 || m_ == 1) {
      // Growing the ambient conductor: lift every stored coefficient.
      const long m2 = lcm_long(m_, v.conductor());
      std::map<long, CyclotomicNumber> lifted;
      for (const auto& [ex, cx] : terms_) lifted.emplace(ex, lift_to_compositum(cx, m2));
      terms_ = std::move(lifted);
      m_ = m2;
      v = lift_to_compositum(v, m2);
    } else {
      throw ConductorMismatchError(m_, v.conductor());
    }
  }
  if (v.is_zero())
    terms_.erase(e);
  else
    terms_[e] = std::move(v);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(m_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  const long m = lcm_long(a.m_, b.m_);
  if (a.m_ != 1 && b.m_ != 1 && a.m_ != b.m_) throw ConductorMismatchError(a.m_, b.m_);
  LaurentPoly r(m);
  for (const auto& [e, c] : a.terms_) r.set_term(e, c);
  for (const auto& [e, c] : b.terms_) r.set_term(e, r.coeff(e) + lift_to_compositum(c, m));
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  const long m = lcm_long(a.m_, b.m_);
  if (a.m_ != 1 && b.m_ != 1 && a.m_ != b.m_) throw ConductorMismatchError(a.m_, b.m_);
  LaurentPoly r(m);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      const long e = ea + eb;
      r.set_term(e, r.coeff(e) + ca * cb);
    }
  }
  return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ita = a.terms_.begin();
  auto itb = b.terms_.begin();
  for (; ita != a.terms_.end(); ++ita, ++itb) {
    if (ita->first != itb->first) return false;
    if (!(ita->second == itb->second)) return false;
  }
  return true;
}

LaurentPoly operator*(const CyclotomicNumber& c, const LaurentPoly& p) {
  return LaurentPoly::constant(c) * p;
}

LaurentPoly operator*(const Rational& c, const LaurentPoly& p) {
  return LaurentPoly::constant(CyclotomicNumber(c)) * p;
}

LaurentPoly bar(const LaurentPoly& p) {
  LaurentPoly r(p.conductor());
  for (const auto& [e, c] : p.terms()) r.set_term(-e, conjugate(c));
  return r;
}

LaurentPoly galois_poly(const LaurentPoly& p, long k) {
  LaurentPoly r(p.conductor());
  for (const auto& [e, c] : p.terms()) r.set_term(e, galois_apply(c, k));
  return r;
}

LaurentPoly lift_poly(const LaurentPoly& p, long m2) {
  LaurentPoly r(m2);
  for (const auto& [e, c] : p.terms()) r.set_term(e, lift_to_compositum(c, m2));
  return r;
}

LaurentPoly shift(const LaurentPoly& p, long k) {
  LaurentPoly r(p.conductor());
  for (const auto& [e, c] : p.terms()) r.set_term(e + k, c);
  return r;
}

LaurentPoly derivative(const LaurentPoly& p) {
  LaurentPoly r(p.conductor());
  for (const auto& [e, c] : p.terms()) {
    if (e != 0) r.set_term(e - 1, Rational(e) * c);
  }
  return r;
}

CyclotomicNumber eval_at_root_of_unity(const LaurentPoly& p, long N, long j) {
  const long L = lcm_long(p.conductor(), N);
  CyclotomicNumber acc = CyclotomicNumber::zero(L);
  const long step = L / N;
  for (const auto& [e, c] : p.terms()) {
    long ez = (e % N) * j % N;  // t^e = zeta_N^{e j}
    if (ez < 0) ez += N;
    acc += lift_to_compositum(c, L) * CyclotomicNumber::root_of_unity(L, ez * step);
  }
  return acc;
}

namespace {

void require_poly(const LaurentPoly& p, const char* who) {
  if (!p.is_polynomial())
    throw ValidationError(std::string(who) + ": negative exponents present");
}

}  // namespace

PolyDivMod poly_divmod(const LaurentPoly& a, const LaurentPoly& b) {
  require_poly(a, "poly_divmod");
  require_poly(b, "poly_divmod");
  if (b.is_zero()) throw DivideByZeroError("polynomial division by zero");
  const long m = lcm_long(a.conductor(), b.conductor());
  LaurentPoly rem = lift_poly(a, m);
  const LaurentPoly den = lift_poly(b, m);
  LaurentPoly quot(m);
  const long db = den.max_exp();
  const CyclotomicNumber lead_inv = inverse(den.coeff(db));
  while (!rem.is_zero() && rem.max_exp() >= db) {
    const long e = rem.max_exp() - db;
    const CyclotomicNumber c = rem.coeff(rem.max_exp()) * lead_inv;
    quot.set_term(e, c);
    rem = rem - LaurentPoly::monomial(c, e) * den;
  }
  return {std::move(quot), std::move(rem)};
}

LaurentPoly poly_exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  PolyDivMod qr = poly_divmod(a, b);
  if (!qr.rem.is_zero()) throw ConsistencyError("poly_exact_div: nonzero remainder");
  return qr.quot;
}

LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b) {
  require_poly(a, "poly_gcd");
  require_poly(b, "poly_gcd");
  const long m = lcm_long(a.conductor(), b.conductor());
  a = lift_poly(a, m);
  b = lift_poly(b, m);
  while (!b.is_zero()) {
    PolyDivMod qr = poly_divmod(a, b);
    a = std::move(b);
    b = std::move(qr.rem);
  }
  if (a.is_zero()) return a;
  return inverse(a.coeff(a.max_exp())) * a;  // monic
}

LaurentPoly squarefree_part(const LaurentPoly& p) {
  require_poly(p, "squarefree_part");
  if (p.is_zero() || p.max_exp() == 0) return p;
  const LaurentPoly g = poly_gcd(p, derivative(p));
  if (g.is_zero() || g.max_exp() == 0) return p;
  return poly_exact_div(p, g);
}

LaurentPoly t_power_mod(long e, const LaurentPoly& f) {
  require_poly(f, "t_power_mod");
  if (f.is_zero() || f.max_exp() < 1) throw ValidationError("t_power_mod: modulus must have degree >= 1");
  if (e < 0) throw ValidationError("t_power_mod: exponent must be nonnegative");
  LaurentPoly result = LaurentPoly::constant(CyclotomicNumber::one(f.conductor()));
  LaurentPoly base = poly_divmod(LaurentPoly::variable(f.conductor()), f).rem;
  while (e > 0) {
    if (e & 1) result = poly_divmod(result * base, f).rem;
    base = poly_divmod(base * base, f).rem;
    e >>= 1;
  }
  return result;
}

LaurentPoly cyclotomic_poly_laurent(long d, long m) {
  const auto& cd = conductor_data(d);
  LaurentPoly p(m);
  for (size_t i = 0; i < cd.min_poly.size(); ++i) {
    if (cd.min_poly[i] != 0)
      p.set_term(static_cast<long>(i),
                 cd.min_poly[i] * CyclotomicNumber::one(m));
  }
  return p;
}

LaurentPoly laurent_exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DivideByZeroError("Laurent division by zero");
  if (a.is_zero()) return a;
  const long va = a.min_exp(), vb = b.min_exp();
  return shift(poly_exact_div(shift(a, -va), shift(b, -vb)), va - vb);
}

LaurentPoly divide_out_root(const LaurentPoly& p, const CyclotomicNumber& z) {
  require_poly(p, "divide_out_root");
  const long m = lcm_long(p.conductor(), z.conductor());
  LaurentPoly num = lift_poly(p, m);
  LaurentPoly den(m);
  den.set_term(1, CyclotomicNumber::one(m));
  den.set_term(0, -lift_to_compositum(z, m));
  return poly_exact_div(num, den);
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (!first) os << " + ";
    first = false;
    os << to_string(c) << "*t^" << e;
  }
  return os.str();
}

}  // namespace wittsig
