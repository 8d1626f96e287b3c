#ifndef WITTSIG_LAURENT_HPP
#define WITTSIG_LAURENT_HPP

#include <map>
#include <string>

#include "wittsig/cyclotomic.hpp"

namespace wittsig {

/// Sparse Laurent polynomial over Q(zeta_m): finite map exponent ->
/// coefficient with no stored zeros; all coefficients share the conductor.
class LaurentPoly {
 public:
  LaurentPoly() : m_(1) {}
  explicit LaurentPoly(long m) : m_(m) {}
  static LaurentPoly constant(const CyclotomicNumber& c);
  static LaurentPoly monomial(const CyclotomicNumber& c, long e);
  // The variable t over Q(zeta_m).
  static LaurentPoly variable(long m = 1);

  long conductor() const { return m_; }
  const std::map<long, CyclotomicNumber>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Coefficient of t^0 (zero element when absent).
  CyclotomicNumber constant_value() const;
  CyclotomicNumber coeff(long e) const;

  long min_exp() const;  // valuation; requires nonzero
  long max_exp() const;  // degree; requires nonzero
  bool is_polynomial() const { return is_zero() || min_exp() >= 0; }

  void set_term(long e, const CyclotomicNumber& c);

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

 private:
  long m_;
  std::map<long, CyclotomicNumber> terms_;
};

LaurentPoly operator*(const CyclotomicNumber& c, const LaurentPoly& p);
LaurentPoly operator*(const Rational& c, const LaurentPoly& p);

// Coefficient conjugation composed with t -> 1/t; an involution.
LaurentPoly bar(const LaurentPoly& p);
// zeta_m -> zeta_m^k on coefficients; t is untouched.
LaurentPoly galois_poly(const LaurentPoly& p, long k);
LaurentPoly lift_poly(const LaurentPoly& p, long m2);
// p * t^k.
LaurentPoly shift(const LaurentPoly& p, long k);
LaurentPoly derivative(const LaurentPoly& p);

// Substitution t = zeta_N^j; result lives in Q(zeta_lcm(m,N)).
CyclotomicNumber eval_at_root_of_unity(const LaurentPoly& p, long N, long j);

// The polynomial-only routines below throw ValidationError on negative
// exponents.
struct PolyDivMod {
  LaurentPoly quot, rem;
};
PolyDivMod poly_divmod(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly poly_exact_div(const LaurentPoly& a, const LaurentPoly& b);
// Monic gcd.
LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b);
LaurentPoly squarefree_part(const LaurentPoly& p);
// t^e mod f, e >= 0, deg f >= 1.
LaurentPoly t_power_mod(long e, const LaurentPoly& f);
// Phi_d with coefficients viewed in Q(zeta_m).
LaurentPoly cyclotomic_poly_laurent(long d, long m);

// Exact division in the Laurent ring (divisor must divide).
LaurentPoly laurent_exact_div(const LaurentPoly& a, const LaurentPoly& b);

// Synthetic division of p by (t - z); requires p(z) = 0. Result conductor is
// lcm(p, z).
LaurentPoly divide_out_root(const LaurentPoly& p, const CyclotomicNumber& z);

std::string to_string(const LaurentPoly& p);

}  // namespace wittsig

#endif
