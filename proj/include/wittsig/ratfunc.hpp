#ifndef WITTSIG_RATFUNC_HPP
#define WITTSIG_RATFUNC_HPP

#include "wittsig/interval.hpp"
#include "wittsig/laurent.hpp"

namespace wittsig {

/// Element of Q(zeta_m)(t) in canonical form: the denominator is an honest
/// monic polynomial with nonzero constant term, coprime to the polynomial
/// part of the (Laurent) numerator. Equality is representation equality.
class RationalFunction {
 public:
  RationalFunction();  // zero over Q
  explicit RationalFunction(const LaurentPoly& num);
  RationalFunction(const LaurentPoly& num, const LaurentPoly& den);
  explicit RationalFunction(const CyclotomicNumber& c);
  explicit RationalFunction(const Rational& q);

  static RationalFunction variable(long m = 1);

  long conductor() const { return num_.conductor(); }
  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  CyclotomicNumber constant_value() const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
  RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
  RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

 private:
  LaurentPoly num_, den_;
  void canonicalize();
};

RationalFunction bar(const RationalFunction& a);
RationalFunction galois_rf(const RationalFunction& a, long k);
RationalFunction lift_rf(const RationalFunction& a, long m2);
RationalFunction inverse(const RationalFunction& a);

// Substitution t = zeta_N^j; throws PoleError when the denominator vanishes
// there. Result lives in Q(zeta_lcm(m,N)).
CyclotomicNumber eval_root_of_unity(const RationalFunction& a, long N, long j);

// Certified enclosure of rho(a)(z) for z in the given box. Throws
// IndeterminateIntervalError when the denominator enclosure is not separated
// from zero at this precision.
CertifiedInterval eval_numeric(const RationalFunction& a, const Embedding& rho, const BoxC& z,
                               long prec);

std::string to_string(const RationalFunction& a);

}  // namespace wittsig

#endif
