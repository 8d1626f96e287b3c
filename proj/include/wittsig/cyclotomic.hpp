#ifndef WITTSIG_CYCLOTOMIC_HPP
#define WITTSIG_CYCLOTOMIC_HPP

#include <vector>

#include "wittsig/rational.hpp"

namespace wittsig {

long gcd_long(long a, long b);
long lcm_long(long a, long b);
long euler_phi(long m);
std::vector<long> divisors_of(long m);

// Cached per-conductor data: Phi_m and the expansion of every power zeta_m^e,
// e in [phi(m), m-1], over the canonical basis 1, zeta, ..., zeta^{phi(m)-1}.
struct ConductorData {
  long m = 1;
  long phi = 1;
  std::vector<Rational> min_poly;                  // Phi_m, monic, degree phi
  std::vector<std::vector<Rational>> power_rows;   // power_rows[e - phi] = coords of zeta^e
};

// Thread-safe memoized lookup.
const ConductorData& conductor_data(long m);

/// Element of the cyclotomic field Q(zeta_m) in the canonical reduced power
/// basis. Representation is canonical: equal elements have identical
/// coefficient arrays, and the element is zero iff all coefficients are zero.
class CyclotomicNumber {
 public:
  CyclotomicNumber() : m_(1), c_(1, Rational(0)) {}
  explicit CyclotomicNumber(const Rational& q) : m_(1), c_(1, q) {}
  explicit CyclotomicNumber(long n) : m_(1), c_(1, Rational(n)) {}
  CyclotomicNumber(long m, std::vector<Rational> coeffs);

  static CyclotomicNumber zero(long m);
  static CyclotomicNumber one(long m);
  // zeta_m^e for any integer e (reduced mod m, then to the canonical basis).
  static CyclotomicNumber root_of_unity(long m, long e);

  long conductor() const { return m_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  // The value as a rational; requires is_rational().
  Rational rational_value() const;

  CyclotomicNumber operator-() const;
  CyclotomicNumber& operator+=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator-=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator*=(const CyclotomicNumber& rhs);

  friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
  friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend bool operator!=(const CyclotomicNumber& a, const CyclotomicNumber& b) { return !(a == b); }

 private:
  long m_;
  std::vector<Rational> c_;  // exactly phi(m_) entries
};

CyclotomicNumber operator*(const Rational& a, const CyclotomicNumber& b);

// Multiplicative inverse; throws DivideByZeroError on zero input.
CyclotomicNumber inverse(const CyclotomicNumber& x);
CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b);

// The Galois substitution zeta_m -> zeta_m^k. Requires gcd(k, m) = 1 to be an
// automorphism; complex conjugation is galois_apply(x, -1).
CyclotomicNumber galois_apply(const CyclotomicNumber& x, long k);
CyclotomicNumber conjugate(const CyclotomicNumber& x);
bool is_conjugation_fixed(const CyclotomicNumber& x);
// (x + conjugate(x)) / 2 and (x - conjugate(x)) / (2 zeta_4); the imaginary
// part requires 4 | m.
CyclotomicNumber real_part(const CyclotomicNumber& x);

// Same element viewed in Q(zeta_m2); requires conductor | m2.
CyclotomicNumber lift_to_compositum(const CyclotomicNumber& x, long m2);

// Lifts both operands to lcm of their conductors.
void lift_to_common(CyclotomicNumber& a, CyclotomicNumber& b);

// tr_{Q(zeta_m)/Q}(x).
Rational field_trace(const CyclotomicNumber& x);

/// A conjugation-respecting embedding Q(zeta_m) -> C, zeta_m -> e^{2 pi i k/m}.
struct Embedding {
  long m = 1;
  long k = 0;  // exponent, reduced mod m; gcd(k, m) = 1 (k = 0 only for m = 1)

  Embedding() = default;
  Embedding(long m_in, long k_in);
  friend bool operator==(const Embedding& a, const Embedding& b) {
    return a.m == b.m && a.k == b.k;
  }
};

Embedding identity_embedding(long m);
Embedding conjugate_embedding(const Embedding& rho);

// One representative per conjugate pair {k, m-k} of units mod m, smallest
// exponent first; size max(1, phi(m)/2).
std::vector<Embedding> embeddings_G0(long m);

// Smallest k' >= 1 with k' = k (mod m) and gcd(k', m2) = 1; requires m | m2.
long unit_lift(long k, long m, long m2);

/// A root of unity zeta_N^j in lowest terms: gcd(j, N) = 1 after
/// normalization (so N is the exact order), 0 <= j < N.
struct UnityPoint {
  long N = 1;
  long j = 0;

  UnityPoint() = default;
  UnityPoint(long N_in, long j_in);
  long order() const { return N; }
  Rational angle_turns() const { return Rational(j, N); }
  CyclotomicNumber value(long conductor) const;  // requires N | conductor
  bool is_one() const { return N == 1; }
  friend bool operator==(const UnityPoint& a, const UnityPoint& b) {
    return a.N == b.N && a.j == b.j;
  }
  friend bool operator!=(const UnityPoint& a, const UnityPoint& b) { return !(a == b); }
};

std::string to_string(const CyclotomicNumber& x);

}  // namespace wittsig

#endif
