#include "wittsig/rational.hpp"

namespace wittsig {

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw ValidationError("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw ValidationError("malformed rational literal: '" + s + "'");
  if (q.get_den() == 0) throw ValidationError("zero denominator in rational literal: '" + s + "'");
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& x) { return x.get_str(); }

Integer rational_floor(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

Integer rational_ceil(const Rational& x) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

Rational mod_one(const Rational& x) { return x - Rational(rational_floor(x)); }

Rational pow2(long e) {
  Rational r(1);
  if (e >= 0) {
    mpz_mul_2exp(r.get_num().get_mpz_t(), Integer(1).get_mpz_t(), static_cast<unsigned long>(e));
  } else {
    mpz_mul_2exp(r.get_den().get_mpz_t(), Integer(1).get_mpz_t(), static_cast<unsigned long>(-e));
  }
  return r;
}

}  // namespace wittsig
