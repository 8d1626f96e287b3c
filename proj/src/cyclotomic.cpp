#include "wittsig/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "wittsig/errors.hpp"

namespace wittsig {

long gcd_long(long a, long b) { return std::gcd(a, b); }

long lcm_long(long a, long b) {
  if (a == 0 || b == 0) return 0;
  return a / std::gcd(a, b) * b;
}

long euler_phi(long m) {
  long result = m;
  long n = m;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      result -= result / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<long> divisors_of(long m) {
  std::vector<long> divs;
  for (long d = 1; d * d <= m; ++d) {
    if (m % d == 0) {
      divs.push_back(d);
      if (d != m / d) divs.push_back(m / d);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

namespace {

// Dense univariate polynomials over Q, lowest degree first, used only for
// building Phi_m.
using QPoly = std::vector<Rational>;

void qpoly_trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division; requires divisor to divide p.
QPoly qpoly_divide_exact(QPoly p, const QPoly& d) {
  qpoly_trim(p);
  QPoly q(p.size() >= d.size() ? p.size() - d.size() + 1 : 0, Rational(0));
  while (p.size() >= d.size() && !p.empty()) {
    const size_t shift = p.size() - d.size();
    Rational c = p.back() / d.back();
    q[shift] = c;
    for (size_t i = 0; i < d.size(); ++i) p[shift + i] -= c * d[i];
    qpoly_trim(p);
  }
  if (!p.empty()) throw ConsistencyError("inexact polynomial division building Phi_m");
  return q;
}

QPoly cyclotomic_qpoly(long m) {
  std::map<long, QPoly> phi;
  for (long d : divisors_of(m)) {
    QPoly f(static_cast<size_t>(d) + 1, Rational(0));
    f[0] = -1;
    f[static_cast<size_t>(d)] = 1;  // x^d - 1
    for (long e : divisors_of(d)) {
      if (e == d) continue;
      f = qpoly_divide_exact(std::move(f), phi.at(e));
    }
    phi[d] = std::move(f);
  }
  return phi.at(m);
}

std::shared_ptr<const ConductorData> build_conductor_data(long m) {
  auto cd = std::make_shared<ConductorData>();
  cd->m = m;
  cd->phi = euler_phi(m);
  cd->min_poly = cyclotomic_qpoly(m);
  const long phi = cd->phi;
  if (static_cast<long>(cd->min_poly.size()) != phi + 1)
    throw ConsistencyError("Phi_m degree mismatch");
  // zeta^phi = -sum_{i<phi} min_poly[i] zeta^i, then shift-and-reduce upward.
  if (m - phi > 0) {
    cd->power_rows.resize(static_cast<size_t>(m - phi));
    std::vector<Rational> row(static_cast<size_t>(phi));
    for (long i = 0; i < phi; ++i) row[static_cast<size_t>(i)] = -cd->min_poly[static_cast<size_t>(i)];
    cd->power_rows[0] = row;
    for (long e = phi + 1; e < m; ++e) {
      std::vector<Rational> next(static_cast<size_t>(phi), Rational(0));
      // Multiply previous row by zeta: shift up, reduce the overflow term.
      const Rational top = row[static_cast<size_t>(phi - 1)];
      for (long i = phi - 1; i >= 1; --i) next[static_cast<size_t>(i)] = row[static_cast<size_t>(i - 1)];
      next[0] = 0;
      if (top != 0) {
        const auto& base = cd->power_rows[0];
        for (long i = 0; i < phi; ++i) next[static_cast<size_t>(i)] += top * base[static_cast<size_t>(i)];
      }
      cd->power_rows[static_cast<size_t>(e - phi)] = next;
      row = std::move(next);
    }
  }
  return cd;
}

std::mutex g_conductor_mutex;
std::unordered_map<long, std::shared_ptr<const ConductorData>>& conductor_cache() {
  static std::unordered_map<long, std::shared_ptr<const ConductorData>> cache;
  return cache;
}

}  // namespace

const ConductorData& conductor_data(long m) {
  if (m < 1) throw ValidationError("conductor must be >= 1");
  {
    std::lock_guard<std::mutex> lock(g_conductor_mutex);
    auto it = conductor_cache().find(m);
    if (it != conductor_cache().end()) return *it->second;
  }
  auto cd = build_conductor_data(m);
  std::lock_guard<std::mutex> lock(g_conductor_mutex);
  auto [it, inserted] = conductor_cache().emplace(m, std::move(cd));
  return *it->second;
}

CyclotomicNumber::CyclotomicNumber(long m, std::vector<Rational> coeffs) : m_(m), c_(std::move(coeffs)) {
  const ConductorData& cd = conductor_data(m);
  if (static_cast<long>(c_.size()) != cd.phi)
    throw ValidationError("coefficient array must have exactly phi(m) entries");
  for (Rational& q : c_) {
    if (q.get_den() == 0) throw ValidationError("zero denominator in coefficient");
    q.canonicalize();
  }
}

CyclotomicNumber CyclotomicNumber::zero(long m) {
  return CyclotomicNumber(m, std::vector<Rational>(static_cast<size_t>(conductor_data(m).phi), Rational(0)));
}

CyclotomicNumber CyclotomicNumber::one(long m) {
  CyclotomicNumber x = zero(m);
  x.c_[0] = 1;
  return x;
}

namespace {

// acc += coeff * zeta_m^e in canonical coordinates; e must be in [0, m).
void accumulate_power(std::vector<Rational>& acc, const Rational& coeff, long e, const ConductorData& cd) {
  if (coeff == 0) return;
  if (e < cd.phi) {
    acc[static_cast<size_t>(e)] += coeff;
    return;
  }
  const auto& row = cd.power_rows[static_cast<size_t>(e - cd.phi)];
  for (long i = 0; i < cd.phi; ++i) {
    const Rational& r = row[static_cast<size_t>(i)];
    if (r != 0) acc[static_cast<size_t>(i)] += coeff * r;
  }
}

}  // namespace

CyclotomicNumber CyclotomicNumber::root_of_unity(long m, long e) {
  const ConductorData& cd = conductor_data(m);
  e %= m;
  if (e < 0) e += m;
  std::vector<Rational> c(static_cast<size_t>(cd.phi), Rational(0));
  accumulate_power(c, Rational(1), e, cd);
  return CyclotomicNumber(m, std::move(c));
}

bool CyclotomicNumber::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
}

bool CyclotomicNumber::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rational CyclotomicNumber::rational_value() const {
  if (!is_rational()) throw ValidationError("element is not rational");
  return c_[0];
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

namespace {

// Lifts x into conductor m2 (x.conductor() | m2 assumed checked by caller).
std::vector<Rational> lifted_coeffs(const CyclotomicNumber& x, long m2) {
  const ConductorData& cd2 = conductor_data(m2);
  const long step = m2 / x.conductor();
  std::vector<Rational> out(static_cast<size_t>(cd2.phi), Rational(0));
  const auto& c = x.coeffs();
  for (size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) accumulate_power(out, c[i], static_cast<long>(i) * step % m2, cd2);
  return out;
}

// Returns the common conductor for a binary operation, throwing when the two
// fields are genuinely different (rationals, conductor 1, embed everywhere).
long common_conductor(long ma, long mb) {
  if (ma == mb) return ma;
  if (ma == 1) return mb;
  if (mb == 1) return ma;
  throw ConductorMismatchError(ma, mb);
}

}  // namespace

CyclotomicNumber lift_to_compositum(const CyclotomicNumber& x, long m2) {
  if (m2 % x.conductor() != 0)
    throw ValidationError("lift_to_compositum: " + std::to_string(x.conductor()) +
                          " does not divide " + std::to_string(m2));
  if (m2 == x.conductor()) return x;
  return CyclotomicNumber(m2, lifted_coeffs(x, m2));
}

void lift_to_common(CyclotomicNumber& a, CyclotomicNumber& b) {
  const long m = lcm_long(a.conductor(), b.conductor());
  a = lift_to_compositum(a, m);
  b = lift_to_compositum(b, m);
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& rhs) {
  const long m = common_conductor(m_, rhs.m_);
  if (m_ != m) *this = lift_to_compositum(*this, m);
  if (rhs.m_ != m) {
    CyclotomicNumber r = lift_to_compositum(rhs, m);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += r.c_[i];
  } else {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
  }
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& rhs) {
  const long m = common_conductor(m_, rhs.m_);
  if (m_ != m) *this = lift_to_compositum(*this, m);
  if (rhs.m_ != m) {
    CyclotomicNumber r = lift_to_compositum(rhs, m);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= r.c_[i];
  } else {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= rhs.c_[i];
  }
  return *this;
}

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  const long m = common_conductor(a.m_, b.m_);
  const ConductorData& cd = conductor_data(m);
  const CyclotomicNumber& x = (a.m_ == m) ? a : lift_to_compositum(a, m);
  // Avoid a copy when b already has the right conductor.
  CyclotomicNumber blift;
  const CyclotomicNumber* y = &b;
  if (b.m_ != m) {
    blift = lift_to_compositum(b, m);
    y = &blift;
  }
  std::vector<Rational> acc(static_cast<size_t>(cd.phi), Rational(0));
  for (size_t i = 0; i < x.c_.size(); ++i) {
    if (x.c_[i] == 0) continue;
    for (size_t j = 0; j < y->c_.size(); ++j) {
      if (y->c_[j] == 0) continue;
      long e = static_cast<long>(i + j);
      if (e >= m) e -= m;
      accumulate_power(acc, x.c_[i] * y->c_[j], e, cd);
    }
  }
  return CyclotomicNumber(m, std::move(acc));
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& rhs) {
  *this = *this * rhs;
  return *this;
}

CyclotomicNumber operator*(const Rational& a, const CyclotomicNumber& b) {
  CyclotomicNumber r = b;
  std::vector<Rational> c = r.coeffs();
  for (auto& q : c) q *= a;
  return CyclotomicNumber(b.conductor(), std::move(c));
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.m_ == b.m_) return a.c_ == b.c_;
  const long m = lcm_long(a.m_, b.m_);
  return lift_to_compositum(a, m).coeffs() == lift_to_compositum(b, m).coeffs();
}

namespace {

// Solves the phi x phi rational system M y = rhs by Gaussian elimination.
std::vector<Rational> solve_dense(std::vector<std::vector<Rational>> M, std::vector<Rational> rhs) {
  const size_t n = M.size();
  std::vector<size_t> perm(n);
  for (size_t col = 0, row = 0; col < n && row < n; ++col, ++row) {
    size_t piv = row;
    while (piv < n && M[piv][col] == 0) ++piv;
    if (piv == n) throw DivideByZeroError("singular system (division by a zero divisor?)");
    std::swap(M[piv], M[row]);
    std::swap(rhs[piv], rhs[row]);
    const Rational inv_p = Rational(1) / M[row][col];
    for (size_t j = col; j < n; ++j) M[row][j] *= inv_p;
    rhs[row] *= inv_p;
    for (size_t i = 0; i < n; ++i) {
      if (i == row || M[i][col] == 0) continue;
      const Rational f = M[i][col];
      for (size_t j = col; j < n; ++j) M[i][j] -= f * M[row][j];
      rhs[i] -= f * rhs[row];
    }
  }
  return rhs;
}

}  // namespace

CyclotomicNumber inverse(const CyclotomicNumber& x) {
  if (x.is_zero()) throw DivideByZeroError("inverse of zero cyclotomic number");
  if (x.is_rational()) {
    CyclotomicNumber r = CyclotomicNumber::zero(x.conductor());
    std::vector<Rational> c = r.coeffs();
    c[0] = Rational(1) / x.rational_value();
    return CyclotomicNumber(x.conductor(), std::move(c));
  }
  const long m = x.conductor();
  const ConductorData& cd = conductor_data(m);
  const size_t n = static_cast<size_t>(cd.phi);
  // Columns of M are the canonical coordinates of x * zeta^j.
  std::vector<std::vector<Rational>> M(n, std::vector<Rational>(n, Rational(0)));
  for (size_t j = 0; j < n; ++j) {
    CyclotomicNumber col = x * CyclotomicNumber::root_of_unity(m, static_cast<long>(j));
    for (size_t i = 0; i < n; ++i) M[i][j] = col.coeffs()[i];
  }
  std::vector<Rational> rhs(n, Rational(0));
  rhs[0] = 1;
  return CyclotomicNumber(m, solve_dense(std::move(M), std::move(rhs)));
}

CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (b.is_zero()) throw DivideByZeroError("division by zero cyclotomic number");
  if (b.is_rational()) {
    CyclotomicNumber r = a;
    std::vector<Rational> c = r.coeffs();
    const Rational inv = Rational(1) / b.rational_value();
    for (auto& q : c) q *= inv;
    return CyclotomicNumber(a.conductor(), std::move(c));
  }
  const long m = common_conductor(a.conductor(), b.conductor());
  return lift_to_compositum(a, m) * inverse(lift_to_compositum(b, m));
}

CyclotomicNumber galois_apply(const CyclotomicNumber& x, long k) {
  const long m = x.conductor();
  k %= m;
  if (k < 0) k += m;
  if (m <= 2 || k == 1) return x;
  if (gcd_long(k, m) != 1) throw ValidationError("galois exponent not coprime to conductor");
  const ConductorData& cd = conductor_data(m);
  std::vector<Rational> acc(static_cast<size_t>(cd.phi), Rational(0));
  const auto& c = x.coeffs();
  for (size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) accumulate_power(acc, c[i], static_cast<long>(i) * k % m, cd);
  return CyclotomicNumber(m, std::move(acc));
}

CyclotomicNumber conjugate(const CyclotomicNumber& x) { return galois_apply(x, -1); }

bool is_conjugation_fixed(const CyclotomicNumber& x) { return conjugate(x) == x; }

CyclotomicNumber real_part(const CyclotomicNumber& x) {
  CyclotomicNumber s = x + conjugate(x);
  return Rational(1, 2) * s;
}

Rational field_trace(const CyclotomicNumber& x) {
  const long m = x.conductor();
  Rational t(0);
  // Trace of the multiplication-by-x map on the power basis.
  for (long i = 0; i < conductor_data(m).phi; ++i) {
    CyclotomicNumber p = x * CyclotomicNumber::root_of_unity(m, i);
    t += p.coeffs()[static_cast<size_t>(i)];
  }
  return t;
}

Embedding::Embedding(long m_in, long k_in) : m(m_in) {
  if (m < 1) throw ValidationError("embedding conductor must be >= 1");
  k = k_in % m;
  if (k < 0) k += m;
  if (m == 1) {
    k = 0;
    return;
  }
  if (gcd_long(k, m) != 1)
    throw ValidationError("embedding exponent " + std::to_string(k_in) +
                          " is not coprime to conductor " + std::to_string(m));
}

Embedding identity_embedding(long m) { return Embedding(m, 1 % m); }

Embedding conjugate_embedding(const Embedding& rho) {
  if (rho.m <= 2) return rho;
  return Embedding(rho.m, rho.m - rho.k);
}

std::vector<Embedding> embeddings_G0(long m) {
  if (m < 1) throw ValidationError("conductor must be >= 1");
  if (m <= 2) return {identity_embedding(m)};
  std::vector<Embedding> out;
  for (long k = 1; 2 * k < m; ++k)
    if (gcd_long(k, m) == 1) out.emplace_back(m, k);
  return out;
}

long unit_lift(long k, long m, long m2) {
  if (m2 % m != 0) throw ValidationError("unit_lift: m does not divide m2");
  k %= m;
  if (k < 0) k += m;
  if (m == 1) k = 1;  // every exponent restricts to the identity on Q
  for (long k2 = k == 0 ? m : k; k2 <= k + m2; k2 += m)
    if (gcd_long(k2, m2) == 1) return ((k2 - 1) % m2) + 1;
  throw ConsistencyError("unit_lift: no coprime lift found");
}

UnityPoint::UnityPoint(long N_in, long j_in) {
  if (N_in < 1) throw ValidationError("root of unity order must be >= 1");
  long jj = j_in % N_in;
  if (jj < 0) jj += N_in;
  const long g = gcd_long(jj == 0 ? N_in : jj, N_in);
  N = N_in / g;
  j = jj / g;
}

CyclotomicNumber UnityPoint::value(long conductor) const {
  if (conductor % N != 0)
    throw ValidationError("conductor does not contain this root of unity");
  return CyclotomicNumber::root_of_unity(conductor, j * (conductor / N));
}

std::string to_string(const CyclotomicNumber& x) {
  std::ostringstream os;
  os << "[m=" << x.conductor() << ";";
  for (size_t i = 0; i < x.coeffs().size(); ++i) {
    if (i) os << ",";
    os << x.coeffs()[i].get_str();
  }
  os << "]";
  return os.str();
}

}  // namespace wittsig
