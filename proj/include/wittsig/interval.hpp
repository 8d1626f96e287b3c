#ifndef WITTSIG_INTERVAL_HPP
#define WITTSIG_INTERVAL_HPP

#include <optional>

#include "wittsig/cyclotomic.hpp"
#include "wittsig/options.hpp"
#include "wittsig/rational.hpp"

namespace wittsig {

// Closed rational interval [lo, hi].
struct RatInterval {
  Rational lo, hi;

  RatInterval() : lo(0), hi(0) {}
  RatInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {}
  static RatInterval point(const Rational& x) { return {x, x}; }

  bool contains_zero() const { return lo <= 0 && 0 <= hi; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  Rational mid() const { return (lo + hi) / 2; }
  Rational radius() const { return (hi - lo) / 2; }
  // Exact sign if the interval excludes zero; nullopt otherwise (unless the
  // interval is the single point 0).
  std::optional<int> definite_sign() const {
    if (lo > 0) return 1;
    if (hi < 0) return -1;
    if (lo == 0 && hi == 0) return 0;
    return std::nullopt;
  }
};

RatInterval operator+(const RatInterval& a, const RatInterval& b);
RatInterval operator-(const RatInterval& a, const RatInterval& b);
RatInterval operator-(const RatInterval& a);
RatInterval operator*(const RatInterval& a, const RatInterval& b);
RatInterval operator*(const Rational& a, const RatInterval& b);
// [min(a^2), max(a^2)]; lower bound clamps at 0 when a contains 0.
RatInterval square(const RatInterval& a);
RatInterval hull(const RatInterval& a, const RatInterval& b);

// Axis-aligned rational rectangle in C.
struct BoxC {
  RatInterval re, im;

  BoxC() = default;
  BoxC(RatInterval r, RatInterval i) : re(std::move(r)), im(std::move(i)) {}
  static BoxC point(const Rational& x, const Rational& y) {
    return {RatInterval::point(x), RatInterval::point(y)};
  }
  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
};

BoxC operator+(const BoxC& a, const BoxC& b);
BoxC operator-(const BoxC& a, const BoxC& b);
BoxC operator*(const BoxC& a, const BoxC& b);
BoxC operator*(const Rational& a, const BoxC& b);
BoxC conj(const BoxC& a);
// Enclosure of |z|^2 over the box.
RatInterval mag2(const BoxC& a);
// 1/z; throws IndeterminateIntervalError when the box cannot be separated
// from zero.
BoxC recip(const BoxC& a);

/// Rectangle in C certified to contain a value, together with the working
/// precision that produced it.
struct CertifiedInterval {
  BoxC box;
  long precision = 0;

  Rational re_mid() const { return box.re.mid(); }
  Rational re_radius() const { return box.re.radius(); }
  Rational im_mid() const { return box.im.mid(); }
  Rational im_radius() const { return box.im.radius(); }
};

// Certified enclosure of e^{2 pi i j / N} with radius <= 2^{4-prec} per axis.
// Exact for the four axis points (j/N in {0, 1/4, 1/2, 3/4}).
BoxC unit_root_box(long N, long j, long prec);

// Certified enclosure of rho(x).
CertifiedInterval embed_numeric(const CyclotomicNumber& x, const Embedding& rho, long prec);

// Exact sign of rho(x) for conjugation-fixed x: 0 iff x = 0 (decided
// exactly), else refined numerically until decisive. rho.m must divide
// x.conductor() (the embedding is lifted deterministically).
int real_sign(const CyclotomicNumber& x, const Embedding& rho, const Budget& budget = Budget{});

// Certified enclosure, in turns, of the angle of every point of a box that
// excludes the origin. Fails (nullopt) when the box subtends too wide an
// angle to be represented as [lo, lo + w) with w < 1/2; callers refine.
// Result satisfies 0 <= lo < 1, lo <= hi < lo + 1/2 (hi may exceed 1: wrap).
std::optional<RatInterval> angle_interval_turns(const BoxC& box, long prec);

}  // namespace wittsig

#endif
