#ifndef WITTSIG_SIGFUNC_HPP
#define WITTSIG_SIGFUNC_HPP

#include <string>
#include <vector>

#include "wittsig/forms.hpp"
#include "wittsig/rootcover.hpp"

namespace wittsig {

/// A point of the unit circle where the signature function may jump: either
/// an exactly known root of unity, or a certified isolating angle interval
/// around a candidate root of some named polynomial.
struct CirclePoint {
  enum class Kind { Exact, Isolated };
  Kind kind = Kind::Exact;
  UnityPoint point;    // exact
  RatInterval angle;   // turns; degenerate [a, a] for exact points, hi may pass 1
  std::string source;  // defining polynomial reference for isolated points

  static CirclePoint exact(const UnityPoint& p) {
    CirclePoint c;
    c.kind = Kind::Exact;
    c.point = p;
    c.angle = RatInterval::point(p.angle_turns());
    return c;
  }
  static CirclePoint isolated(const RatInterval& arc, std::string src) {
    CirclePoint c;
    c.kind = Kind::Isolated;
    c.angle = arc;
    c.source = std::move(src);
    return c;
  }
  bool is_exact() const { return kind == Kind::Exact; }
  // Representative position in [0, 1) for ordering.
  Rational position() const { return kind == Kind::Exact ? point.angle_turns() : mod_one(angle.lo); }
};

/// The locally constant signature function of a Witt class along S^1 under
/// one embedding: candidates ordered by angle, the value on the open arc
/// following each candidate, and the jumps across candidates.
struct SignatureStepFunction {
  Embedding rho;
  std::vector<CirclePoint> candidates;  // ordered by angle
  std::vector<Rational> arc_values;     // arc_values[i] = value after candidates[i]
  std::vector<Rational> jumps;          // arc_values[i] - arc_values[i-1] (cyclic)
  std::vector<UnityPoint> arc_samples;  // the evaluation point witnessing each arc

  // With no candidates the function is globally constant: candidates empty,
  // one arc value, one sample, no jumps.
  Rational value_on_arc(size_t i) const { return arc_values.at(i); }
};

// Signature of one summand's gram evaluated at t = zeta_N^j after the
// coefficient substitution zeta -> zeta^k. Throws PoleError or
// SingularFormError at bad points.
int signature_at_unity(const HermitianForm& f, long galois_k, const UnityPoint& z,
                       const Budget& budget = Budget{});

// A finite superset of the unit-circle jump locations of rho(w): all circle
// zeros of each summand's determinant numerator and all circle poles of the
// entries. Roots of unity of order <= budget.unity_order_bound are exact;
// the rest are certified isolating intervals.
std::vector<CirclePoint> jump_candidates(const WittElement& w, const Embedding& rho,
                                         const Budget& budget = Budget{});

// The full step function; extra_candidates are injected as additional exact
// candidates (they can only split arcs, never change values).
SignatureStepFunction signature_step_function(const WittElement& w, const Embedding& rho,
                                              const Budget& budget = Budget{},
                                              const std::vector<UnityPoint>& extra_candidates = {});

// (candidate, jump) pairs with zero jumps dropped.
std::vector<std::pair<CirclePoint, Rational>> jumps(const SignatureStepFunction& s);

// Drops candidates whose jump is zero, merging equal adjacent arcs.
SignatureStepFunction merge_equal_arcs(const SignatureStepFunction& s);

// sum_i r_i * sign(summand_i evaluated at z), exact.
Rational evaluate_class_at(const WittElement& w, const Embedding& rho, const UnityPoint& z,
                           const Budget& budget = Budget{});

}  // namespace wittsig

#endif
