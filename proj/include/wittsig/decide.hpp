#ifndef WITTSIG_DECIDE_HPP
#define WITTSIG_DECIDE_HPP

#include <map>
#include <optional>

#include "wittsig/sigfunc.hpp"

namespace wittsig {

struct Witness {
  Embedding rho;
  UnityPoint sample;  // any transcendental point of the same arc witnesses equally
  Rational value;
};

/// Outcome of the triviality decision: trivial iff every embedding's
/// signature step function vanishes identically.
struct Decision {
  bool trivial = true;
  std::vector<Witness> witnesses;
  std::map<long, SignatureStepFunction> step_functions;  // keyed by embedding exponent
};

Decision is_trivial(const WittElement& w, const Budget& budget = Budget{});

struct DecisionOrError {
  std::optional<Decision> decision;
  std::string error;  // nonempty iff decision is absent
};

// Elementwise is_trivial; errors are collected per element, not fail-fast.
std::vector<DecisionOrError> decide_batch(const std::vector<WittElement>& ws,
                                          const Budget& budget = Budget{});

}  // namespace wittsig

#endif
