#include "wittsig/decide.hpp"

#include "wittsig/errors.hpp"

namespace wittsig {

Decision is_trivial(const WittElement& w, const Budget& budget) {
  Decision d;
  for (const Embedding& rho : embeddings_G0(w.conductor())) {
    SignatureStepFunction s = signature_step_function(w, rho, budget);
    for (size_t i = 0; i < s.arc_values.size(); ++i) {
      if (s.arc_values[i] != 0) {
        d.trivial = false;
        d.witnesses.push_back(Witness{rho, s.arc_samples[i], s.arc_values[i]});
      }
    }
    d.step_functions.emplace(rho.k, std::move(s));
  }
  return d;
}

std::vector<DecisionOrError> decide_batch(const std::vector<WittElement>& ws, const Budget& budget) {
  std::vector<DecisionOrError> out;
  out.reserve(ws.size());
  for (const WittElement& w : ws) {
    DecisionOrError r;
    try {
      r.decision = is_trivial(w, budget);
    } catch (const Error& e) {
      r.error = e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace wittsig
