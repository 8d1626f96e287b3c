#include "wittsig/sigfunc.hpp"

#include <algorithm>
#include <sstream>

#include "wittsig/errors.hpp"

namespace wittsig {

int signature_at_unity(const HermitianForm& f, long galois_k, const UnityPoint& z,
                       const Budget& budget) {
  const long mi = f.conductor();
  long k = galois_k % mi;
  if (k < 0) k += mi;
  const long L = lcm_long(mi, z.N);
  const Eigen::Index n = f.rank();
  MatC a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const RationalFunction g = galois_rf(f.gram()(i, j), k);
      a(i, j) = lift_to_compositum(eval_root_of_unity(g, z.N, z.j), L);
    }
  return signature_evaluated(a, L, f.epsilon(), budget);
}

namespace {

long restricted_exponent(const Embedding& rho, long mi) {
  long k = rho.k % mi;
  if (k < 0) k += mi;
  return k;
}

// ---- candidate polynomials -------------------------------------------------

struct NamedPoly {
  LaurentPoly poly;  // honest polynomial, nonzero constant term
  std::string ref;
};

std::vector<NamedPoly> candidate_polys(const WittElement& w, const Embedding& rho) {
  std::vector<NamedPoly> out;
  auto push_unique = [&out](LaurentPoly p, const std::string& ref) {
    for (const NamedPoly& q : out)
      if (q.poly == p) return;
    out.push_back(NamedPoly{std::move(p), ref});
  };
  for (size_t idx = 0; idx < w.summands().size(); ++idx) {
    const HermitianForm& f = w.summands()[idx].form;
    const long k = restricted_exponent(rho, f.conductor());
    const RationalFunction d = det(f.gram());
    if (d.is_zero())
      throw SingularFormError("summand " + std::to_string(idx) +
                              ": determinant vanishes identically");
    LaurentPoly num = galois_poly(d.num(), k);
    num = shift(num, -num.min_exp());
    if (num.max_exp() >= 1) push_unique(std::move(num), "summand " + std::to_string(idx) + " determinant");
    for (Eigen::Index i = 0; i < f.rank(); ++i)
      for (Eigen::Index j = 0; j < f.rank(); ++j) {
        const LaurentPoly& den = f.gram()(i, j).den();
        if (den.is_constant()) continue;
        std::ostringstream os;
        os << "summand " << idx << " entry (" << (i + 1) << "," << (j + 1) << ") denominator";
        push_unique(galois_poly(den, k), os.str());
      }
  }
  return out;
}

// ---- exact roots of unity --------------------------------------------------

struct UnityScan {
  std::vector<UnityPoint> points;
  LaurentPoly rest;
};

UnityScan unity_root_scan(const LaurentPoly& p, const Budget& budget) {
  UnityScan scan;
  scan.rest = p;
  if (p.is_zero() || p.max_exp() == 0) return scan;
  const long D = budget.unity_order_bound;
  long lambda = 1;
  for (long d = 2; d <= D; ++d) lambda = lcm_long(lambda, d);
  LaurentPoly tl = t_power_mod(lambda, p);
  tl.set_term(0, tl.coeff(0) - CyclotomicNumber::one(tl.conductor()));
  const LaurentPoly g = poly_gcd(p, tl);
  if (g.is_zero() || g.max_exp() == 0) return scan;
  long remaining = g.max_exp();  // g divides t^lambda - 1, hence squarefree
  for (long d = 1; d <= D && remaining > 0; ++d) {
    for (long j = 0; j < d && remaining > 0; ++j) {
      if (d > 1 && gcd_long(j, d) != 1) continue;  // order exactly d
      if (!eval_at_root_of_unity(g, d, j).is_zero()) continue;
      scan.points.emplace_back(d, j);
      --remaining;
      const long mq = lcm_long(scan.rest.conductor(), d);
      const CyclotomicNumber zv = UnityPoint(d, j).value(mq);
      while (!scan.rest.is_zero() && scan.rest.max_exp() >= 1 &&
             eval_at_root_of_unity(scan.rest, d, j).is_zero())
        scan.rest = divide_out_root(scan.rest, zv);
    }
  }
  return scan;
}

// ---- footprints and separation ----------------------------------------------

// Closed angular footprints on the circle, each of width < 1/2, with lo
// normalized into [0, 1).
struct Footprint {
  bool exact = true;
  UnityPoint pt;
  RatInterval arc;  // [lo, hi], hi may pass 1
  size_t probe = 0;    // isolated: owning probe index
  size_t cluster = 0;  // isolated: cluster index within the probe
  bool merged = false;
  std::string source;

  Rational start() const { return arc.lo; }
  Rational end() const { return arc.hi; }
};

bool circ_overlap(const RatInterval& a, const RatInterval& b) {
  for (int s = -1; s <= 1; ++s) {
    const Rational blo = b.lo + s, bhi = b.hi + s;
    if (!(bhi < a.lo || blo > a.hi)) return true;
  }
  return false;
}

RatInterval circ_hull(const RatInterval& a, const RatInterval& b) {
  RatInterval bb = b;
  for (int s = -1; s <= 1; ++s) {
    const RatInterval cand{b.lo + s, b.hi + s};
    if (!(cand.hi < a.lo || cand.lo > a.hi)) {
      bb = cand;
      break;
    }
  }
  RatInterval h = hull(a, bb);
  const Rational fl = Rational(rational_floor(h.lo));
  return {h.lo - fl, h.hi - fl};
}

struct ProbeState {
  LaurentPoly poly;
  std::string ref;
  int depth = 10;
  std::vector<RootCluster> clusters;
};

void run_probe(ProbeState& probe, const Budget& budget) {
  for (;;) {
    if (probe.depth > budget.max_subdivision_depth)
      throw RefinementBudgetError("root isolation budget exceeded for " + probe.ref);
    auto clusters = circle_root_cover(probe.poly, probe.depth, budget);
    if (clusters) {
      probe.clusters = std::move(*clusters);
      return;
    }
    probe.depth += 4;
  }
}

struct ResolvedCandidates {
  std::vector<CirclePoint> points;  // sorted by position
};

ResolvedCandidates resolve_candidates(const WittElement& w, const Embedding& rho,
                                      const Budget& budget,
                                      const std::vector<UnityPoint>& extra) {
  if (rho.m != w.conductor())
    throw ValidationError("embedding conductor must equal the element's conductor");

  std::vector<UnityPoint> exact = extra;
  std::vector<ProbeState> probes;
  for (NamedPoly& np : candidate_polys(w, rho)) {
    UnityScan scan = unity_root_scan(np.poly, budget);
    for (const UnityPoint& p : scan.points) exact.push_back(p);
    if (!scan.rest.is_zero() && scan.rest.max_exp() >= 1) {
      ProbeState ps;
      ps.poly = squarefree_part(scan.rest);
      ps.ref = np.ref;
      probes.push_back(std::move(ps));
    }
  }
  std::sort(exact.begin(), exact.end(), [](const UnityPoint& a, const UnityPoint& b) {
    return a.angle_turns() < b.angle_turns();
  });
  exact.erase(std::unique(exact.begin(), exact.end()), exact.end());
  for (ProbeState& ps : probes) run_probe(ps, budget);

  std::vector<Footprint> merged_footprints;
  const int merge_after = 8;
  for (int round = 0;; ++round) {
    // Assemble footprints.
    std::vector<Footprint> fps;
    for (const UnityPoint& p : exact) {
      Footprint fp;
      fp.exact = true;
      fp.pt = p;
      fp.arc = RatInterval::point(p.angle_turns());
      fps.push_back(std::move(fp));
    }
    for (size_t pi = 0; pi < probes.size(); ++pi)
      for (size_t ci = 0; ci < probes[pi].clusters.size(); ++ci) {
        Footprint fp;
        fp.exact = false;
        fp.arc = probes[pi].clusters[ci].angle;
        fp.probe = pi;
        fp.cluster = ci;
        fp.source = probes[pi].ref;
        fps.push_back(std::move(fp));
      }
    for (const Footprint& mf : merged_footprints) fps.push_back(mf);

    // Find an overlapping pair.
    long oa = -1, ob = -1;
    for (size_t i = 0; i < fps.size() && oa < 0; ++i)
      for (size_t j = i + 1; j < fps.size(); ++j) {
        if (fps[i].exact && fps[j].exact) continue;  // distinct exact points never collide
        if (circ_overlap(fps[i].arc, fps[j].arc)) {
          oa = static_cast<long>(i);
          ob = static_cast<long>(j);
          break;
        }
      }
    if (oa < 0) {
      // Done: order and emit.
      std::sort(fps.begin(), fps.end(),
                [](const Footprint& a, const Footprint& b) { return mod_one(a.arc.lo) < mod_one(b.arc.lo); });
      ResolvedCandidates rc;
      for (const Footprint& fp : fps) {
        if (fp.exact)
          rc.points.push_back(CirclePoint::exact(fp.pt));
        else
          rc.points.push_back(CirclePoint::isolated(fp.arc, fp.source));
      }
      return rc;
    }

    Footprint& fa = fps[static_cast<size_t>(oa)];
    Footprint& fb = fps[static_cast<size_t>(ob)];
    const bool can_refine_a = !fa.exact && !fa.merged;
    const bool can_refine_b = !fb.exact && !fb.merged;
    if ((can_refine_a || can_refine_b) && (round < merge_after || fa.exact || fb.exact)) {
      if (can_refine_a) {
        probes[fa.probe].depth += 4;
        run_probe(probes[fa.probe], budget);
      }
      if (can_refine_b && (!can_refine_a || fb.probe != fa.probe)) {
        probes[fb.probe].depth += 4;
        run_probe(probes[fb.probe], budget);
      }
      continue;
    }
    if (fa.exact || fb.exact)
      throw RefinementBudgetError("cannot separate an exact candidate from cluster of " +
                                  (fa.exact ? fb.source : fa.source));
    // Merge the two isolated footprints into one fixed candidate.
    Footprint merged;
    merged.exact = false;
    merged.merged = true;
    merged.arc = circ_hull(fa.arc, fb.arc);
    merged.source = fa.source == fb.source ? fa.source : fa.source + " & " + fb.source;
    // Remove the constituent clusters from their probes so they are not
    // re-emitted, then record the merged footprint.
    auto drop_cluster = [&probes](const Footprint& fp) {
      if (fp.merged) return;  // already detached (lives in merged_footprints)
      auto& cl = probes[fp.probe].clusters;
      cl.erase(cl.begin() + static_cast<long>(fp.cluster));
    };
    // Erase higher cluster index first to keep indices valid.
    if (!fa.merged && !fb.merged && fa.probe == fb.probe && fb.cluster > fa.cluster) {
      drop_cluster(fb);
      drop_cluster(fa);
    } else {
      drop_cluster(fa);
      drop_cluster(fb);
    }
    // Absorb every older merged footprint this one touches.
    for (;;) {
      auto it = std::find_if(merged_footprints.begin(), merged_footprints.end(),
                             [&](const Footprint& mf) { return circ_overlap(mf.arc, merged.arc); });
      if (it == merged_footprints.end()) break;
      merged.arc = circ_hull(merged.arc, it->arc);
      merged_footprints.erase(it);
    }
    merged_footprints.push_back(std::move(merged));
  }
}

UnityPoint pick_sample(const Rational& a, const Rational& b, const Budget& budget) {
  for (long N = budget.sample_order_start; N <= budget.sample_order_max; N *= 2) {
    const Integer jmin = rational_floor(a * N) + 1;
    if (Rational(jmin) / N < b) {
      const long j = jmin.get_si();
      return UnityPoint(N, j % N);
    }
  }
  throw RefinementBudgetError("no arc sample found (arc too narrow for the sample budget)");
}

}  // namespace

std::vector<CirclePoint> jump_candidates(const WittElement& w, const Embedding& rho,
                                         const Budget& budget) {
  return resolve_candidates(w, rho, budget, {}).points;
}

SignatureStepFunction signature_step_function(const WittElement& w, const Embedding& rho,
                                              const Budget& budget,
                                              const std::vector<UnityPoint>& extra_candidates) {
  ResolvedCandidates rc = resolve_candidates(w, rho, budget, extra_candidates);
  SignatureStepFunction s;
  s.rho = rho;
  s.candidates = rc.points;

  auto value_at = [&](const UnityPoint& z) {
    Rational v(0);
    for (size_t i = 0; i < w.summands().size(); ++i)
      v += w.summands()[i].coeff *
           Rational(signature_at_unity(w.summands()[i].form, rho.k, z, budget));
    return v;
  };

  const size_t K = s.candidates.size();
  if (K == 0) {
    const UnityPoint z = pick_sample(Rational(0), Rational(1), budget);
    s.arc_samples.push_back(z);
    s.arc_values.push_back(value_at(z));
    return s;
  }
  for (size_t i = 0; i < K; ++i) {
    const Rational a = mod_one(s.candidates[i].angle.lo) +
                       (s.candidates[i].angle.hi - s.candidates[i].angle.lo);
    Rational b;
    if (i + 1 < K)
      b = mod_one(s.candidates[i + 1].angle.lo);
    else
      b = mod_one(s.candidates[0].angle.lo) + 1;
    // Unrolled line: candidate i's footprint ends at a, the next begins at b.
    if (b <= a) throw ConsistencyError("candidate footprints out of order");
    const UnityPoint z = pick_sample(a, b, budget);
    s.arc_samples.push_back(z);
    s.arc_values.push_back(value_at(z));
  }
  s.jumps.resize(K);
  for (size_t i = 0; i < K; ++i) s.jumps[i] = s.arc_values[i] - s.arc_values[(i + K - 1) % K];
  return s;
}

std::vector<std::pair<CirclePoint, Rational>> jumps(const SignatureStepFunction& s) {
  std::vector<std::pair<CirclePoint, Rational>> out;
  for (size_t i = 0; i < s.jumps.size(); ++i)
    if (s.jumps[i] != 0) out.emplace_back(s.candidates[i], s.jumps[i]);
  return out;
}

SignatureStepFunction merge_equal_arcs(const SignatureStepFunction& s) {
  SignatureStepFunction out;
  out.rho = s.rho;
  if (s.candidates.empty()) return s;
  for (size_t i = 0; i < s.candidates.size(); ++i) {
    if (s.jumps[i] == 0) continue;
    out.candidates.push_back(s.candidates[i]);
    out.arc_values.push_back(s.arc_values[i]);
    out.arc_samples.push_back(s.arc_samples[i]);
  }
  if (out.candidates.empty()) {
    out.arc_values.push_back(s.arc_values[0]);
    out.arc_samples.push_back(s.arc_samples[0]);
    return out;
  }
  const size_t K = out.candidates.size();
  out.jumps.resize(K);
  for (size_t i = 0; i < K; ++i) out.jumps[i] = out.arc_values[i] - out.arc_values[(i + K - 1) % K];
  return out;
}

Rational evaluate_class_at(const WittElement& w, const Embedding& rho, const UnityPoint& z,
                           const Budget& budget) {
  if (rho.m != w.conductor())
    throw ValidationError("embedding conductor must equal the element's conductor");
  Rational v(0);
  for (size_t i = 0; i < w.summands().size(); ++i) {
    try {
      v += w.summands()[i].coeff *
           Rational(signature_at_unity(w.summands()[i].form, rho.k, z, budget));
    } catch (const PoleError& e) {
      throw PoleError("summand " + std::to_string(i) + ": " + e.what());
    } catch (const SingularFormError& e) {
      throw SingularFormError("summand " + std::to_string(i) + ": " + e.what());
    }
  }
  return v;
}

}  // namespace wittsig
