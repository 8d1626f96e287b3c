#ifndef WITTSIG_ROOTCOVER_HPP
#define WITTSIG_ROOTCOVER_HPP

#include <optional>
#include <vector>

#include "wittsig/interval.hpp"
#include "wittsig/laurent.hpp"
#include "wittsig/options.hpp"

namespace wittsig {

/// One connected cluster of retained subdivision boxes meeting the unit
/// circle; the angle interval (turns, lo in [0,1), hi may pass 1) certifiedly
/// contains every circle point of the cluster.
struct RootCluster {
  BoxC hull;
  RatInterval angle;
};

// Covers all complex roots of the polynomial p (identity embedding of its
// coefficients) by subdivision boxes inside a Cauchy bound box, discarding
// boxes whose interval evaluation excludes zero, and returns the connected
// clusters that meet the unit circle. Subdivision runs to the given uniform
// depth; returns nullopt when the clusters are not yet resolvable into
// narrow angle intervals (caller deepens). p must be a nonzero honest
// polynomial; roots of unity the caller wants recognized exactly must be
// divided out beforehand, or they will simply show up as clusters here.
std::optional<std::vector<RootCluster>> circle_root_cover(const LaurentPoly& p, int depth,
                                                          const Budget& budget);

}  // namespace wittsig

#endif
