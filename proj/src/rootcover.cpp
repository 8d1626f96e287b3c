#include "wittsig/rootcover.hpp"

#include <algorithm>
#include <numeric>

#include "wittsig/errors.hpp"

namespace wittsig {

namespace {

struct Cell {
  Rational cx, cy;  // center
};

Rational rat_abs(const Rational& x) { return x >= 0 ? x : Rational(-x); }

// Horner evaluation of the embedded polynomial on a square box.
BoxC eval_on_box(const std::vector<BoxC>& coeffs, const BoxC& z) {
  BoxC acc = BoxC::point(0, 0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

struct DisjointSet {
  std::vector<size_t> parent;
  explicit DisjointSet(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), size_t{0}); }
  size_t find(size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(size_t a, size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

std::optional<std::vector<RootCluster>> circle_root_cover(const LaurentPoly& p, int depth,
                                                          const Budget& budget) {
  if (p.is_zero()) throw ValidationError("circle_root_cover: zero polynomial");
  if (!p.is_polynomial()) throw ValidationError("circle_root_cover: negative exponents present");
  const long deg = p.max_exp();
  if (deg == 0) return std::vector<RootCluster>{};

  const long prec = budget.start_precision + 4 * depth;
  const Embedding id = identity_embedding(p.conductor());

  // Embedded coefficients; refine until the leading coefficient excludes 0.
  std::vector<BoxC> coeffs;
  long lead_prec = prec;
  for (;;) {
    coeffs.assign(static_cast<size_t>(deg) + 1, BoxC::point(0, 0));
    for (const auto& [e, c] : p.terms())
      coeffs[static_cast<size_t>(e)] = embed_numeric(c, id, lead_prec).box;
    if (!coeffs.back().contains_zero()) break;
    lead_prec *= 2;
    if (lead_prec > budget.max_precision)
      throw RefinementBudgetError("circle_root_cover: leading coefficient refinement budget");
  }

  // Cauchy bound: every root has |z| <= 1 + max |a_i| / |a_deg|.
  auto abs_upper = [](const BoxC& b) {
    const Rational re = std::max(rat_abs(b.re.lo), rat_abs(b.re.hi));
    const Rational im = std::max(rat_abs(b.im.lo), rat_abs(b.im.hi));
    return re + im;
  };
  const RatInterval lead_mag2 = mag2(coeffs.back());
  Rational max_ratio2(0);
  for (size_t i = 0; i + 1 < coeffs.size(); ++i) {
    const Rational u = abs_upper(coeffs[i]);
    max_ratio2 = std::max(max_ratio2, Rational(u * u / lead_mag2.lo));
  }
  // radius bound R with R^2 >= (1 + max |a_i/a_deg|)^2, coarse but certified
  Rational bound = Rational(4) + 4 * max_ratio2;
  Rational R(2);
  while (R * R < bound) R *= 2;

  // Uniform breadth-first subdivision. Boxes certified away from the unit
  // circle stop subdividing (their roots can never become circle candidates).
  std::vector<Cell> cells{Cell{Rational(0), Rational(0)}};
  Rational half = R;  // half side length of current cells
  for (int level = 0; level < depth; ++level) {
    half /= 2;
    std::vector<Cell> next;
    next.reserve(cells.size() * 2);
    for (const Cell& c : cells) {
      for (int dx = -1; dx <= 1; dx += 2) {
        for (int dy = -1; dy <= 1; dy += 2) {
          Cell child{c.cx + Rational(dx) * half, c.cy + Rational(dy) * half};
          const BoxC box{{child.cx - half, child.cx + half}, {child.cy - half, child.cy + half}};
          if (!eval_on_box(coeffs, box).contains_zero()) continue;
          const RatInterval m2 = mag2(box);
          if (m2.hi < 1 || m2.lo > 1) continue;  // cannot meet the circle
          next.push_back(child);
        }
      }
      if (next.size() > 200000)
        throw RefinementBudgetError("circle_root_cover: subdivision exploded");
    }
    cells = std::move(next);
    if (cells.empty()) return std::vector<RootCluster>{};
  }

  // Cluster by adjacency (corner contact included). Cells sit on the dyadic
  // grid with pitch 2*half, so adjacency is a coordinate comparison.
  const size_t n = cells.size();
  const Rational pitch = 2 * half;
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    if (cells[a].cx != cells[b].cx) return cells[a].cx < cells[b].cx;
    return cells[a].cy < cells[b].cy;
  });
  DisjointSet ds(n);
  for (size_t ii = 0; ii < n; ++ii) {
    for (size_t jj = ii + 1; jj < n; ++jj) {
      const Cell& a = cells[order[ii]];
      const Cell& b = cells[order[jj]];
      if (b.cx - a.cx > pitch) break;
      if (rat_abs(b.cy - a.cy) <= pitch) ds.unite(order[ii], order[jj]);
    }
  }

  std::vector<RootCluster> clusters;
  std::vector<std::pair<size_t, BoxC>> hulls;  // root id -> hull
  for (size_t i = 0; i < n; ++i) {
    const size_t r = ds.find(i);
    const BoxC box{{cells[i].cx - half, cells[i].cx + half}, {cells[i].cy - half, cells[i].cy + half}};
    auto it = std::find_if(hulls.begin(), hulls.end(), [&](const auto& h) { return h.first == r; });
    if (it == hulls.end())
      hulls.emplace_back(r, box);
    else
      it->second = BoxC{hull(it->second.re, box.re), hull(it->second.im, box.im)};
  }
  for (const auto& [root, hb] : hulls) {
    auto angle = angle_interval_turns(hb, prec);
    if (!angle) return std::nullopt;  // too coarse; caller deepens
    clusters.push_back(RootCluster{hb, *angle});
  }
  std::sort(clusters.begin(), clusters.end(),
            [](const RootCluster& a, const RootCluster& b) { return a.angle.lo < b.angle.lo; });
  return clusters;
}

}  // namespace wittsig
