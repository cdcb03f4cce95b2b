#include "latt/schedule.hpp"

#include <algorithm>
#include <set>

namespace latt {

Schedule build_schedule(const PeriodicTiling& t) {
  TilingReport report = verify_tiling(t);
  if (!report.valid)
    throw Error(Err::InvalidTiling, "schedule construction needs a valid tiling");

  std::vector<bool> placed(t.prototiles.size(), false);
  for (const Placement& pl : t.placements) placed[pl.tile_index] = true;

  std::set<Point> union_cells;
  for (std::size_t j = 0; j < t.prototiles.size(); ++j)
    if (placed[j])
      union_cells.insert(t.prototiles[j].cells.begin(),
                         t.prototiles[j].cells.end());

  Schedule s{t.basis,
             t.prototiles,
             static_cast<int>(union_cells.size()),
             std::vector<int>(static_cast<std::size_t>(t.basis.index()), 0),
             std::vector<int>(static_cast<std::size_t>(t.basis.index()), -1),
             std::vector<Point>(union_cells.begin(), union_cells.end())};

  for (const Placement& pl : t.placements) {
    for (const Point& cell : t.prototiles[pl.tile_index].cells) {
      auto it = std::lower_bound(s.slot_cells.begin(), s.slot_cells.end(), cell);
      int slot = static_cast<int>(it - s.slot_cells.begin()) + 1;
      Int id = t.basis.coset_index(point_add(pl.offset, cell));
      s.slot_of_coset[id] = slot;
      s.deployment[id] = pl.tile_index;
    }
  }
  return s;
}

int slot_of(const Schedule& s, const Point& p) {
  return s.slot_of_coset[static_cast<std::size_t>(s.basis.coset_index(p))];
}

bool may_transmit(const Schedule& s, const Point& p, Int time) {
  Int phase = (time - 1) % s.m;
  if (phase < 0) phase += s.m;
  return phase + 1 == slot_of(s, p);
}

namespace {

struct Reach {
  Point lo;
  Point hi;
};

Reach cell_reach(const Prototile& t) {
  Reach r{t.cells.front(), t.cells.front()};
  for (const Point& c : t.cells)
    for (std::size_t i = 0; i < c.size(); ++i) {
      r.lo[i] = std::min(r.lo[i], c[i]);
      r.hi[i] = std::max(r.hi[i], c[i]);
    }
  return r;
}

// First common point of (p + Na) and (q + Nb), or nullopt.
std::optional<Point> common_point(const Point& p, const Prototile& na,
                                  const Point& q, const Prototile& nb) {
  std::vector<Point> left = translate(na, p);
  for (const Point& b : nb.cells) {
    Point c = point_add(q, b);
    if (std::binary_search(left.begin(), left.end(), c)) return c;
  }
  return std::nullopt;
}

}  // namespace

CollisionReport verify_collision_free(const Schedule& s, const Box& window) {
  require_dim(window.lo, static_cast<std::size_t>(s.basis.dim()));
  std::vector<Point> pts = box_points(window);
  std::vector<int> slot(pts.size()), dep(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Int id = s.basis.coset_index(pts[i]);
    slot[i] = s.slot_of_coset[id];
    dep[i] = s.deployment[id];
  }
  std::vector<Reach> reach;
  reach.reserve(s.prototiles.size());
  for (const Prototile& t : s.prototiles) reach.push_back(cell_reach(t));

  CollisionReport report;
  const std::size_t d = window.lo.size();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (slot[i] != slot[j]) continue;
      // p + a = q + b needs q - p within [lo_a - hi_b, hi_a - lo_b] per axis
      const Reach& ra = reach[dep[i]];
      const Reach& rb = reach[dep[j]];
      bool possible = true;
      for (std::size_t ax = 0; ax < d && possible; ++ax) {
        Int delta = checked_sub(pts[j][ax], pts[i][ax]);
        possible = delta >= checked_sub(ra.lo[ax], rb.hi[ax]) &&
                   delta <= checked_sub(ra.hi[ax], rb.lo[ax]);
      }
      if (!possible) continue;
      auto common = common_point(pts[i], s.prototiles[dep[i]], pts[j],
                                 s.prototiles[dep[j]]);
      if (common)
        report.witnesses.push_back(
            CollisionWitness{slot[i], pts[i], pts[j], *common});
    }
  }
  report.collision_free = report.witnesses.empty();
  return report;
}

}  // namespace latt
