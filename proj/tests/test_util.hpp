#pragma once

// Shared builders for the test binaries: the reference tilings, a couple of
// matrix helpers, and random generators driven by the library's own rng so
// every run is reproducible.

#include <vector>

#include "latt/oracle.hpp"
#include "latt/sim.hpp"
#include "latt/tiling.hpp"

#define CHECK_ERR(expr, want)                          \
  do {                                                 \
    bool caught_ = false;                              \
    try {                                              \
      (void)(expr);                                    \
    } catch (const latt::Error& e_) {                  \
      caught_ = true;                                  \
      CHECK(e_.kind == (want));                        \
    }                                                  \
    CHECK_MESSAGE(caught_, "expected error " #want);   \
  } while (0)

namespace tt {

using namespace latt;

// generators (a,b) and (c,d) as columns
inline IntMat mat2(Int a, Int b, Int c, Int d) {
  IntMat m(2, 2);
  m << a, c, b, d;
  return m;
}

inline bool same_mat(const IntMat& a, const IntMat& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && a == b;
}

inline Prototile ball3(int id = 0) {
  std::vector<Point> cells;
  for (Int x = -1; x <= 1; ++x)
    for (Int y = -1; y <= 1; ++y) cells.push_back({x, y});
  return make_prototile(cells, id);
}

inline Prototile plus_tile(int id = 0) {
  return make_prototile({{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}}, id);
}

inline Prototile arrow_tile(int id = 0) {
  return make_prototile(
      {{0, 0}, {1, 0}, {2, -1}, {2, 0}, {2, 1}, {3, -1}, {3, 0}, {3, 1}}, id);
}

inline Prototile s_tet(int id = 0) {
  return make_prototile({{0, 0}, {0, 1}, {1, -1}, {1, 0}}, id);
}

inline Prototile z_tet(int id = 1) {
  return make_prototile({{-1, -1}, {-1, 0}, {0, 0}, {0, 1}}, id);
}

inline PeriodicTiling single(const Prototile& n, const IntMat& gens) {
  Point origin(static_cast<std::size_t>(gens.rows()), 0);
  return PeriodicTiling{SublatticeBasis(gens), {n}, {{origin, 0}}};
}

inline PeriodicTiling ball3_tiling() { return single(ball3(), mat2(3, 0, 0, 3)); }
inline PeriodicTiling plus_tiling() { return single(plus_tile(), mat2(1, 2, 2, -1)); }
inline PeriodicTiling arrow_tiling() { return single(arrow_tile(), mat2(4, 0, 2, 2)); }

inline PeriodicTiling ball_plus_tiling() {
  PeriodicTiling t{SublatticeBasis(mat2(1, 12, 0, 29)),
                   {ball3(0), plus_tile(1)},
                   {}};
  t.placements.push_back({{0, 0}, 0});
  for (Int y : {3, 7, 22, 26}) t.placements.push_back({{0, y}, 1});
  return t;
}

inline PeriodicTiling sz_mixed_tiling() {
  PeriodicTiling t{SublatticeBasis(mat2(5, 1, 0, 8)), {s_tet(0), z_tet(1)}, {}};
  for (Point o : {Point{1, 7}, Point{2, 4}, Point{4, 2}, Point{5, 3},
                  Point{6, 4}, Point{5, 7}, Point{3, 9}, Point{2, 8}})
    t.placements.push_back({o, 0});
  t.placements.push_back({{5, 5}, 1});
  t.placements.push_back({{4, 6}, 1});
  return t;
}

inline PeriodicTiling sz_stripes_tiling() {
  PeriodicTiling t{SublatticeBasis(mat2(10, 0, 0, 2)),
                   {s_tet(0), z_tet(1), make_prototile({{0, 0}}, 2)},
                   {}};
  t.placements.push_back({{2, 0}, 1});
  t.placements.push_back({{4, 0}, 1});
  t.placements.push_back({{5, 0}, 0});
  t.placements.push_back({{7, 0}, 0});
  for (Point o : {Point{9, 0}, Point{9, 1}, Point{0, 0}, Point{0, 1}})
    t.placements.push_back({o, 2});
  return t;
}

inline Box box2(Int x0, Int y0, Int x1, Int y1) {
  return make_box({x0, y0}, {x1, y1});
}

// random GL_d(Z) element as a short product of elementary row operations
inline IntMat random_unimodular(SplitMix64& rng, int d, int steps = 6) {
  IntMat u = IntMat::Identity(d, d);
  for (int s = 0; s < steps; ++s) {
    auto i = static_cast<Eigen::Index>(rng.bounded(static_cast<std::uint64_t>(d)));
    auto j = static_cast<Eigen::Index>(rng.bounded(static_cast<std::uint64_t>(d)));
    switch (rng.bounded(3)) {
      case 0:
        if (i != j) u.row(i).swap(u.row(j));
        break;
      case 1:
        u.row(i) = -u.row(i);
        break;
      default:
        if (i != j)
          u.row(i) += (static_cast<Int>(rng.bounded(5)) - 2) * u.row(j);
        break;
    }
  }
  return u;
}

inline Point apply_mat(const IntMat& u, const Point& p) {
  Point q(p.size(), 0);
  for (Eigen::Index r = 0; r < u.rows(); ++r)
    for (Eigen::Index c = 0; c < u.cols(); ++c)
      q[static_cast<std::size_t>(r)] =
          checked_add(q[static_cast<std::size_t>(r)],
                      checked_mul(u(r, c), p[static_cast<std::size_t>(c)]));
  return q;
}

// image of a tiling under p -> u*p + (shift on offsets); validity-preserving
inline PeriodicTiling transform_tiling(const PeriodicTiling& t, const IntMat& u,
                                       const Point& shift) {
  std::vector<Prototile> protos;
  for (const Prototile& n : t.prototiles) {
    std::vector<Point> cells;
    for (const Point& c : n.cells) cells.push_back(apply_mat(u, c));
    protos.push_back(make_prototile(cells, n.id));
  }
  PeriodicTiling out{SublatticeBasis(u * t.basis.generators()), protos, {}};
  for (const Placement& pl : t.placements)
    out.placements.push_back(
        {point_add(apply_mat(u, pl.offset), shift), pl.tile_index});
  return out;
}

inline Point random_point(SplitMix64& rng, int d, Int lo, Int hi) {
  Point p;
  for (int i = 0; i < d; ++i)
    p.push_back(lo + static_cast<Int>(
                         rng.bounded(static_cast<std::uint64_t>(hi - lo + 1))));
  return p;
}

}  // namespace tt
