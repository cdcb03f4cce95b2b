#include <algorithm>

#include "doctest.h"
#include "test_util.hpp"

using namespace latt;
using namespace tt;

TEST_CASE("reference tilings verify valid") {
  for (const PeriodicTiling& t :
       {ball3_tiling(), plus_tiling(), arrow_tiling(), ball_plus_tiling(),
        sz_mixed_tiling(), sz_stripes_tiling()}) {
    TilingReport rep = verify_tiling(t);
    CHECK(rep.valid);
    CHECK(rep.violations.empty());
    CHECK(rep.index == t.basis.index());
  }
}

TEST_CASE("undersized basis is caught with overlap witnesses") {
  PeriodicTiling t = single(ball3(), mat2(3, 0, 0, 2));  // index 6 < 9 cells
  TilingReport rep = verify_tiling(t);
  CHECK(!rep.valid);
  CHECK(!rep.violations.empty());
  CHECK(std::any_of(rep.violations.begin(), rep.violations.end(),
                    [](const Violation& v) {
                      return v.kind == ViolationKind::Overlap;
                    }));
}

TEST_CASE("duplicate placement overlaps, missing placement uncovers") {
  PeriodicTiling t = ball_plus_tiling();

  PeriodicTiling dup = t;
  dup.placements.push_back(dup.placements[1]);
  TilingReport drep = verify_tiling(dup);
  CHECK(!drep.valid);
  CHECK(std::any_of(drep.violations.begin(), drep.violations.end(),
                    [](const Violation& v) {
                      return v.kind == ViolationKind::Overlap &&
                             v.placement_a >= 0 && v.placement_b >= 0;
                    }));

  PeriodicTiling missing = t;
  missing.placements.pop_back();
  TilingReport mrep = verify_tiling(missing);
  CHECK(!mrep.valid);
  CHECK(std::any_of(mrep.violations.begin(), mrep.violations.end(),
                    [](const Violation& v) {
                      return v.kind == ViolationKind::Uncovered;
                    }));
}

TEST_CASE("bad tile index is a hard error") {
  PeriodicTiling t = plus_tiling();
  t.placements[0].tile_index = 3;
  CHECK_ERR(verify_tiling(t), Err::BadTileIndex);
}

TEST_CASE("validity survives common translation and basis change") {
  PeriodicTiling t = sz_mixed_tiling();
  for (Placement& pl : t.placements)
    pl.offset = point_add(pl.offset, {7, -3});
  CHECK(verify_tiling(t).valid);

  // same sublattice, different generators: add one generator to the other
  IntMat g = t.basis.generators();
  g.col(1) += g.col(0);
  PeriodicTiling t2{SublatticeBasis(g), t.prototiles, t.placements};
  CHECK(verify_tiling(t2).valid);
}

TEST_CASE("cell count must match the index") {
  // 5-cell plus on an index-4 basis can never tile
  PeriodicTiling t = single(plus_tile(), mat2(2, 0, 0, 2));
  CHECK(!verify_tiling(t).valid);
}

TEST_CASE("respectable_index finds a containing prototile") {
  CHECK(respectable_index({ball3(0), plus_tile(1)}) == 0);
  CHECK(respectable_index({plus_tile(0), ball3(1)}) == 1);
  CHECK(respectable_index({s_tet(0), z_tet(1)}) == std::nullopt);
  CHECK(respectable_index({plus_tile(0)}) == 0);
  // identical cell sets count as mutually containing; lowest index wins
  CHECK(respectable_index({plus_tile(0), plus_tile(1)}) == 0);
  CHECK_ERR(respectable_index({}), Err::BadInput);
}

TEST_CASE("window_supports_optimality needs room for N+N") {
  Prototile ball = ball3();
  CHECK(window_supports_optimality(box2(0, 0, 4, 4), ball));
  CHECK(!window_supports_optimality(box2(0, 0, 3, 3), ball));
  CHECK(window_supports_optimality(box2(10, -3, 14, 1), ball));  // translate
  Prototile dot = make_prototile({{0, 0}});
  CHECK(window_supports_optimality(box2(0, 0, 0, 0), dot));
  CHECK_ERR(window_supports_optimality(make_box({0}, {4}), ball),
            Err::DimensionMismatch);
}

TEST_CASE("coset_deployment maps every coset to its governing prototile") {
  PeriodicTiling t = ball_plus_tiling();
  std::vector<int> dep = coset_deployment(t);
  CHECK(dep.size() == 29);
  CHECK(std::count(dep.begin(), dep.end(), 0) == 9);
  CHECK(std::count(dep.begin(), dep.end(), 1) == 20);
  // the ball placement at the origin governs the origin coset
  CHECK(dep[static_cast<std::size_t>(t.basis.coset_index({0, 0}))] == 0);

  PeriodicTiling bad = single(ball3(), mat2(3, 0, 0, 2));
  CHECK_ERR(coset_deployment(bad), Err::InvalidTiling);
}
