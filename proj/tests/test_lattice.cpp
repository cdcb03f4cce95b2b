#include <algorithm>
#include <limits>
#include <set>

#include "doctest.h"
#include "test_util.hpp"

using namespace latt;
using tt::ball3;
using tt::mat2;
using tt::plus_tile;
using tt::same_mat;

TEST_CASE("checked arithmetic traps overflow") {
  Int big = std::numeric_limits<Int>::max();
  CHECK(checked_add(2, 3) == 5);
  CHECK(checked_sub(2, 5) == -3);
  CHECK(checked_mul(-4, 6) == -24);
  CHECK_ERR(checked_add(big, 1), Err::Overflow);
  CHECK_ERR(checked_sub(std::numeric_limits<Int>::min(), 1), Err::Overflow);
  CHECK_ERR(checked_mul(big, 2), Err::Overflow);
}

TEST_CASE("floor_div rounds toward minus infinity") {
  CHECK(floor_div(7, 2) == 3);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(floor_div(-6, 2) == -3);
  CHECK(floor_div(7, -2) == -4);
  CHECK(floor_div(-7, -2) == 3);
}

TEST_CASE("make_prototile sorts, dedupes, and requires the origin") {
  Prototile t = make_prototile({{1, 0}, {0, 0}, {1, 0}, {0, 1}}, 7);
  CHECK(t.cells == std::vector<Point>{{0, 0}, {0, 1}, {1, 0}});
  CHECK(t.id == 7);
  CHECK(prototile_contains(t, {1, 0}));
  CHECK(!prototile_contains(t, {2, 0}));
  CHECK_ERR(make_prototile({{1, 0}}), Err::BadInput);
  CHECK_ERR(make_prototile({}), Err::Empty);
  CHECK_ERR(make_prototile({{0, 0}, {1}}), Err::DimensionMismatch);
}

TEST_CASE("hermite normal form: canonical lower-triangular generators") {
  SUBCASE("identity is fixed") {
    SublatticeBasis b(IntMat::Identity(2, 2));
    CHECK(same_mat(b.hnf(), IntMat::Identity(2, 2)));
    CHECK(b.index() == 1);
  }
  SUBCASE("generators (2,2),(4,0)") {
    SublatticeBasis b(mat2(2, 2, 4, 0));
    CHECK(b.index() == 8);
    CHECK(same_mat(b.hnf(), mat2(2, 2, 0, 4)));
  }
  SUBCASE("generators (1,2),(2,-1)") {
    SublatticeBasis b(mat2(1, 2, 2, -1));
    CHECK(b.index() == 5);
    CHECK(same_mat(b.hnf(), mat2(1, 2, 0, 5)));
  }
  SUBCASE("idempotent") {
    SublatticeBasis b(mat2(2, 2, 4, 0));
    SublatticeBasis again(b.hnf());
    CHECK(same_mat(again.hnf(), b.hnf()));
    CHECK(same_mat(hermite_normal_form(b).generators(), b.hnf()));
  }
  SUBCASE("same sublattice, same form") {
    SublatticeBasis a(mat2(1, 0, 3, 1));  // unimodular
    CHECK(same_mat(a.hnf(), IntMat::Identity(2, 2)));
  }
  SUBCASE("singular input refused") {
    CHECK_ERR(SublatticeBasis(mat2(1, 2, 2, 4)), Err::SingularBasis);
    IntMat rect(2, 1);
    rect << 1, 0;
    CHECK_ERR(SublatticeBasis(rect), Err::BadInput);
  }
}

TEST_CASE("two bases of one sublattice generate the same points") {
  // window cross-check for (2,2),(4,0) vs its normal form
  SublatticeBasis raw(mat2(2, 2, 4, 0));
  SublatticeBasis canon(raw.hnf());
  for (Int x = -10; x <= 10; ++x)
    for (Int y = -10; y <= 10; ++y)
      CHECK(raw.contains({x, y}) == canon.contains({x, y}));
}

TEST_CASE("coset_index is periodic, total, and canonical") {
  SublatticeBasis b33(mat2(3, 0, 0, 3));
  CHECK(b33.coset_index({0, 0}) == b33.coset_index({3, 3}));
  CHECK(b33.coset_index({-1, 7}) == b33.coset_index({2, 1}));

  SublatticeBasis bplus(mat2(1, 2, 2, -1));
  CHECK(bplus.coset_index({1, 2}) == bplus.coset_index({0, 0}));
  CHECK(bplus.coset_index({2, -1}) == bplus.coset_index({0, 0}));

  std::set<Int> seen;
  for (Int x = 0; x <= 2; ++x)
    for (Int y = 0; y <= 2; ++y) seen.insert(b33.coset_index({x, y}));
  CHECK(seen.size() == 9);
  CHECK(*seen.begin() == 0);
  CHECK(*seen.rbegin() == 8);

  CHECK_ERR(b33.coset_index({1}), Err::DimensionMismatch);
}

TEST_CASE("fundamental domain lists one representative per coset") {
  CHECK(fundamental_domain(SublatticeBasis(IntMat::Identity(2, 2))) ==
        std::vector<Point>{{0, 0}});
  SublatticeBasis b33(mat2(3, 0, 0, 3));
  std::vector<Point> dom = fundamental_domain(b33);
  CHECK(dom.size() == 9);
  for (std::size_t i = 0; i < dom.size(); ++i) {
    CHECK(b33.coset_index(dom[i]) == static_cast<Int>(i));
    CHECK(b33.rep_of_index(static_cast<Int>(i)) == dom[i]);
  }
  SublatticeBasis bplus(mat2(1, 2, 2, -1));
  std::vector<Point> dom5 = fundamental_domain(bplus);
  CHECK(dom5.size() == 5);
  for (std::size_t i = 0; i < dom5.size(); ++i)
    for (std::size_t j = i + 1; j < dom5.size(); ++j)
      CHECK(bplus.coset_index(dom5[i]) != bplus.coset_index(dom5[j]));
}

TEST_CASE("translate shifts a prototile's cells") {
  Prototile dot = make_prototile({{0, 0}});
  CHECK(translate(dot, {5, 5}) == std::vector<Point>{{5, 5}});

  std::vector<Point> ball = translate(ball3(), {0, 0});
  CHECK(ball.size() == 9);
  for (const Point& p : ball) {
    CHECK(std::abs(p[0]) <= 1);
    CHECK(std::abs(p[1]) <= 1);
  }

  std::vector<Point> moved = translate(plus_tile(), {2, 0});
  std::vector<Point> want = {{1, 0}, {2, -1}, {2, 0}, {2, 1}, {3, 0}};
  std::sort(moved.begin(), moved.end());
  CHECK(moved == want);
}

TEST_CASE("tiles_conflict: intersection of translated neighborhoods") {
  Prototile ball = ball3();
  CHECK(tiles_conflict({4, -2}, ball, {4, -2}, ball));  // 0 is in N
  CHECK(!tiles_conflict({0, 0}, ball, {3, 0}, ball));
  CHECK(tiles_conflict({0, 0}, ball, {2, 0}, ball));
  CHECK(tiles_conflict({2, 0}, ball, {0, 0}, ball));  // symmetric
  Prototile dot = make_prototile({{0, 0}});
  CHECK(!tiles_conflict({0, 0}, dot, {0, 1}, dot));
  CHECK_ERR(tiles_conflict({0, 0}, ball, {0}, ball), Err::DimensionMismatch);
}

TEST_CASE("minkowski_sum adds coordinate ranges") {
  std::vector<Point> b = {{0, 0}, {2, 1}};
  CHECK(minkowski_sum({{0, 0}}, b) == b);

  std::vector<Point> ball5 = minkowski_sum(ball3().cells, ball3().cells);
  CHECK(ball5.size() == 25);
  for (const Point& p : ball5) {
    CHECK(std::abs(p[0]) <= 2);
    CHECK(std::abs(p[1]) <= 2);
  }

  std::vector<Point> diamond =
      minkowski_sum(plus_tile().cells, plus_tile().cells);
  CHECK(diamond.size() == 13);
  for (const Point& p : diamond) CHECK(std::abs(p[0]) + std::abs(p[1]) <= 2);
}

TEST_CASE("boxes enumerate points in lexicographic order") {
  Box b = tt::box2(0, 0, 2, 2);
  std::vector<Point> pts = box_points(b);
  CHECK(pts.size() == 9);
  CHECK(pts.front() == Point{0, 0});
  CHECK(pts[1] == Point{0, 1});
  CHECK(pts.back() == Point{2, 2});
  CHECK(std::is_sorted(pts.begin(), pts.end()));
  CHECK(box_contains(b, {1, 2}));
  CHECK(!box_contains(b, {1, 3}));
  CHECK_ERR(make_box({1, 0}, {0, 0}), Err::BadInput);
  CHECK_ERR(make_box({0, 0}, {0}), Err::DimensionMismatch);
}

TEST_CASE("geometric basis wants independent columns") {
  Eigen::MatrixXd good(2, 2);
  good << 1, 0.5, 0, 0.8660254037844386;
  CHECK(make_geometric_basis(good).vectors.cols() == 2);
  Eigen::MatrixXd bad(2, 2);
  bad << 1, 2, 1, 2;
  CHECK_ERR(make_geometric_basis(bad), Err::SingularBasis);
}

TEST_CASE("format_point prints tuples") {
  CHECK(format_point({1, -2}) == "(1,-2)");
  CHECK(format_point({7}) == "(7)");
}
