#include "doctest.h"
#include "json.hpp"
#include "test_util.hpp"

#include "latt/io.hpp"

using namespace latt;
using namespace tt;

TEST_CASE("tiling documents round-trip") {
  for (const PeriodicTiling& t :
       {plus_tiling(), ball_plus_tiling(), sz_mixed_tiling()}) {
    std::string doc = tiling_to_json(t);
    TilingFile back = parse_tiling_json(doc);
    CHECK(same_mat(back.tiling.basis.generators(), t.basis.generators()));
    CHECK(back.tiling.prototiles.size() == t.prototiles.size());
    for (std::size_t i = 0; i < t.prototiles.size(); ++i)
      CHECK(back.tiling.prototiles[i].cells == t.prototiles[i].cells);
    CHECK(back.tiling.placements.size() == t.placements.size());
    for (std::size_t i = 0; i < t.placements.size(); ++i) {
      CHECK(back.tiling.placements[i].offset == t.placements[i].offset);
      CHECK(back.tiling.placements[i].tile_index == t.placements[i].tile_index);
    }
    CHECK(!back.geometry.has_value());
    // serialization is stable
    CHECK(tiling_to_json(back.tiling) == doc);
  }
}

TEST_CASE("geometry survives the round-trip") {
  Eigen::MatrixXd hex(2, 2);
  hex << 1, 0.5, 0, 0.8660254037844386;
  PeriodicTiling t = plus_tiling();
  std::string doc = tiling_to_json(t, make_geometric_basis(hex));
  TilingFile back = parse_tiling_json(doc);
  REQUIRE(back.geometry.has_value());
  CHECK(back.geometry->vectors.isApprox(hex, 1e-12));
}

TEST_CASE("parse rejects malformed tiling documents") {
  CHECK_ERR(parse_tiling_json("not json at all"), Err::BadInput);
  CHECK_ERR(parse_tiling_json("[]"), Err::BadInput);
  CHECK_ERR(parse_tiling_json("{\"dim\": 2}"), Err::BadInput);
  // basis vector of wrong dimension
  CHECK_ERR(parse_tiling_json(R"({"dim":2,"prototiles":[[[0,0]]],
      "basis":[[1,0],[0]],"placements":[{"offset":[0,0],"tile":0}]})"),
            Err::BadInput);
  // tile index out of range
  CHECK_ERR(parse_tiling_json(R"({"dim":2,"prototiles":[[[0,0]]],
      "basis":[[1,0],[0,1]],"placements":[{"offset":[0,0],"tile":3}]})"),
            Err::BadTileIndex);
  // non-integer coordinate
  CHECK_ERR(parse_tiling_json(R"({"dim":2,"prototiles":[[[0,0.5]]],
      "basis":[[1,0],[0,1]],"placements":[{"offset":[0,0],"tile":0}]})"),
            Err::BadInput);
}

TEST_CASE("schedule documents round-trip exactly") {
  for (const PeriodicTiling& t :
       {plus_tiling(), arrow_tiling(), ball_plus_tiling()}) {
    Schedule s = build_schedule(t);
    std::string doc = schedule_to_json(s);
    Schedule back = parse_schedule_json(doc);
    CHECK(back.m == s.m);
    CHECK(back.slot_cells == s.slot_cells);
    CHECK(back.deployment == s.deployment);
    CHECK(back.slot_of_coset == s.slot_of_coset);
    for (const Point& p : fundamental_domain(s.basis))
      CHECK(slot_of(back, p) == slot_of(s, p));
    CHECK(schedule_to_json(back) == doc);
  }
}

TEST_CASE("parse rejects inconsistent schedule documents") {
  Schedule s = build_schedule(plus_tiling());
  std::string doc = schedule_to_json(s);

  // drop one slot entry: no longer total
  nlohmann::json mutated = nlohmann::json::parse(doc);
  mutated["slots"].erase(2);
  CHECK_ERR(parse_schedule_json(mutated.dump()), Err::BadInput);

  // slot outside [1, m]
  mutated = nlohmann::json::parse(doc);
  mutated["slots"][0]["slot"] = 6;
  CHECK_ERR(parse_schedule_json(mutated.dump()), Err::BadInput);

  // duplicate coset
  mutated = nlohmann::json::parse(doc);
  mutated["slots"][1]["coset_rep"] = mutated["slots"][0]["coset_rep"];
  CHECK_ERR(parse_schedule_json(mutated.dump()), Err::BadInput);

  CHECK_ERR(parse_schedule_json("{}"), Err::BadInput);
  CHECK_ERR(parse_schedule_json("42"), Err::BadInput);
}

TEST_CASE("file helpers write and read back") {
  std::string path = "io_test_tmp.json";
  write_text_file(path, tiling_to_json(plus_tiling()));
  TilingFile back = read_tiling_file(path);
  CHECK(back.tiling.basis.index() == 5);
  CHECK_ERR(read_text_file("definitely_missing_file.json"), Err::BadInput);
  std::remove(path.c_str());
}
