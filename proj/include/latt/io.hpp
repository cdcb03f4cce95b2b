#pragma once

#include <optional>
#include <string>

#include "latt/schedule.hpp"
#include "latt/tiling.hpp"

namespace latt {

// Tiling documents: {"dim", "prototiles", "basis", "placements",
// optional "geometry"}. "basis" and "geometry" are lists of generator
// vectors (stored as matrix columns internally).
struct TilingFile {
  PeriodicTiling tiling;
  std::optional<GeometricBasis> geometry;
};

TilingFile parse_tiling_json(const std::string& text);
TilingFile read_tiling_file(const std::string& path);
std::string tiling_to_json(const PeriodicTiling& t,
                           const std::optional<GeometricBasis>& geometry = {});

// Schedule documents: {"basis", "m", "slots": [{"coset_rep", "slot",
// "tile"}]} plus "dim" and "prototiles", which check-side consumers need to
// recover each coset's neighborhood shape.
std::string schedule_to_json(const Schedule& s);
Schedule parse_schedule_json(const std::string& text);
Schedule read_schedule_file(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace latt
