#pragma once

#include <optional>

#include "latt/lattice.hpp"

namespace latt {

// One coset family of translates: the tile prototiles[tile_index] placed at
// offset + lambda for every sublattice vector lambda.
struct Placement {
  Point offset;
  int tile_index = 0;
};

struct PeriodicTiling {
  SublatticeBasis basis;
  std::vector<Prototile> prototiles;
  std::vector<Placement> placements;
};

enum class ViolationKind { Uncovered, Overlap };

struct Violation {
  ViolationKind kind;
  Point witness;         // canonical representative of the offending coset
  int placement_a = -1;  // placements involved (Overlap only)
  int placement_b = -1;
};

struct TilingReport {
  bool valid = false;
  Int index = 0;
  std::vector<Violation> violations;
};

// Exact-cover check on the quotient torus: valid iff every coset is covered
// by exactly one cell of one placed translate. Exact for periodic tilings,
// no window boundary effects.
TilingReport verify_tiling(const PeriodicTiling& t);

// Index of a prototile containing every other prototile's cells, if any.
// Ties mean identical cell sets; the lowest index wins.
std::optional<int> respectable_index(const std::vector<Prototile>& prototiles);

// True iff some translate of n1 + n1 fits inside the window: the finite
// restriction under which the optimality lower bound survives windowing.
bool window_supports_optimality(const Box& window, const Prototile& n1);

// Prototile index governing each coset of a valid tiling (deployment rule:
// every sensor inside a placed tile inherits that tile's shape).
std::vector<int> coset_deployment(const PeriodicTiling& t);

}  // namespace latt
