#pragma once

#include "latt/tiling.hpp"

namespace latt {

// Periodic slot assignment plus the deployment map that records which
// neighborhood shape governs each coset. slot_cells holds the lexicographic
// union n_1 < ... < n_m of the placed prototiles' cells; the sensor at
// offset + n_k of any placed tile fires in slot k.
struct Schedule {
  SublatticeBasis basis;
  std::vector<Prototile> prototiles;
  int m = 0;
  std::vector<int> slot_of_coset;  // CosetId -> slot in [1, m]
  std::vector<int> deployment;     // CosetId -> prototile index
  std::vector<Point> slot_cells;
};

// Requires a valid tiling. Unplaced prototiles do not contribute cells;
// only shapes that actually occur in the tiling get slots.
Schedule build_schedule(const PeriodicTiling& t);

int slot_of(const Schedule& s, const Point& p);

// Slots are 1-based; time t fires slot ((t - 1) mod m) + 1.
bool may_transmit(const Schedule& s, const Point& p, Int time);

struct CollisionWitness {
  int slot = 0;
  Point p;
  Point q;
  Point common;  // a point affected by both transmitters
};

struct CollisionReport {
  bool collision_free = true;
  std::vector<CollisionWitness> witnesses;
};

// Exhaustive same-slot pair check over one period on a finite window.
CollisionReport verify_collision_free(const Schedule& s, const Box& window);

}  // namespace latt
