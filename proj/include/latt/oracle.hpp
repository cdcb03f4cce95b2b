#pragma once

#include "latt/schedule.hpp"

namespace latt {

// Simple undirected graph with lattice labels. Adjacency is kept as an edge
// list (a < b); algorithms build bitset adjacency internally.
struct ConflictGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<Point> reps;  // vertex -> representative point
  std::vector<int> tiles;   // vertex -> prototile index
};

// Torus conflict graph: one vertex per coset, edge {a,b} iff some sublattice
// shift brings the two deployed neighborhoods to intersect. Irreflexive by
// convention. deployment must be total (one prototile index per coset).
ConflictGraph build_conflict_graph(const std::vector<int>& deployment,
                                   const SublatticeBasis& basis,
                                   const std::vector<Prototile>& prototiles);

// Plain (non-periodic) conflict graph on the window's points, using each
// point's deployed neighborhood from the schedule.
ConflictGraph window_conflict_graph(const Schedule& s, const Box& window);

// Exact maximum clique / chromatic number, branch and bound, deterministic.
// Refuse graphs with more than `bound` vertices (default 64).
int max_clique(const ConflictGraph& g, int bound = 64);
int chromatic_number(const ConflictGraph& g, int bound = 64);

struct TilingSolution {
  std::vector<Placement> placements;
};

// Every canonical lower-triangular basis (columns are generators) of the
// given dimension and index; complete and duplicate-free, since each
// sublattice has exactly one such form.
std::vector<IntMat> enumerate_hnf_bases(int dim, Int index);

// Exact-cover backtracking over the torus cosets: always branches on the
// lowest uncovered coset, tries placements in (prototile, offset) order.
// limit <= 0 means all solutions.
std::vector<TilingSolution> find_tilings(const std::vector<Prototile>& prototiles,
                                         const SublatticeBasis& basis,
                                         int limit);

// Minimum m over uniform schedules: every translate of a prototile carries
// the same cell -> slot labels, labels of different prototiles independent.
// Equals the chromatic number of the class graph on (prototile, cell) pairs.
int min_uniform_schedule(const PeriodicTiling& t, int bound = 64);

}  // namespace latt
