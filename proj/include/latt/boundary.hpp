#pragma once

#include <array>
#include <optional>
#include <string>

#include "latt/lattice.hpp"

namespace latt {

// Closed simple cycle over the letters u, d, l, r (unit steps on the grid).
struct BoundaryWord {
  std::string letters;
};

// Validates alphabet, closure (#u = #d, #l = #r), even length >= 4, and that
// the traced path revisits no vertex.
BoundaryWord make_boundary_word(std::string letters);

// Reverses the sequence and swaps u<->d, l<->r: the same path walked
// backwards. Involutive.
std::string reverse_complement(const std::string& w);

// Pseudo-hexagon factorization X Y Z X^ Y^ Z^ of a cyclic rotation of the
// boundary word, hatted factors being reverse complements; at most one of
// X, Y, Z is empty (pseudo-square when exactly one is).
struct BNFactorization {
  int rotation = 0;                    // offset the factorization starts at
  std::array<int, 3> lengths{};        // |X|, |Y|, |Z|
  std::array<std::string, 6> factors;  // X, Y, Z, X^, Y^, Z^
  int empty_count = 0;
};

std::optional<BNFactorization> bn_exact(const BoundaryWord& w);

// Counterclockwise boundary of a simply connected polyomino, starting at the
// lexicographically smallest boundary vertex (interior kept on the left, so
// the first letter is always r). Length equals the perimeter.
BoundaryWord boundary_word(const std::vector<Point>& cells);

enum class ExactKind { Exact, NotExact, NotPolyomino };

struct ExactnessVerdict {
  ExactKind kind = ExactKind::NotExact;
  std::optional<BNFactorization> factorization;  // present iff Exact
  Err reason = Err::BadInput;                    // meaningful iff NotPolyomino
};

// Tiles-the-plane-by-translation decision for cell sets in Z^2.
// Connectivity and hole failures land in the NotPolyomino verdict.
ExactnessVerdict exactness_verdict(const std::vector<Point>& cells);

// All fixed polyominoes (translation classes) of the given cell count,
// anchored at the bounding-box corner, in lexicographic order.
// Sizes 1..6 have counts 1, 2, 6, 19, 63, 216.
std::vector<std::vector<Point>> enumerate_fixed_polyominoes(int size);

}  // namespace latt
