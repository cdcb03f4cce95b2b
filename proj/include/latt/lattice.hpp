#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace latt {

using Int = std::int64_t;

// Lattice point in integer coordinates. Kept as a plain vector so points
// order lexicographically and work as set/map keys out of the box.
using Point = std::vector<Int>;

using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

enum class Err {
  SingularBasis,
  DimensionMismatch,
  Overflow,
  TooLarge,
  InvalidTiling,
  BadTileIndex,
  NotConnected,
  HasHole,
  Empty,
  BadLetter,
  BadConfig,
  UnsupportedDimension,
  BadInput,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
 public:
  Err kind;
  Error(Err kind, const std::string& what);
};

// Checked arithmetic: overflow is a hard error, never wraparound.
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);
Int floor_div(Int a, Int b);

Point point_add(const Point& a, const Point& b);
Point point_sub(const Point& a, const Point& b);
Point point_neg(const Point& a);

void require_dim(const Point& p, std::size_t d);

// Interference neighborhood: finite cell set containing the origin,
// stored sorted and deduplicated.
struct Prototile {
  std::vector<Point> cells;
  int id = 0;
};

Prototile make_prototile(std::vector<Point> cells, int id = 0);
bool prototile_contains(const Prototile& t, const Point& p);

// Render-time embedding of lattice coordinates into the plane (or R^d).
// Purely cosmetic; all combinatorics stay in integer coordinates.
struct GeometricBasis {
  Eigen::MatrixXd vectors;  // columns are the embedded generators
};

GeometricBasis make_geometric_basis(Eigen::MatrixXd vectors);

// Translation sublattice of Z^d given by generator columns. Construction
// computes the column-style Hermite normal form (lower triangular, positive
// diagonal, below-diagonal entries reduced modulo the row's pivot), which is
// the canonical basis used for coset indexing.
class SublatticeBasis {
 public:
  explicit SublatticeBasis(IntMat generators);

  int dim() const { return static_cast<int>(gens_.rows()); }
  Int index() const { return index_; }
  const IntMat& generators() const { return gens_; }
  const IntMat& hnf() const { return hnf_; }

  // Canonical representative of p's coset (entry i lies in [0, hnf(i,i))).
  Point coset_rep(const Point& p) const;
  Int coset_index(const Point& p) const;
  Point rep_of_index(Int id) const;
  bool contains(const Point& v) const;  // v in the sublattice

 private:
  IntMat gens_;
  IntMat hnf_;
  Int index_;
};

SublatticeBasis hermite_normal_form(const SublatticeBasis& basis);
Int coset_index(const Point& p, const SublatticeBasis& basis);
std::vector<Point> fundamental_domain(const SublatticeBasis& basis);

std::vector<Point> translate(const Prototile& tile, const Point& t);
bool tiles_conflict(const Point& s, const Prototile& na, const Point& t,
                    const Prototile& nb);
std::vector<Point> minkowski_sum(const std::vector<Point>& a,
                                 const std::vector<Point>& b);

// Axis-aligned integer box, inclusive on both ends.
struct Box {
  Point lo;
  Point hi;
};

Box make_box(Point lo, Point hi);
std::vector<Point> box_points(const Box& box);  // lexicographic order
bool box_contains(const Box& box, const Point& p);

std::string format_point(const Point& p);

}  // namespace latt
