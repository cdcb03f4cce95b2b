#include "latt/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace latt {

namespace {
// Torus-sized enumerations (fundamental domains, coverage maps) refuse to
// materialize beyond this many cosets.
constexpr Int kTorusCap = 1'000'000;
}  // namespace

const char* err_name(Err e) {
  switch (e) {
    case Err::SingularBasis: return "singular_basis";
    case Err::DimensionMismatch: return "dimension_mismatch";
    case Err::Overflow: return "overflow";
    case Err::TooLarge: return "too_large";
    case Err::InvalidTiling: return "invalid_tiling";
    case Err::BadTileIndex: return "bad_tile_index";
    case Err::NotConnected: return "not_connected";
    case Err::HasHole: return "has_hole";
    case Err::Empty: return "empty";
    case Err::BadLetter: return "bad_letter";
    case Err::BadConfig: return "bad_config";
    case Err::UnsupportedDimension: return "unsupported_dimension";
    case Err::BadInput: return "bad_input";
  }
  return "unknown";
}

Error::Error(Err kind, const std::string& what)
    : std::runtime_error(what), kind(kind) {}

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r))
    throw Error(Err::Overflow, "integer overflow in addition");
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r))
    throw Error(Err::Overflow, "integer overflow in subtraction");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r))
    throw Error(Err::Overflow, "integer overflow in multiplication");
  return r;
}

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

void require_dim(const Point& p, std::size_t d) {
  if (p.size() != d)
    throw Error(Err::DimensionMismatch,
                "point has dimension " + std::to_string(p.size()) +
                    ", expected " + std::to_string(d));
}

Point point_add(const Point& a, const Point& b) {
  require_dim(b, a.size());
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}

Point point_sub(const Point& a, const Point& b) {
  require_dim(b, a.size());
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(a[i], b[i]);
  return r;
}

Point point_neg(const Point& a) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(0, a[i]);
  return r;
}

Prototile make_prototile(std::vector<Point> cells, int id) {
  if (cells.empty()) throw Error(Err::Empty, "prototile has no cells");
  const std::size_t d = cells.front().size();
  if (d == 0) throw Error(Err::BadInput, "zero-dimensional prototile");
  for (const Point& c : cells) require_dim(c, d);
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  const Point origin(d, 0);
  if (!std::binary_search(cells.begin(), cells.end(), origin))
    throw Error(Err::BadInput, "prototile must contain the origin");
  return Prototile{std::move(cells), id};
}

bool prototile_contains(const Prototile& t, const Point& p) {
  return std::binary_search(t.cells.begin(), t.cells.end(), p);
}

GeometricBasis make_geometric_basis(Eigen::MatrixXd vectors) {
  if (vectors.rows() != vectors.cols() || vectors.rows() == 0)
    throw Error(Err::BadInput, "geometric basis must be square");
  if (std::abs(vectors.determinant()) <= 1e-9)
    throw Error(Err::SingularBasis, "geometric basis is singular");
  return GeometricBasis{std::move(vectors)};
}

SublatticeBasis::SublatticeBasis(IntMat generators) : gens_(std::move(generators)) {
  const int d = static_cast<int>(gens_.rows());
  if (d == 0 || gens_.cols() != d)
    throw Error(Err::BadInput, "basis matrix must be square and nonempty");

  // Column-style HNF by integer column operations (unimodular on the right),
  // same reduction as in classic lattice codes: gcd-chain the pivot row, fix
  // the pivot sign, then reduce the earlier columns modulo the pivot.
  IntMat m = gens_;
  for (int i = 0; i < d; ++i) {
    for (;;) {
      int piv = -1;
      for (int j = i; j < d; ++j) {
        if (m(i, j) == 0) continue;
        if (piv < 0 || std::llabs(m(i, j)) < std::llabs(m(i, piv))) piv = j;
      }
      if (piv < 0) throw Error(Err::SingularBasis, "basis matrix is singular");
      if (piv != i) m.col(i).swap(m.col(piv));
      bool clear = true;
      for (int j = i + 1; j < d; ++j) {
        if (m(i, j) == 0) continue;
        Int q = m(i, j) / m(i, i);  // truncated: Euclid step
        if (q != 0)
          for (int r = i; r < d; ++r)
            m(r, j) = checked_sub(m(r, j), checked_mul(q, m(r, i)));
        if (m(i, j) != 0) clear = false;
      }
      if (clear) break;
    }
    if (m(i, i) < 0)
      for (int r = i; r < d; ++r) m(r, i) = checked_sub(0, m(r, i));
    for (int j = 0; j < i; ++j) {
      Int q = floor_div(m(i, j), m(i, i));
      if (q != 0)
        for (int r = i; r < d; ++r)
          m(r, j) = checked_sub(m(r, j), checked_mul(q, m(r, i)));
    }
  }
  hnf_ = std::move(m);
  index_ = 1;
  for (int i = 0; i < d; ++i) index_ = checked_mul(index_, hnf_(i, i));
}

Point SublatticeBasis::coset_rep(const Point& p) const {
  const int d = dim();
  require_dim(p, static_cast<std::size_t>(d));
  Point v = p;
  for (int i = 0; i < d; ++i) {
    Int q = floor_div(v[i], hnf_(i, i));
    if (q != 0)
      for (int r = i; r < d; ++r)
        v[r] = checked_sub(v[r], checked_mul(q, hnf_(r, i)));
  }
  return v;
}

Int SublatticeBasis::coset_index(const Point& p) const {
  Point v = coset_rep(p);
  Int id = 0;
  for (int i = 0; i < dim(); ++i) id = id * hnf_(i, i) + v[i];
  return id;
}

Point SublatticeBasis::rep_of_index(Int id) const {
  if (id < 0 || id >= index_)
    throw Error(Err::BadInput, "coset id out of range");
  const int d = dim();
  Point v(d);
  for (int i = d - 1; i >= 0; --i) {
    v[i] = id % hnf_(i, i);
    id /= hnf_(i, i);
  }
  return v;
}

bool SublatticeBasis::contains(const Point& v) const {
  Point r = coset_rep(v);
  return std::all_of(r.begin(), r.end(), [](Int x) { return x == 0; });
}

SublatticeBasis hermite_normal_form(const SublatticeBasis& basis) {
  return SublatticeBasis(basis.hnf());
}

Int coset_index(const Point& p, const SublatticeBasis& basis) {
  return basis.coset_index(p);
}

std::vector<Point> fundamental_domain(const SublatticeBasis& basis) {
  if (basis.index() > kTorusCap)
    throw Error(Err::TooLarge, "fundamental domain has more than 10^6 points");
  std::vector<Point> reps;
  reps.reserve(static_cast<std::size_t>(basis.index()));
  for (Int id = 0; id < basis.index(); ++id) reps.push_back(basis.rep_of_index(id));
  return reps;
}

std::vector<Point> translate(const Prototile& tile, const Point& t) {
  require_dim(t, tile.cells.front().size());
  std::vector<Point> out;
  out.reserve(tile.cells.size());
  for (const Point& c : tile.cells) out.push_back(point_add(c, t));
  return out;  // adding a constant preserves lexicographic order
}

bool tiles_conflict(const Point& s, const Prototile& na, const Point& t,
                    const Prototile& nb) {
  std::vector<Point> left = translate(na, s);
  for (const Point& b : nb.cells) {
    Point q = point_add(t, b);
    if (std::binary_search(left.begin(), left.end(), q)) return true;
  }
  return false;
}

std::vector<Point> minkowski_sum(const std::vector<Point>& a,
                                 const std::vector<Point>& b) {
  std::vector<Point> out;
  out.reserve(a.size() * b.size());
  for (const Point& x : a) {
    for (const Point& y : b) out.push_back(point_add(x, y));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Box make_box(Point lo, Point hi) {
  require_dim(hi, lo.size());
  if (lo.empty()) throw Error(Err::BadInput, "empty window");
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (lo[i] > hi[i])
      throw Error(Err::BadInput, "window must satisfy min <= max per axis");
  return Box{std::move(lo), std::move(hi)};
}

std::vector<Point> box_points(const Box& box) {
  const std::size_t d = box.lo.size();
  Int count = 1;
  for (std::size_t i = 0; i < d; ++i) {
    Int extent = checked_add(checked_sub(box.hi[i], box.lo[i]), 1);
    count = checked_mul(count, extent);
    if (count > kTorusCap * 10)
      throw Error(Err::TooLarge, "window has more than 10^7 points");
  }
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(count));
  Point cur = box.lo;
  for (;;) {
    pts.push_back(cur);
    std::size_t i = d;
    while (i > 0) {
      --i;
      if (cur[i] < box.hi[i]) {
        ++cur[i];
        for (std::size_t j = i + 1; j < d; ++j) cur[j] = box.lo[j];
        break;
      }
      if (i == 0) return pts;
    }
  }
}

bool box_contains(const Box& box, const Point& p) {
  require_dim(p, box.lo.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] < box.lo[i] || p[i] > box.hi[i]) return false;
  return true;
}

std::string format_point(const Point& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) os << ',';
    os << p[i];
  }
  os << ')';
  return os.str();
}

}  // namespace latt
