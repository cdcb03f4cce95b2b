#include "latt/render.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <tuple>

namespace latt {

namespace {

struct Pt {
  double x = 0, y = 0;
};

// keep side a*x + b*y <= c
std::vector<Pt> clip_half(const std::vector<Pt>& poly, double a, double b,
                          double c) {
  std::vector<Pt> out;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Pt& p = poly[i];
    const Pt& q = poly[(i + 1) % n];
    double fp = a * p.x + b * p.y - c;
    double fq = a * q.x + b * q.y - c;
    bool inp = fp <= 1e-9, inq = fq <= 1e-9;
    if (inp) out.push_back(p);
    if (inp != inq) {
      double t = fp / (fp - fq);
      out.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
    }
  }
  return out;
}

std::string fnum(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  std::string s = buf;
  if (s == "-0.0000") s = "0.0000";
  return s;
}

const char* kPalette[] = {"#a6cee3", "#b2df8a", "#fdbf6f", "#cab2d6",
                          "#fb9a99", "#ffff99", "#80b1d3", "#fccde5",
                          "#ccebc5", "#e5d8bd"};

struct CellEdge {
  Int da = 0, db = 0;  // lattice step to the neighbor across this edge
  Pt u, w;
};

}  // namespace

std::string render_svg(const PeriodicTiling& t, const Schedule* sched,
                       const Box& window, const GeometricBasis* geom) {
  if (t.basis.dim() != 2)
    throw Error(Err::UnsupportedDimension, "rendering is 2-d only");
  if (window.lo.size() != 2)
    throw Error(Err::DimensionMismatch, "window dimension != tiling dimension");
  TilingReport rep = verify_tiling(t);
  if (!rep.valid) throw Error(Err::InvalidTiling, "rendering needs a valid tiling");

  double e00 = 1, e01 = 0, e10 = 0, e11 = 1;  // embedding columns
  if (geom) {
    if (geom->vectors.rows() != 2 || geom->vectors.cols() != 2)
      throw Error(Err::DimensionMismatch, "geometry must be 2x2");
    e00 = geom->vectors(0, 0);
    e10 = geom->vectors(1, 0);
    e01 = geom->vectors(0, 1);
    e11 = geom->vectors(1, 1);
  }
  auto embed = [&](double a, double b) {
    return Pt{e00 * a + e01 * b, e10 * a + e11 * b};
  };

  // Voronoi cell of the embedded lattice around the origin: clip a big square
  // by the bisector of every nearby lattice vector.
  double R = 0;
  R = std::max(R, std::hypot(e00, e10));
  R = std::max(R, std::hypot(e01, e11));
  R *= 4;
  std::vector<Pt> cell = {{-R, -R}, {R, -R}, {R, R}, {-R, R}};
  for (Int a = -2; a <= 2; ++a)
    for (Int b = -2; b <= 2; ++b) {
      if (a == 0 && b == 0) continue;
      Pt v = embed(static_cast<double>(a), static_cast<double>(b));
      double n2 = v.x * v.x + v.y * v.y;
      cell = clip_half(cell, v.x, v.y, n2 / 2);
    }
  {
    std::vector<Pt> dedup;
    for (const Pt& p : cell)
      if (dedup.empty() ||
          std::hypot(p.x - dedup.back().x, p.y - dedup.back().y) > 1e-9)
        dedup.push_back(p);
    while (dedup.size() > 1 &&
           std::hypot(dedup.front().x - dedup.back().x,
                      dedup.front().y - dedup.back().y) <= 1e-9)
      dedup.pop_back();
    cell = dedup;
  }

  // map each final edge back to the lattice step whose bisector carries it
  std::vector<CellEdge> edges;
  for (std::size_t i = 0; i < cell.size(); ++i) {
    const Pt& u = cell[i];
    const Pt& w = cell[(i + 1) % cell.size()];
    if (std::hypot(w.x - u.x, w.y - u.y) < 1e-9) continue;
    for (Int a = -2; a <= 2 && true; ++a) {
      bool found = false;
      for (Int b = -2; b <= 2; ++b) {
        if (a == 0 && b == 0) continue;
        Pt v = embed(static_cast<double>(a), static_cast<double>(b));
        double n2 = v.x * v.x + v.y * v.y;
        double fu = v.x * u.x + v.y * u.y - n2 / 2;
        double fw = v.x * w.x + v.y * w.y - n2 / 2;
        if (std::abs(fu) < 1e-7 * (1 + n2) && std::abs(fw) < 1e-7 * (1 + n2)) {
          edges.push_back({a, b, u, w});
          found = true;
          break;
        }
      }
      if (found) break;
    }
  }

  // coset -> covering (placement, cell), then instance id per window point
  const Int idx = t.basis.index();
  std::vector<std::pair<int, Point>> cover(static_cast<std::size_t>(idx));
  for (std::size_t pi = 0; pi < t.placements.size(); ++pi) {
    const Placement& pl = t.placements[pi];
    const Prototile& proto =
        t.prototiles[static_cast<std::size_t>(pl.tile_index)];
    for (const Point& c : proto.cells) {
      Point q = point_add(pl.offset, c);
      cover[static_cast<std::size_t>(t.basis.coset_index(q))] = {
          static_cast<int>(pi), c};
    }
  }
  auto instance = [&](const Point& p) {
    auto& [pi, c] = cover[static_cast<std::size_t>(t.basis.coset_index(p))];
    Point lam = point_sub(point_sub(p, t.placements[static_cast<std::size_t>(pi)].offset), c);
    return std::make_tuple(pi, lam[0], lam[1]);
  };
  auto tile_of = [&](const Point& p) {
    int pi = cover[static_cast<std::size_t>(t.basis.coset_index(p))].first;
    return t.placements[static_cast<std::size_t>(pi)].tile_index;
  };

  const std::vector<Point> pts = box_points(window);

  double minx = 1e300, miny = 1e300, maxx = -1e300, maxy = -1e300;
  for (const Point& p : pts) {
    Pt c = embed(static_cast<double>(p[0]), static_cast<double>(p[1]));
    minx = std::min(minx, c.x);
    maxx = std::max(maxx, c.x);
    miny = std::min(miny, c.y);
    maxy = std::max(maxy, c.y);
  }
  double margin = 0.2;
  for (const Pt& v : cell) margin = std::max({margin, std::abs(v.x), std::abs(v.y)});
  margin += 0.1;
  minx -= margin; maxx += margin; miny -= margin; maxy += margin;

  // svg y axis points down; emit (x, -y) so the lattice reads the usual way
  auto sx = [&](double x) { return fnum(x); };
  auto sy = [&](double y) { return fnum(-y); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
     << fnum(minx) << " " << fnum(-maxy) << " " << fnum(maxx - minx) << " "
     << fnum(maxy - miny) << "\">\n";

  for (const Point& p : pts) {
    Pt c = embed(static_cast<double>(p[0]), static_cast<double>(p[1]));
    int tile = tile_of(p);
    os << "<polygon points=\"";
    for (std::size_t i = 0; i < cell.size(); ++i) {
      if (i) os << " ";
      os << sx(c.x + cell[i].x) << "," << sy(c.y + cell[i].y);
    }
    os << "\" fill=\"" << kPalette[static_cast<std::size_t>(tile) % 10]
       << "\" stroke=\"#999999\" stroke-width=\"0.02\"/>\n";
  }

  auto lex_less = [](const Point& a, const Point& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  };
  auto in_window = [&](const Point& p) {
    return p[0] >= window.lo[0] && p[0] <= window.hi[0] &&
           p[1] >= window.lo[1] && p[1] <= window.hi[1];
  };
  for (const Point& p : pts) {
    Pt c = embed(static_cast<double>(p[0]), static_cast<double>(p[1]));
    auto mine = instance(p);
    for (const CellEdge& e : edges) {
      Point q = {checked_add(p[0], e.da), checked_add(p[1], e.db)};
      bool draw;
      if (!in_window(q))
        draw = true;
      else if (instance(q) != mine)
        draw = lex_less(p, q);  // shared edge drawn once
      else
        draw = false;
      if (!draw) continue;
      os << "<line x1=\"" << sx(c.x + e.u.x) << "\" y1=\"" << sy(c.y + e.u.y)
         << "\" x2=\"" << sx(c.x + e.w.x) << "\" y2=\"" << sy(c.y + e.w.y)
         << "\" stroke=\"#000000\" stroke-width=\"0.07\" stroke-linecap=\"round\"/>\n";
    }
  }

  if (sched) {
    for (const Point& p : pts) {
      Pt c = embed(static_cast<double>(p[0]), static_cast<double>(p[1]));
      os << "<text x=\"" << sx(c.x) << "\" y=\"" << sy(c.y)
         << "\" font-size=\"0.32\" font-family=\"sans-serif\" "
            "text-anchor=\"middle\" dominant-baseline=\"central\">"
         << slot_of(*sched, p) << "</text>\n";
    }
  }

  os << "</svg>\n";
  return os.str();
}

}  // namespace latt
