#include "latt/boundary.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace latt {

namespace {

char complement_letter(char c) {
  switch (c) {
    case 'u': return 'd';
    case 'd': return 'u';
    case 'l': return 'r';
    case 'r': return 'l';
  }
  throw Error(Err::BadLetter, std::string("bad boundary letter '") + c + "'");
}

Point step_of(char c) {
  switch (c) {
    case 'u': return Point{0, 1};
    case 'd': return Point{0, -1};
    case 'l': return Point{-1, 0};
    case 'r': return Point{1, 0};
  }
  throw Error(Err::BadLetter, std::string("bad boundary letter '") + c + "'");
}

}  // namespace

BoundaryWord make_boundary_word(std::string letters) {
  Int balance_ud = 0, balance_lr = 0;
  for (char c : letters) {
    Point s = step_of(c);  // validates the alphabet
    balance_lr += s[0];
    balance_ud += s[1];
  }
  if (letters.size() < 4 || letters.size() % 2 != 0)
    throw Error(Err::BadInput, "boundary word needs even length >= 4");
  if (balance_ud != 0 || balance_lr != 0)
    throw Error(Err::BadInput, "boundary word does not close");
  std::set<Point> seen;
  Point at{0, 0};
  for (char c : letters) {
    if (!seen.insert(at).second)
      throw Error(Err::BadInput, "boundary word revisits a vertex");
    at = point_add(at, step_of(c));
  }
  return BoundaryWord{std::move(letters)};
}

std::string reverse_complement(const std::string& w) {
  std::string out(w.size(), ' ');
  for (std::size_t i = 0; i < w.size(); ++i)
    out[w.size() - 1 - i] = complement_letter(w[i]);
  return out;
}

std::optional<BNFactorization> bn_exact(const BoundaryWord& w) {
  const int n = static_cast<int>(w.letters.size());
  const int half = n / 2;
  const std::string doubled = w.letters + w.letters;
  for (int rot = 0; rot < n; ++rot) {
    const std::string v = doubled.substr(rot, n);
    for (int a = 0; a <= half; ++a) {
      for (int b = 0; a + b <= half; ++b) {
        const int c = half - a - b;
        if ((a == 0) + (b == 0) + (c == 0) > 1) continue;
        const std::string x = v.substr(0, a);
        const std::string y = v.substr(a, b);
        const std::string z = v.substr(a + b, c);
        if (v.compare(half, a, reverse_complement(x)) != 0) continue;
        if (v.compare(half + a, b, reverse_complement(y)) != 0) continue;
        if (v.compare(half + a + b, c, reverse_complement(z)) != 0) continue;
        BNFactorization f;
        f.rotation = rot;
        f.lengths = {a, b, c};
        f.factors = {x, y, z, reverse_complement(x), reverse_complement(y),
                     reverse_complement(z)};
        f.empty_count = (a == 0) + (b == 0) + (c == 0);
        return f;
      }
    }
  }
  return std::nullopt;
}

BoundaryWord boundary_word(const std::vector<Point>& cells) {
  if (cells.empty()) throw Error(Err::Empty, "no cells");
  for (const Point& c : cells)
    if (c.size() != 2)
      throw Error(Err::UnsupportedDimension, "boundary words need d = 2");
  std::set<Point> s(cells.begin(), cells.end());

  // edge connectivity
  std::set<Point> visited;
  std::vector<Point> stack{*s.begin()};
  visited.insert(*s.begin());
  const std::array<Point, 4> dirs{Point{1, 0}, Point{-1, 0}, Point{0, 1},
                                  Point{0, -1}};
  while (!stack.empty()) {
    Point p = stack.back();
    stack.pop_back();
    for (const Point& d : dirs) {
      Point q = point_add(p, d);
      if (s.count(q) && visited.insert(q).second) stack.push_back(q);
    }
  }
  if (visited.size() != s.size())
    throw Error(Err::NotConnected, "cells are not edge-connected");

  // hole check: flood the complement from outside the bounding box
  Point lo = *s.begin(), hi = *s.begin();
  for (const Point& p : s)
    for (int i = 0; i < 2; ++i) {
      lo[i] = std::min(lo[i], p[i]);
      hi[i] = std::max(hi[i], p[i]);
    }
  Box frame = make_box(Point{checked_sub(lo[0], 1), checked_sub(lo[1], 1)},
                       Point{checked_add(hi[0], 1), checked_add(hi[1], 1)});
  std::set<Point> outside;
  stack.assign(1, frame.lo);
  outside.insert(frame.lo);
  while (!stack.empty()) {
    Point p = stack.back();
    stack.pop_back();
    for (const Point& d : dirs) {
      Point q = point_add(p, d);
      if (!box_contains(frame, q) || s.count(q)) continue;
      if (outside.insert(q).second) stack.push_back(q);
    }
  }
  const Int frame_area = checked_mul(checked_add(checked_sub(hi[0], lo[0]), 3),
                                     checked_add(checked_sub(hi[1], lo[1]), 3));
  if (static_cast<Int>(outside.size() + s.size()) != frame_area)
    throw Error(Err::HasHole, "cell union encloses a hole");

  // boundary edges: grid segments with exactly one incident cell inside
  std::map<Point, std::vector<Point>> incident;
  auto add_edge = [&incident](const Point& a, const Point& b) {
    incident[a].push_back(b);
    incident[b].push_back(a);
  };
  for (const Point& p : s) {
    if (!s.count(point_add(p, Point{0, -1})))
      add_edge(Point{p[0], p[1]}, Point{p[0] + 1, p[1]});
    if (!s.count(point_add(p, Point{0, 1})))
      add_edge(Point{p[0], p[1] + 1}, Point{p[0] + 1, p[1] + 1});
    if (!s.count(point_add(p, Point{-1, 0})))
      add_edge(Point{p[0], p[1]}, Point{p[0], p[1] + 1});
    if (!s.count(point_add(p, Point{1, 0})))
      add_edge(Point{p[0] + 1, p[1]}, Point{p[0] + 1, p[1] + 1});
  }
  for (const auto& [v, nb] : incident)
    if (nb.size() != 2)
      throw Error(Err::HasHole, "cell union pinches at " + format_point(v) +
                                    ", not homeomorphic to a disk");

  // counterclockwise walk, interior on the left, from the smallest vertex
  const Point start = incident.begin()->first;
  std::string letters;
  Point prev = start;
  Point cur = point_add(start, Point{1, 0});
  letters.push_back('r');
  while (cur != start) {
    const auto& nb = incident[cur];
    Point next = nb[0] == prev ? nb[1] : nb[0];
    Point d = point_sub(next, cur);
    letters.push_back(d[0] == 1 ? 'r' : d[0] == -1 ? 'l' : d[1] == 1 ? 'u' : 'd');
    prev = cur;
    cur = next;
  }
  return make_boundary_word(std::move(letters));
}

ExactnessVerdict exactness_verdict(const std::vector<Point>& cells) {
  ExactnessVerdict v;
  BoundaryWord w{""};
  try {
    w = boundary_word(cells);
  } catch (const Error& e) {
    if (e.kind == Err::Empty || e.kind == Err::NotConnected ||
        e.kind == Err::HasHole) {
      v.kind = ExactKind::NotPolyomino;
      v.reason = e.kind;
      return v;
    }
    throw;
  }
  v.factorization = bn_exact(w);
  v.kind = v.factorization ? ExactKind::Exact : ExactKind::NotExact;
  return v;
}

std::vector<std::vector<Point>> enumerate_fixed_polyominoes(int size) {
  if (size < 1 || size > 10)
    throw Error(Err::BadInput, "polyomino enumeration supports sizes 1..10");
  auto normalize = [](std::vector<Point> cells) {
    Int mx = cells.front()[0], my = cells.front()[1];
    for (const Point& p : cells) {
      mx = std::min(mx, p[0]);
      my = std::min(my, p[1]);
    }
    for (Point& p : cells) {
      p[0] -= mx;
      p[1] -= my;
    }
    std::sort(cells.begin(), cells.end());
    return cells;
  };
  std::set<std::vector<Point>> level{{Point{0, 0}}};
  const std::array<Point, 4> dirs{Point{1, 0}, Point{-1, 0}, Point{0, 1},
                                  Point{0, -1}};
  for (int k = 1; k < size; ++k) {
    std::set<std::vector<Point>> next;
    for (const auto& shape : level) {
      std::set<Point> have(shape.begin(), shape.end());
      for (const Point& p : shape) {
        for (const Point& d : dirs) {
          Point q = point_add(p, d);
          if (have.count(q)) continue;
          std::vector<Point> grown = shape;
          grown.push_back(q);
          next.insert(normalize(std::move(grown)));
        }
      }
    }
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

}  // namespace latt
