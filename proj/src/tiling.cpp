#include "latt/tiling.hpp"

#include <algorithm>

namespace latt {

namespace {

constexpr Int kTorusCap = 1'000'000;

void check_structure(const PeriodicTiling& t) {
  const std::size_t d = static_cast<std::size_t>(t.basis.dim());
  if (t.basis.index() > kTorusCap)
    throw Error(Err::TooLarge, "torus has more than 10^6 cosets");
  for (const Prototile& p : t.prototiles) require_dim(p.cells.front(), d);
  for (const Placement& pl : t.placements) {
    require_dim(pl.offset, d);
    if (pl.tile_index < 0 ||
        pl.tile_index >= static_cast<int>(t.prototiles.size()))
      throw Error(Err::BadTileIndex,
                  "placement references prototile " +
                      std::to_string(pl.tile_index) + " of " +
                      std::to_string(t.prototiles.size()));
  }
}

// Coverage multiplicity per coset; remembers the first covering placement.
struct Coverage {
  std::vector<int> count;
  std::vector<int> first;
};

Coverage cover_cosets(const PeriodicTiling& t,
                      std::vector<Violation>* violations) {
  Coverage cov;
  cov.count.assign(static_cast<std::size_t>(t.basis.index()), 0);
  cov.first.assign(cov.count.size(), -1);
  for (std::size_t i = 0; i < t.placements.size(); ++i) {
    const Placement& pl = t.placements[i];
    for (const Point& cell : t.prototiles[pl.tile_index].cells) {
      Int id = t.basis.coset_index(point_add(pl.offset, cell));
      if (cov.count[id] == 0) {
        cov.first[id] = static_cast<int>(i);
      } else if (violations) {
        violations->push_back(Violation{ViolationKind::Overlap,
                                        t.basis.rep_of_index(id),
                                        cov.first[id], static_cast<int>(i)});
      }
      ++cov.count[id];
    }
  }
  return cov;
}

}  // namespace

TilingReport verify_tiling(const PeriodicTiling& t) {
  check_structure(t);
  TilingReport report;
  report.index = t.basis.index();
  Coverage cov = cover_cosets(t, &report.violations);
  for (Int id = 0; id < report.index; ++id) {
    if (cov.count[id] == 0)
      report.violations.push_back(
          Violation{ViolationKind::Uncovered, t.basis.rep_of_index(id), -1, -1});
  }
  report.valid = report.violations.empty();
  return report;
}

std::optional<int> respectable_index(const std::vector<Prototile>& prototiles) {
  if (prototiles.empty())
    throw Error(Err::BadInput, "respectable_index needs at least one prototile");
  for (std::size_t i = 0; i < prototiles.size(); ++i) {
    const auto& big = prototiles[i].cells;
    bool all = true;
    for (const Prototile& other : prototiles) {
      if (!std::includes(big.begin(), big.end(), other.cells.begin(),
                         other.cells.end())) {
        all = false;
        break;
      }
    }
    if (all) return static_cast<int>(i);
  }
  return std::nullopt;
}

bool window_supports_optimality(const Box& window, const Prototile& n1) {
  require_dim(n1.cells.front(), window.lo.size());
  std::vector<Point> m = minkowski_sum(n1.cells, n1.cells);
  for (std::size_t axis = 0; axis < window.lo.size(); ++axis) {
    Int lo = m.front()[axis], hi = lo;
    for (const Point& p : m) {
      lo = std::min(lo, p[axis]);
      hi = std::max(hi, p[axis]);
    }
    if (checked_sub(hi, lo) > checked_sub(window.hi[axis], window.lo[axis]))
      return false;
  }
  return true;
}

std::vector<int> coset_deployment(const PeriodicTiling& t) {
  check_structure(t);
  Coverage cov = cover_cosets(t, nullptr);
  std::vector<int> deployment(cov.count.size(), -1);
  for (std::size_t id = 0; id < cov.count.size(); ++id) {
    if (cov.count[id] != 1)
      throw Error(Err::InvalidTiling,
                  "tiling does not cover every coset exactly once");
    deployment[id] = t.placements[cov.first[id]].tile_index;
  }
  return deployment;
}

}  // namespace latt
