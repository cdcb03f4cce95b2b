#include "latt/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace latt {

namespace {

constexpr int kGraphCap = 1024;  // vertex cap for graph construction
constexpr Int kCoverCap = 64;    // coset cap for exact-cover search

using Word = std::uint64_t;

struct Bits {
  std::vector<Word> w;
  explicit Bits(std::size_t n) : w((n + 63) / 64, 0) {}
  void set(std::size_t i) { w[i >> 6] |= Word(1) << (i & 63); }
  bool intersects(const Bits& o) const {
    for (std::size_t k = 0; k < w.size(); ++k)
      if (w[k] & o.w[k]) return true;
    return false;
  }
};

std::vector<Word> adjacency_masks(const ConflictGraph& g) {
  std::vector<Word> adj(static_cast<std::size_t>(g.n), 0);
  for (auto [a, b] : g.edges) {
    adj[a] |= Word(1) << b;
    adj[b] |= Word(1) << a;
  }
  return adj;
}

// Tomita-style maximum clique: candidates are greedily colored, processed in
// reverse color order, pruned by size + color.
int max_clique_masks(const std::vector<Word>& adj) {
  const int n = static_cast<int>(adj.size());
  if (n == 0) return 0;
  int best = 0;
  std::function<void(Word, int)> expand = [&](Word cand, int size) {
    if (!cand) {
      best = std::max(best, size);
      return;
    }
    std::vector<int> order, bound;
    Word rest = cand;
    int color = 0;
    while (rest) {
      ++color;
      Word avail = rest;
      while (avail) {
        int v = std::countr_zero(avail);
        Word bit = Word(1) << v;
        avail &= ~(adj[v] | bit);
        rest &= ~bit;
        order.push_back(v);
        bound.push_back(color);
      }
    }
    Word processed = 0;
    for (const int v : order) processed |= Word(1) << v;
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (size + bound[i] <= best) return;
      Word bit = Word(1) << order[i];
      processed &= ~bit;
      expand(processed & adj[order[i]], size + 1);
    }
  };
  expand(n == 64 ? ~Word(0) : (Word(1) << n) - 1, 0);
  return best;
}

struct Dsatur {
  const std::vector<Word>& adj;
  std::vector<int> colors;
  std::vector<int> degree;

  explicit Dsatur(const std::vector<Word>& a)
      : adj(a), colors(a.size(), 0), degree(a.size()) {
    for (std::size_t v = 0; v < a.size(); ++v)
      degree[v] = std::popcount(a[v]);
  }

  int pick() const {
    int best = -1, best_sat = -1;
    for (std::size_t v = 0; v < colors.size(); ++v) {
      if (colors[v]) continue;
      Word seen = 0;
      Word nb = adj[v];
      while (nb) {
        int u = std::countr_zero(nb);
        nb &= nb - 1;
        if (colors[u]) seen |= Word(1) << (colors[u] - 1);
      }
      int sat = std::popcount(seen);
      if (sat > best_sat ||
          (sat == best_sat && best >= 0 && degree[v] > degree[best])) {
        best = static_cast<int>(v);
        best_sat = sat;
      }
    }
    return best;
  }

  bool allowed(int v, int c) const {
    Word nb = adj[v];
    while (nb) {
      int u = std::countr_zero(nb);
      nb &= nb - 1;
      if (colors[u] == c) return false;
    }
    return true;
  }

  int greedy() {
    int used = 0;
    for (;;) {
      int v = pick();
      if (v < 0) return used;
      int c = 1;
      while (!allowed(v, c)) ++c;
      colors[v] = c;
      used = std::max(used, c);
    }
  }

  bool feasible(int k, int used) {
    int v = pick();
    if (v < 0) return true;
    int limit = std::min(k, used + 1);
    for (int c = 1; c <= limit; ++c) {
      if (!allowed(v, c)) continue;
      colors[v] = c;
      if (feasible(k, std::max(used, c))) return true;
      colors[v] = 0;
    }
    return false;
  }
};

}  // namespace

ConflictGraph build_conflict_graph(const std::vector<int>& deployment,
                                   const SublatticeBasis& basis,
                                   const std::vector<Prototile>& prototiles) {
  const Int n = basis.index();
  if (n > kGraphCap)
    throw Error(Err::TooLarge, "conflict graph capped at 1024 cosets");
  if (static_cast<Int>(deployment.size()) != n)
    throw Error(Err::BadInput, "deployment map must assign every coset");
  for (int j : deployment)
    if (j < 0 || j >= static_cast<int>(prototiles.size()))
      throw Error(Err::BadTileIndex, "deployment references missing prototile");

  ConflictGraph g;
  g.n = static_cast<int>(n);
  g.reps = fundamental_domain(basis);
  g.tiles = deployment;
  std::vector<Bits> affected;
  affected.reserve(static_cast<std::size_t>(n));
  for (Int id = 0; id < n; ++id) {
    Bits b(static_cast<std::size_t>(n));
    for (const Point& cell : prototiles[deployment[id]].cells)
      b.set(static_cast<std::size_t>(
          basis.coset_index(point_add(g.reps[id], cell))));
    affected.push_back(std::move(b));
  }
  for (int a = 0; a < g.n; ++a)
    for (int b = a + 1; b < g.n; ++b)
      if (affected[a].intersects(affected[b])) g.edges.emplace_back(a, b);
  return g;
}

ConflictGraph window_conflict_graph(const Schedule& s, const Box& window) {
  require_dim(window.lo, static_cast<std::size_t>(s.basis.dim()));
  ConflictGraph g;
  g.reps = box_points(window);
  g.n = static_cast<int>(g.reps.size());
  if (g.n > kGraphCap)
    throw Error(Err::TooLarge, "conflict graph capped at 1024 points");
  g.tiles.reserve(g.reps.size());
  for (const Point& p : g.reps) {
    int ti = s.deployment[static_cast<std::size_t>(s.basis.coset_index(p))];
    if (ti < 0 || ti >= static_cast<int>(s.prototiles.size()))
      throw Error(Err::BadTileIndex, "schedule deployment is not total");
    g.tiles.push_back(ti);
  }
  for (int a = 0; a < g.n; ++a)
    for (int b = a + 1; b < g.n; ++b)
      if (tiles_conflict(g.reps[a], s.prototiles[g.tiles[a]], g.reps[b],
                         s.prototiles[g.tiles[b]]))
        g.edges.emplace_back(a, b);
  return g;
}

int max_clique(const ConflictGraph& g, int bound) {
  if (g.n > bound || g.n > 64)
    throw Error(Err::TooLarge, "clique search capped at 64 vertices");
  return max_clique_masks(adjacency_masks(g));
}

int chromatic_number(const ConflictGraph& g, int bound) {
  if (g.n > bound || g.n > 64)
    throw Error(Err::TooLarge, "chromatic search capped at 64 vertices");
  if (g.n == 0) return 0;
  std::vector<Word> adj = adjacency_masks(g);
  const int lower = max_clique_masks(adj);
  Dsatur greedy(adj);
  const int upper = greedy.greedy();
  if (lower == upper) return lower;
  for (int k = lower; k < upper; ++k) {
    Dsatur search(adj);
    if (search.feasible(k, 0)) return k;
  }
  return upper;
}

std::vector<IntMat> enumerate_hnf_bases(int dim, Int index) {
  if (dim < 1 || index < 1)
    throw Error(Err::BadInput, "need dim >= 1 and index >= 1");
  std::vector<IntMat> out;
  IntMat h = IntMat::Zero(dim, dim);

  std::function<void(int, int)> fill_row = [&](int i, int j) {
    if (i == dim) {
      out.push_back(h);
      return;
    }
    if (j == i) {
      fill_row(i + 1, 0);
      return;
    }
    for (Int v = 0; v < h(i, i); ++v) {
      h(i, j) = v;
      fill_row(i, j + 1);
    }
    h(i, j) = 0;
  };
  std::function<void(int, Int)> pick_diag = [&](int i, Int rem) {
    if (i == dim) {
      if (rem == 1) fill_row(1, 0);
      return;
    }
    for (Int d = 1; d <= rem; ++d) {
      if (rem % d) continue;
      h(i, i) = d;
      pick_diag(i + 1, rem / d);
    }
  };
  pick_diag(0, index);
  return out;
}

std::vector<TilingSolution> find_tilings(
    const std::vector<Prototile>& prototiles, const SublatticeBasis& basis,
    int limit) {
  const Int n = basis.index();
  if (n > kCoverCap)
    throw Error(Err::TooLarge, "exact cover capped at 64 cosets");
  const std::size_t d = static_cast<std::size_t>(basis.dim());
  for (const Prototile& p : prototiles) require_dim(p.cells.front(), d);

  // counting precondition: some multiset of tile sizes must reach the index
  std::vector<char> reachable(static_cast<std::size_t>(n) + 1, 0);
  reachable[0] = 1;
  for (Int s = 1; s <= n; ++s)
    for (const Prototile& p : prototiles) {
      Int sz = static_cast<Int>(p.cells.size());
      if (sz <= s && reachable[s - sz]) {
        reachable[s] = 1;
        break;
      }
    }
  if (!reachable[n]) return {};

  struct Option {
    int tile;
    Int offset_id;
    Word cov;
  };
  std::vector<Option> options;
  const Word full = n == 64 ? ~Word(0) : (Word(1) << n) - 1;
  for (std::size_t j = 0; j < prototiles.size(); ++j) {
    for (Int off = 0; off < n; ++off) {
      Point rep = basis.rep_of_index(off);
      Word cov = 0;
      for (const Point& cell : prototiles[j].cells)
        cov |= Word(1) << basis.coset_index(point_add(rep, cell));
      if (std::popcount(cov) == static_cast<int>(prototiles[j].cells.size()))
        options.push_back(Option{static_cast<int>(j), off, cov});
    }
  }
  std::vector<std::vector<int>> by_coset(static_cast<std::size_t>(n));
  for (std::size_t oi = 0; oi < options.size(); ++oi) {
    Word cov = options[oi].cov;
    while (cov) {
      by_coset[std::countr_zero(cov)].push_back(static_cast<int>(oi));
      cov &= cov - 1;
    }
  }

  std::vector<TilingSolution> solutions;
  std::vector<int> chosen;
  std::function<void(Word)> search = [&](Word covered) {
    if (limit > 0 && static_cast<int>(solutions.size()) >= limit) return;
    if (covered == full) {
      TilingSolution sol;
      for (int oi : chosen)
        sol.placements.push_back(Placement{
            basis.rep_of_index(options[oi].offset_id), options[oi].tile});
      solutions.push_back(std::move(sol));
      return;
    }
    int c = std::countr_zero(~covered & full);
    for (int oi : by_coset[c]) {
      if (options[oi].cov & covered) continue;
      chosen.push_back(oi);
      search(covered | options[oi].cov);
      chosen.pop_back();
      if (limit > 0 && static_cast<int>(solutions.size()) >= limit) return;
    }
  };
  search(0);
  return solutions;
}

int min_uniform_schedule(const PeriodicTiling& t, int bound) {
  TilingReport report = verify_tiling(t);
  if (!report.valid)
    throw Error(Err::InvalidTiling, "uniform schedule needs a valid tiling");
  const Int n = t.basis.index();
  if (n > kGraphCap)
    throw Error(Err::TooLarge, "uniform schedule search capped at 1024 cosets");

  ConflictGraph h;
  std::vector<int> vert_tile;
  std::vector<Point> vert_cell;
  for (std::size_t j = 0; j < t.prototiles.size(); ++j)
    for (const Point& cell : t.prototiles[j].cells) {
      vert_tile.push_back(static_cast<int>(j));
      vert_cell.push_back(cell);
    }
  h.n = static_cast<int>(vert_tile.size());
  if (h.n > bound)
    throw Error(Err::TooLarge, "label space exceeds the search bound");
  h.reps = vert_cell;
  h.tiles = vert_tile;

  // affected coset sets of cell n of every translate family of prototile j
  std::vector<std::vector<Bits>> affected(vert_tile.size());
  for (const Placement& pl : t.placements) {
    for (std::size_t v = 0; v < vert_tile.size(); ++v) {
      if (vert_tile[v] != pl.tile_index) continue;
      Bits b(static_cast<std::size_t>(n));
      Point base = point_add(pl.offset, vert_cell[v]);
      for (const Point& a : t.prototiles[pl.tile_index].cells)
        b.set(static_cast<std::size_t>(t.basis.coset_index(point_add(base, a))));
      affected[v].push_back(std::move(b));
    }
  }
  for (int a = 0; a < h.n; ++a) {
    for (int b = a + 1; b < h.n; ++b) {
      bool hit = false;
      for (const Bits& ba : affected[a]) {
        for (const Bits& bb : affected[b]) {
          if (ba.intersects(bb)) {
            hit = true;
            break;
          }
        }
        if (hit) break;
      }
      if (hit) h.edges.emplace_back(a, b);
    }
  }
  return chromatic_number(h, bound);
}

}  // namespace latt
