#include "latt/sim.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "latt/tiling.hpp"

namespace latt {

namespace {

constexpr Int kMaxPeriod = 1'000'000;

struct Sensor {
  bool eligible = false;
  int slot = 0;                    // 1-based; 0 when never transmitting
  std::vector<std::size_t> affected;  // window indices of own neighborhood
  std::size_t self = 0;
};

}  // namespace

SimReport run_sim(const SimConfig& cfg) {
  const std::size_t d = cfg.tiling.basis.dim();
  if (cfg.window.lo.size() != d)
    throw Error(Err::DimensionMismatch, "window dimension != tiling dimension");
  if (cfg.rounds < 1) throw Error(Err::BadConfig, "rounds must be >= 1");
  if (cfg.traffic.kind == TrafficKind::Bernoulli &&
      !(cfg.traffic.p >= 0.0 && cfg.traffic.p <= 1.0))
    throw Error(Err::BadConfig, "bernoulli p must be in [0,1]");
  if (cfg.mac.kind == MacKind::RandomSlot && cfg.mac.m < 1)
    throw Error(Err::BadConfig, "random mac needs m >= 1");

  TilingReport rep = verify_tiling(cfg.tiling);
  if (!rep.valid)
    throw Error(Err::InvalidTiling, "simulation requires a valid tiling");
  Schedule sched = build_schedule(cfg.tiling);

  const std::vector<Point> sensors = box_points(cfg.window);
  const std::size_t n = sensors.size();

  // mixed-radix index within the window, for O(1) coverage counting
  std::vector<Int> extent(d), stride(d);
  for (std::size_t i = 0; i < d; ++i)
    extent[i] = checked_add(checked_sub(cfg.window.hi[i], cfg.window.lo[i]),
                            Int{1});
  Int acc = 1;
  for (std::size_t i = d; i-- > 0;) {
    stride[i] = acc;
    acc = checked_mul(acc, extent[i]);
  }
  auto window_index = [&](const Point& p) {
    Int id = 0;
    for (std::size_t i = 0; i < d; ++i)
      id = checked_add(id, checked_mul(p[i] - cfg.window.lo[i], stride[i]));
    return static_cast<std::size_t>(id);
  };
  auto inside = [&](const Point& p) {
    for (std::size_t i = 0; i < d; ++i)
      if (p[i] < cfg.window.lo[i] || p[i] > cfg.window.hi[i]) return false;
    return true;
  };

  Int period = 0;
  switch (cfg.mac.kind) {
    case MacKind::TilingTdma: period = sched.m; break;
    case MacKind::NaiveTdmaRoundRobin: period = static_cast<Int>(n); break;
    case MacKind::RandomSlot: period = cfg.mac.m; break;
  }
  if (period < 1) throw Error(Err::BadConfig, "empty window");
  if (period > kMaxPeriod) throw Error(Err::TooLarge, "schedule period too large");

  // One assignment stream for the random MAC, consumed in sensor lex order.
  SplitMix64 rand_assign(mix_seed(mix_seed(cfg.seed, cfg.mac.seed),
                                  0x52414e44ULL));

  std::vector<Sensor> ss(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point& p = sensors[i];
    Sensor& s = ss[i];
    s.self = window_index(p);
    int tile = sched.deployment[static_cast<std::size_t>(
        sched.basis.coset_index(p))];
    const Prototile& proto = sched.prototiles[static_cast<std::size_t>(tile)];
    s.eligible = true;
    for (const Point& c : proto.cells) {
      Point q = point_add(p, c);
      if (!inside(q)) { s.eligible = false; break; }
    }
    if (s.eligible)
      for (const Point& c : proto.cells)
        s.affected.push_back(window_index(point_add(p, c)));
    switch (cfg.mac.kind) {
      case MacKind::TilingTdma:
        s.slot = slot_of(sched, p);
        break;
      case MacKind::NaiveTdmaRoundRobin:
        s.slot = static_cast<int>(i) + 1;  // every window sensor owns a slot
        break;
      case MacKind::RandomSlot:
        s.slot = static_cast<int>(rand_assign.bounded(
                     static_cast<std::uint64_t>(cfg.mac.m))) + 1;
        break;
    }
  }

  // Bernoulli traffic: one independent stream per sensor, one draw per round
  // whether or not the sensor is eligible, so results are insensitive to
  // iteration details.
  const bool bern = cfg.traffic.kind == TrafficKind::Bernoulli;
  std::vector<SplitMix64> traffic_rng;
  std::uint64_t threshold = 0;
  bool always = true, never = false;
  if (bern) {
    std::uint64_t base = mix_seed(mix_seed(cfg.seed, cfg.traffic.seed),
                                  0x54524146ULL);
    traffic_rng.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
      traffic_rng.emplace_back(mix_seed(base, static_cast<std::uint64_t>(i)));
    if (cfg.traffic.p >= 1.0) { always = true; never = false; }
    else if (cfg.traffic.p <= 0.0) { always = false; never = true; }
    else {
      always = never = false;
      threshold = static_cast<std::uint64_t>(
          std::ldexp(cfg.traffic.p, 64));
    }
  }

  SimReport out;
  out.rounds = cfg.rounds;
  out.slot_histogram.assign(static_cast<std::size_t>(period), 0);

  std::vector<int> counts(static_cast<std::size_t>(acc), 0);
  std::vector<std::size_t> touched;
  std::vector<std::size_t> txs;
  std::vector<char> pending(n, 1);

  for (Int t = 1; t <= cfg.rounds; ++t) {
    if (bern) {
      for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t r = traffic_rng[i].next();
        pending[i] = always ? 1 : (never ? 0 : (r < threshold ? 1 : 0));
      }
    }
    int cur = static_cast<int>((t - 1) % period) + 1;
    txs.clear();
    for (std::size_t i = 0; i < n; ++i)
      if (ss[i].eligible && ss[i].slot == cur && pending[i]) txs.push_back(i);
    if (txs.empty()) continue;

    for (std::size_t i : txs)
      for (std::size_t w : ss[i].affected) {
        if (counts[w]++ == 0) touched.push_back(w);
      }

    out.attempted += static_cast<Int>(txs.size());
    out.slot_histogram[static_cast<std::size_t>(cur - 1)] +=
        static_cast<Int>(txs.size());

    for (std::size_t i : txs) {
      Int fails = 0;
      for (std::size_t w : ss[i].affected) {
        if (w == ss[i].self) continue;
        if (counts[w] >= 2) ++fails;
        else ++out.delivered;
      }
      out.collisions += fails;
      if (fails > 0) ++out.retransmissions_implied;
    }

    for (std::size_t w : touched) counts[w] = 0;
    touched.clear();
  }

  out.collision_free = out.collisions == 0;
  return out;
}

std::string sim_report_csv(const SimReport& r) {
  std::ostringstream os;
  os << "metric,value\n";
  os << "rounds," << r.rounds << "\n";
  os << "transmissions_attempted," << r.attempted << "\n";
  os << "messages_delivered," << r.delivered << "\n";
  os << "collisions," << r.collisions << "\n";
  os << "retransmissions_implied," << r.retransmissions_implied << "\n";
  os << "collision_free," << (r.collision_free ? "true" : "false") << "\n";
  os << "slot_utilization,";
  for (std::size_t k = 0; k < r.slot_histogram.size(); ++k) {
    if (k) os << "|";
    os << (k + 1) << ":" << r.slot_histogram[k];
  }
  os << "\n";
  return os.str();
}

}  // namespace latt
