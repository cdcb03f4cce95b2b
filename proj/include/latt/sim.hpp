#pragma once

#include <cstdint>

#include "latt/schedule.hpp"

namespace latt {

// splitmix64: tiny, seedable, stable across platforms and releases. <random>
// distributions are implementation-defined, which would break byte-identical
// regression reports.
struct SplitMix64 {
  std::uint64_t state = 0;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // uniform in [0, n) by rejection
  std::uint64_t bounded(std::uint64_t n) {
    std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % n;
    }
  }
};

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  SplitMix64 g(a ^ (0x9e3779b97f4a7c15ULL + (b << 1)));
  g.next();
  return g.next();
}

enum class MacKind { TilingTdma, NaiveTdmaRoundRobin, RandomSlot };

struct MacModel {
  MacKind kind = MacKind::TilingTdma;
  int m = 0;                // RandomSlot slot count
  std::uint64_t seed = 0;   // RandomSlot assignment stream
};

enum class TrafficKind { AlwaysBacklogged, Bernoulli };

struct TrafficModel {
  TrafficKind kind = TrafficKind::AlwaysBacklogged;
  double p = 1.0;           // Bernoulli send probability per round
  std::uint64_t seed = 0;
};

struct SimConfig {
  PeriodicTiling tiling;
  Box window;
  Int rounds = 1;
  MacModel mac;
  TrafficModel traffic;
  std::uint64_t seed = 0;
};

struct SimReport {
  Int rounds = 0;
  Int attempted = 0;               // transmissions
  Int delivered = 0;               // successful receptions
  Int collisions = 0;              // failed receptions (interference events)
  Int retransmissions_implied = 0; // transmissions with >= 1 failed reception
  bool collision_free = true;
  std::vector<Int> slot_histogram; // [k-1] = transmissions in slot k
};

// Synchronous rounds; only sensors whose whole neighborhood lies inside the
// window transmit (peripheral sensors listen only). A reception at c from a
// fails iff another simultaneous transmitter also covers c.
SimReport run_sim(const SimConfig& cfg);

// header metric,value; histogram packed into one slot_utilization row
std::string sim_report_csv(const SimReport& r);

}  // namespace latt
