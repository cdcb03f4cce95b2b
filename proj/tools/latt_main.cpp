#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "latt/boundary.hpp"
#include "latt/io.hpp"
#include "latt/oracle.hpp"
#include "latt/render.hpp"
#include "latt/sim.hpp"

namespace {

using namespace latt;

Int parse_int(const std::string& s) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(Err::BadInput, "bad integer: '" + s + "'");
  }
}

std::vector<Int> parse_int_list(const std::string& s) {
  std::vector<Int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_int(item));
  return out;
}

Box parse_window(const std::string& s, std::size_t d) {
  std::vector<Int> v = parse_int_list(s);
  if (v.size() != 2 * d)
    throw Error(Err::BadInput, "--window needs " + std::to_string(2 * d) +
                                   " comma-separated values (lo then hi)");
  Point lo(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(d));
  Point hi(v.begin() + static_cast<std::ptrdiff_t>(d), v.end());
  return make_box(lo, hi);
}

std::vector<Point> parse_points(const std::string& s) {
  std::vector<Point> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ';')) out.push_back(parse_int_list(item));
  return out;
}

// "a,b;c,d" -> generators as matrix columns
IntMat parse_basis(const std::string& s, std::size_t d) {
  std::vector<Point> gens = parse_points(s);
  if (gens.empty()) throw Error(Err::BadInput, "--basis is empty");
  IntMat m(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(gens.size()));
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (gens[j].size() != d)
      throw Error(Err::BadInput, "--basis generator has wrong dimension");
    for (std::size_t i = 0; i < d; ++i)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          gens[j][i];
  }
  return m;
}

std::string format_basis(const IntMat& m) {
  std::ostringstream os;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    if (j) os << ';';
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i) os << ',';
      os << m(i, j);
    }
  }
  return os.str();
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty())
    std::cout << text;
  else
    write_text_file(out, text);
}

// {"dim": d, "prototiles": [...]}; a full tiling document works too
std::pair<std::size_t, std::vector<Prototile>> read_prototiles(
    const std::string& path) {
  nlohmann::json doc =
      nlohmann::json::parse(read_text_file(path), nullptr, false);
  if (doc.is_discarded() || !doc.is_object() ||
      !doc.contains("dim") || !doc.contains("prototiles") ||
      !doc["dim"].is_number_integer() || !doc["prototiles"].is_array())
    throw Error(Err::BadInput, path + ": need \"dim\" and \"prototiles\"");
  std::size_t d = doc["dim"].get<std::size_t>();
  std::vector<Prototile> protos;
  for (const auto& tile : doc["prototiles"]) {
    if (!tile.is_array()) throw Error(Err::BadInput, "prototile must be an array");
    std::vector<Point> cells;
    for (const auto& cell : tile) {
      if (!cell.is_array() || cell.size() != d)
        throw Error(Err::BadInput, "cell has wrong dimension");
      Point p;
      for (const auto& x : cell) {
        if (!x.is_number_integer()) throw Error(Err::BadInput, "cell entries must be integers");
        p.push_back(x.get<Int>());
      }
      cells.push_back(std::move(p));
    }
    protos.push_back(make_prototile(std::move(cells),
                                    static_cast<int>(protos.size())));
  }
  if (protos.empty()) throw Error(Err::BadInput, "no prototiles given");
  return {d, std::move(protos)};
}

int cmd_verify(const std::string& path) {
  TilingFile tf = read_tiling_file(path);
  TilingReport rep = verify_tiling(tf.tiling);
  if (rep.valid) {
    std::cout << "valid, index=" << rep.index << "\n";
    return 0;
  }
  std::cout << "invalid, index=" << rep.index << "\n";
  for (const Violation& v : rep.violations) {
    if (v.kind == ViolationKind::Overlap)
      std::cout << "overlap at " << format_point(v.witness) << ": placements "
                << v.placement_a << " and " << v.placement_b << "\n";
    else
      std::cout << "uncovered coset " << format_point(v.witness) << "\n";
  }
  return 1;
}

int cmd_schedule(const std::string& path, const std::string& out) {
  TilingFile tf = read_tiling_file(path);
  Schedule s = build_schedule(tf.tiling);
  emit(schedule_to_json(s), out);
  if (!out.empty()) std::cout << "m=" << s.m << " -> " << out << "\n";
  return 0;
}

int cmd_check(const std::string& path, const std::string& window,
              bool opt_window) {
  Schedule s = read_schedule_file(path);
  Box w = parse_window(window, static_cast<std::size_t>(s.basis.dim()));
  if (opt_window) {
    Prototile all = make_prototile(s.slot_cells);
    std::cout << "optimality window: "
              << (window_supports_optimality(w, all) ? "supported"
                                                     : "not supported")
              << "\n";
  }
  CollisionReport rep = verify_collision_free(s, w);
  if (rep.collision_free) {
    std::cout << "collision-free, m=" << s.m << "\n";
    return 0;
  }
  for (const CollisionWitness& cw : rep.witnesses)
    std::cout << "slot " << cw.slot << ": " << format_point(cw.p) << " and "
              << format_point(cw.q) << " both affect "
              << format_point(cw.common) << "\n";
  return 1;
}

void print_factorization(const BNFactorization& f) {
  const char* names[6] = {"X", "Y", "Z", "X^", "Y^", "Z^"};
  std::cout << "exact:";
  for (int i = 0; i < 6; ++i)
    std::cout << " " << names[i] << "='" << f.factors[static_cast<std::size_t>(i)] << "'";
  std::cout << " rotation=" << f.rotation << "\n";
}

int cmd_exact(const std::string& word, const std::string& cells_str) {
  if (word.empty() == cells_str.empty())
    throw Error(Err::BadInput, "give exactly one of --word or --cells");
  if (!word.empty()) {
    BoundaryWord bw = make_boundary_word(word);
    if (auto f = bn_exact(bw)) {
      print_factorization(*f);
      return 0;
    }
    std::cout << "not exact\n";
    return 1;
  }
  ExactnessVerdict v = exactness_verdict(parse_points(cells_str));
  switch (v.kind) {
    case ExactKind::Exact:
      print_factorization(*v.factorization);
      return 0;
    case ExactKind::NotExact:
      std::cout << "not exact\n";
      return 1;
    case ExactKind::NotPolyomino:
      std::cout << "not a polyomino: " << err_name(v.reason) << "\n";
      return 1;
  }
  return 2;
}

int cmd_solve(const std::string& tiles_path, Int index,
              const std::string& basis_str, int limit) {
  auto [d, protos] = read_prototiles(tiles_path);
  if ((index > 0) == !basis_str.empty())
    throw Error(Err::BadInput, "give exactly one of --index or --basis");
  int found = 0;
  auto report = [&](const SublatticeBasis& b, const TilingSolution& sol) {
    std::cout << "basis=" << format_basis(b.hnf()) << " placements=";
    for (std::size_t i = 0; i < sol.placements.size(); ++i) {
      if (i) std::cout << " ";
      std::cout << sol.placements[i].tile_index << "@"
                << format_point(sol.placements[i].offset);
    }
    std::cout << "\n";
    ++found;
  };
  if (!basis_str.empty()) {
    SublatticeBasis b(parse_basis(basis_str, d));
    for (const TilingSolution& sol : find_tilings(protos, b, limit))
      report(b, sol);
  } else {
    for (const IntMat& m : enumerate_hnf_bases(static_cast<int>(d), index)) {
      int want = limit <= 0 ? 0 : limit - found;
      if (limit > 0 && want <= 0) break;
      SublatticeBasis b(m);
      for (const TilingSolution& sol : find_tilings(protos, b, want))
        report(b, sol);
    }
  }
  std::cout << "found " << found << "\n";
  return found > 0 ? 0 : 1;
}

int cmd_optimize(const std::string& path) {
  TilingFile tf = read_tiling_file(path);
  std::cout << min_uniform_schedule(tf.tiling) << "\n";
  return 0;
}

int cmd_simulate(const std::string& path, const std::string& window,
                 Int rounds, const std::string& mac, int m,
                 std::uint64_t mac_seed, const std::string& traffic, double p,
                 std::uint64_t traffic_seed, std::uint64_t seed,
                 const std::string& out) {
  TilingFile tf = read_tiling_file(path);
  SimConfig cfg{tf.tiling,
                parse_window(window, static_cast<std::size_t>(
                                         tf.tiling.basis.dim())),
                rounds,
                {},
                {},
                seed};
  if (mac == "tiling")
    cfg.mac.kind = MacKind::TilingTdma;
  else if (mac == "naive")
    cfg.mac.kind = MacKind::NaiveTdmaRoundRobin;
  else if (mac == "random")
    cfg.mac = {MacKind::RandomSlot, m, mac_seed};
  else
    throw Error(Err::BadInput, "--mac must be tiling|naive|random");
  if (traffic == "backlogged")
    cfg.traffic.kind = TrafficKind::AlwaysBacklogged;
  else if (traffic == "bernoulli")
    cfg.traffic = {TrafficKind::Bernoulli, p, traffic_seed};
  else
    throw Error(Err::BadInput, "--traffic must be backlogged|bernoulli");
  SimReport rep = run_sim(cfg);
  emit(sim_report_csv(rep), out);
  return rep.collision_free ? 0 : 1;
}

int cmd_render(const std::string& path, const std::string& window,
               bool with_schedule, const std::string& out) {
  TilingFile tf = read_tiling_file(path);
  Box w = parse_window(window,
                       static_cast<std::size_t>(tf.tiling.basis.dim()));
  std::optional<Schedule> s;
  if (with_schedule) s = build_schedule(tf.tiling);
  emit(render_svg(tf.tiling, s ? &*s : nullptr, w,
                  tf.geometry ? &*tf.geometry : nullptr),
       out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"periodic broadcast schedules from lattice tilings"};
  app.require_subcommand(1);

  std::string file, out, window, word, cells, basis, mac = "tiling",
                                                    traffic = "backlogged";
  Int rounds = 1, index = 0;
  int m = 0, limit = 1;
  std::uint64_t seed = 0, mac_seed = 0, traffic_seed = 0;
  double p = 1.0;
  bool opt_window = false, with_schedule = false;

  CLI::App* verify = app.add_subcommand("verify", "check a tiling file");
  verify->add_option("file", file)->required();

  CLI::App* schedule =
      app.add_subcommand("schedule", "build the slot assignment of a tiling");
  schedule->add_option("file", file)->required();
  schedule->add_option("--out", out);

  CLI::App* check =
      app.add_subcommand("check", "collision-check a schedule on a window");
  check->add_option("file", file)->required();
  check->add_option("--window", window)->required();
  check->add_flag("--optimality-window", opt_window,
                  "also report whether the window is wide enough for the "
                  "lower bound");

  CLI::App* exact =
      app.add_subcommand("exact", "decide tileability of a polyomino");
  exact->add_option("--word", word, "boundary word over udlr");
  exact->add_option("--cells", cells, "cells as x,y;x,y;...");

  CLI::App* solve =
      app.add_subcommand("solve", "search tilings for given prototiles");
  solve->add_option("file", file, "json with dim and prototiles")->required();
  solve->add_option("--index", index, "try every sublattice of this index");
  solve->add_option("--basis", basis, "fixed sublattice a,b;c,d");
  solve->add_option("--limit", limit, "stop after this many (0 = all)");

  CLI::App* optimize = app.add_subcommand(
      "optimize", "minimum uniform slot count of a tiling");
  optimize->add_option("file", file)->required();

  CLI::App* simulate =
      app.add_subcommand("simulate", "run the broadcast simulator");
  simulate->add_option("file", file)->required();
  simulate->add_option("--window", window)->required();
  simulate->add_option("--rounds", rounds)->required();
  simulate->add_option("--mac", mac, "tiling|naive|random");
  simulate->add_option("--m", m, "slot count for the random mac");
  simulate->add_option("--mac-seed", mac_seed);
  simulate->add_option("--traffic", traffic, "backlogged|bernoulli");
  simulate->add_option("--p", p, "bernoulli send probability");
  simulate->add_option("--traffic-seed", traffic_seed);
  simulate->add_option("--seed", seed);
  simulate->add_option("--out", out);

  CLI::App* render = app.add_subcommand("render", "draw a tiling as svg");
  render->add_option("file", file)->required();
  render->add_option("--window", window)->required();
  render->add_flag("--schedule", with_schedule, "label cells with slots");
  render->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(file);
    if (schedule->parsed()) return cmd_schedule(file, out);
    if (check->parsed()) return cmd_check(file, window, opt_window);
    if (exact->parsed()) return cmd_exact(word, cells);
    if (solve->parsed()) return cmd_solve(file, index, basis, limit);
    if (optimize->parsed()) return cmd_optimize(file);
    if (simulate->parsed())
      return cmd_simulate(file, window, rounds, mac, m, mac_seed, traffic, p,
                          traffic_seed, seed, out);
    if (render->parsed()) return cmd_render(file, window, with_schedule, out);
  } catch (const latt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind == latt::Err::InvalidTiling ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
