#include "latt/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace latt {

namespace {

using nlohmann::json;

json point_to_json(const Point& p) {
  json a = json::array();
  for (Int x : p) a.push_back(x);
  return a;
}

Point point_from_json(const json& a) {
  if (!a.is_array() || a.empty())
    throw Error(Err::BadInput, "expected a coordinate array");
  Point p;
  for (const json& x : a) {
    if (!x.is_number_integer())
      throw Error(Err::BadInput, "coordinates must be integers");
    p.push_back(x.get<Int>());
  }
  return p;
}

json generators_to_json(const IntMat& m) {
  json rows = json::array();
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    json row = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

IntMat generators_from_json(const json& rows, const char* what) {
  if (!rows.is_array() || rows.empty())
    throw Error(Err::BadInput, std::string(what) + " must be a list of generators");
  const auto d = rows.size();
  IntMat m(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    Point gen = point_from_json(rows[j]);
    if (gen.size() != d)
      throw Error(Err::BadInput, std::string(what) + " must be square");
    for (std::size_t i = 0; i < d; ++i) m(i, j) = gen[i];
  }
  return m;
}

json prototiles_to_json(const std::vector<Prototile>& ts) {
  json list = json::array();
  for (const Prototile& t : ts) {
    json cells = json::array();
    for (const Point& c : t.cells) cells.push_back(point_to_json(c));
    list.push_back(cells);
  }
  return list;
}

std::vector<Prototile> prototiles_from_json(const json& list, std::size_t d) {
  if (!list.is_array() || list.empty())
    throw Error(Err::BadInput, "\"prototiles\" must be a nonempty list");
  std::vector<Prototile> out;
  for (const json& cells_json : list) {
    if (!cells_json.is_array())
      throw Error(Err::BadInput, "prototile must be a list of cells");
    std::vector<Point> cells;
    for (const json& c : cells_json) {
      Point p = point_from_json(c);
      if (p.size() != d)
        throw Error(Err::BadInput, "prototile cell has wrong dimension");
      cells.push_back(std::move(p));
    }
    out.push_back(make_prototile(std::move(cells), static_cast<int>(out.size())));
  }
  return out;
}

json require_key(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end())
    throw Error(Err::BadInput, std::string("missing key \"") + key + "\"");
  return *it;
}

json parse_text(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw Error(Err::BadInput, "malformed JSON");
  if (!doc.is_object()) throw Error(Err::BadInput, "expected a JSON object");
  return doc;
}

}  // namespace

TilingFile parse_tiling_json(const std::string& text) {
  json doc = parse_text(text);
  json dim_json = require_key(doc, "dim");
  if (!dim_json.is_number_integer() || dim_json.get<Int>() < 1)
    throw Error(Err::BadInput, "\"dim\" must be a positive integer");
  const std::size_t d = dim_json.get<std::size_t>();

  IntMat gens = generators_from_json(require_key(doc, "basis"), "\"basis\"");
  if (static_cast<std::size_t>(gens.rows()) != d)
    throw Error(Err::BadInput, "\"basis\" does not match \"dim\"");

  std::vector<Prototile> prototiles =
      prototiles_from_json(require_key(doc, "prototiles"), d);

  std::vector<Placement> placements;
  json placements_json = require_key(doc, "placements");
  if (!placements_json.is_array())
    throw Error(Err::BadInput, "\"placements\" must be a list");
  for (const json& pj : placements_json) {
    if (!pj.is_object())
      throw Error(Err::BadInput, "placement must be an object");
    Point offset = point_from_json(require_key(pj, "offset"));
    if (offset.size() != d)
      throw Error(Err::BadInput, "placement offset has wrong dimension");
    json tile = require_key(pj, "tile");
    if (!tile.is_number_integer())
      throw Error(Err::BadInput, "placement tile must be an integer");
    Int ti = tile.get<Int>();
    if (ti < 0 || ti >= static_cast<Int>(prototiles.size()))
      throw Error(Err::BadTileIndex, "placement tile out of range");
    placements.push_back(Placement{std::move(offset), static_cast<int>(ti)});
  }

  TilingFile out{PeriodicTiling{SublatticeBasis(gens), std::move(prototiles),
                                std::move(placements)},
                 std::nullopt};
  if (doc.contains("geometry")) {
    const json& rows = doc["geometry"];
    if (!rows.is_array() || rows.size() != d)
      throw Error(Err::BadInput, "\"geometry\" must list d generator vectors");
    Eigen::MatrixXd g(d, d);
    for (std::size_t j = 0; j < d; ++j) {
      if (!rows[j].is_array() || rows[j].size() != d)
        throw Error(Err::BadInput, "\"geometry\" vectors must have length d");
      for (std::size_t i = 0; i < d; ++i) {
        if (!rows[j][i].is_number())
          throw Error(Err::BadInput, "\"geometry\" entries must be numbers");
        g(i, j) = rows[j][i].get<double>();
      }
    }
    out.geometry = make_geometric_basis(std::move(g));
  }
  return out;
}

std::string tiling_to_json(const PeriodicTiling& t,
                           const std::optional<GeometricBasis>& geometry) {
  json doc;
  doc["dim"] = t.basis.dim();
  doc["basis"] = generators_to_json(t.basis.generators());
  doc["prototiles"] = prototiles_to_json(t.prototiles);
  json placements = json::array();
  for (const Placement& pl : t.placements) {
    json pj;
    pj["offset"] = point_to_json(pl.offset);
    pj["tile"] = pl.tile_index;
    placements.push_back(pj);
  }
  doc["placements"] = placements;
  if (geometry) {
    json rows = json::array();
    for (Eigen::Index j = 0; j < geometry->vectors.cols(); ++j) {
      json row = json::array();
      for (Eigen::Index i = 0; i < geometry->vectors.rows(); ++i)
        row.push_back(geometry->vectors(i, j));
      rows.push_back(row);
    }
    doc["geometry"] = rows;
  }
  return doc.dump(2) + "\n";
}

std::string schedule_to_json(const Schedule& s) {
  json doc;
  doc["dim"] = s.basis.dim();
  doc["basis"] = generators_to_json(s.basis.generators());
  doc["m"] = s.m;
  doc["prototiles"] = prototiles_to_json(s.prototiles);
  json slots = json::array();
  for (Int id = 0; id < s.basis.index(); ++id) {
    json entry;
    entry["coset_rep"] = point_to_json(s.basis.rep_of_index(id));
    entry["slot"] = s.slot_of_coset[static_cast<std::size_t>(id)];
    entry["tile"] = s.deployment[static_cast<std::size_t>(id)];
    slots.push_back(entry);
  }
  doc["slots"] = slots;
  return doc.dump(2) + "\n";
}

Schedule parse_schedule_json(const std::string& text) {
  json doc = parse_text(text);
  json dim_json = require_key(doc, "dim");
  if (!dim_json.is_number_integer() || dim_json.get<Int>() < 1)
    throw Error(Err::BadInput, "\"dim\" must be a positive integer");
  const std::size_t d = dim_json.get<std::size_t>();
  IntMat gens = generators_from_json(require_key(doc, "basis"), "\"basis\"");
  if (static_cast<std::size_t>(gens.rows()) != d)
    throw Error(Err::BadInput, "\"basis\" does not match \"dim\"");
  SublatticeBasis basis(gens);
  std::vector<Prototile> prototiles =
      prototiles_from_json(require_key(doc, "prototiles"), d);
  json m_json = require_key(doc, "m");
  if (!m_json.is_number_integer() || m_json.get<Int>() < 1)
    throw Error(Err::BadInput, "\"m\" must be a positive integer");
  const int m = m_json.get<int>();

  const std::size_t n = static_cast<std::size_t>(basis.index());
  std::vector<int> slot_of_coset(n, 0), deployment(n, -1);
  json slots = require_key(doc, "slots");
  if (!slots.is_array() || slots.size() != n)
    throw Error(Err::BadInput, "\"slots\" must list every coset exactly once");
  for (const json& entry : slots) {
    Point rep = point_from_json(require_key(entry, "coset_rep"));
    if (rep.size() != d)
      throw Error(Err::BadInput, "coset_rep has wrong dimension");
    json slot = require_key(entry, "slot");
    json tile = require_key(entry, "tile");
    if (!slot.is_number_integer() || slot.get<Int>() < 1 || slot.get<Int>() > m)
      throw Error(Err::BadInput, "slot out of range");
    if (!tile.is_number_integer() || tile.get<Int>() < 0 ||
        tile.get<Int>() >= static_cast<Int>(prototiles.size()))
      throw Error(Err::BadInput, "slot tile out of range");
    std::size_t id = static_cast<std::size_t>(basis.coset_index(rep));
    if (deployment[id] != -1)
      throw Error(Err::BadInput, "duplicate coset in \"slots\"");
    slot_of_coset[id] = slot.get<int>();
    deployment[id] = tile.get<int>();
  }
  for (int dep : deployment)
    if (dep == -1)
      throw Error(Err::BadInput, "\"slots\" must list every coset exactly once");

  std::set<Point> union_cells;
  std::vector<bool> used(prototiles.size(), false);
  for (int dep : deployment) used[dep] = true;
  for (std::size_t j = 0; j < prototiles.size(); ++j)
    if (used[j])
      union_cells.insert(prototiles[j].cells.begin(), prototiles[j].cells.end());

  return Schedule{std::move(basis),
                  std::move(prototiles),
                  m,
                  std::move(slot_of_coset),
                  std::move(deployment),
                  std::vector<Point>(union_cells.begin(), union_cells.end())};
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Err::BadInput, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Err::BadInput, "cannot write " + path);
  out << text;
}

TilingFile read_tiling_file(const std::string& path) {
  return parse_tiling_json(read_text_file(path));
}

Schedule read_schedule_file(const std::string& path) {
  return parse_schedule_json(read_text_file(path));
}

}  // namespace latt
