#include "golomb/io.hpp"

#include <cctype>
#include <sstream>
#include <string>
#include <utility>

#include "golomb/error.hpp"

namespace golomb::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::size_t count_from_json(const json& j) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw InputError("expected a nonnegative integer");
  return j.get<std::size_t>();
}

std::vector<std::size_t> shape_from_json(const json& j) {
  if (!j.is_array()) throw InputError("\"shape\" must be an array");
  std::vector<std::size_t> shape;
  for (const auto& s : j) shape.push_back(count_from_json(s));
  return shape;
}

json shape_to_json(const ProductGrid& grid) { return grid.factor_sizes(); }

std::vector<GridPoint> points_from_json(const json& j) {
  if (!j.is_array()) throw InputError("expected an array of points");
  std::vector<GridPoint> out;
  for (const auto& p : j) out.push_back(point_from_json(p));
  return out;
}

std::string trim(std::string_view s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

}  // namespace

json to_json(const Rat& value) { return to_string(value); }

Rat rat_from_json(const json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return parse_rat(std::to_string(j.get<long long>()));
  throw InputError("expected a rational string \"p/q\"");
}

json to_json(const GridPoint& p) { return p.coords; }

GridPoint point_from_json(const json& j) {
  if (!j.is_array()) throw InputError("a point must be an array of coordinates");
  GridPoint p;
  for (const auto& c : j) p.coords.push_back(count_from_json(c));
  return p;
}

json to_json(const TabulatedFunction& f) {
  json values = json::array();
  for (const auto& v : f.values()) values.push_back(to_json(v));
  return {{"shape", shape_to_json(f.grid())}, {"values", std::move(values)}};
}

TabulatedFunction function_from_json(const json& j) {
  ProductGrid grid(shape_from_json(field(j, "shape")));
  const json& values = field(j, "values");
  if (!values.is_array()) throw InputError("\"values\" must be an array");
  RatVector table;
  for (const auto& v : values) table.push_back(rat_from_json(v));
  return {std::move(grid), std::move(table)};
}

TabulatedFunction function_from_csv(std::string_view text) {
  std::vector<RatVector> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    RatVector row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(parse_rat(trim(cell)));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw InputError("empty CSV table");
  const std::size_t width = rows.front().size();
  RatVector values;
  for (auto& row : rows) {
    if (row.size() != width) throw InputError("ragged CSV table");
    for (auto& v : row) values.push_back(std::move(v));
  }
  return {ProductGrid({rows.size(), width}), std::move(values)};
}

TabulatedFunction parse_function(std::string_view text) {
  const std::string body = trim(text);
  if (!body.empty() && body.front() == '{') {
    json j;
    try {
      j = json::parse(body);
    } catch (const json::parse_error& e) {
      throw InputError(std::string("invalid JSON: ") + e.what());
    }
    return function_from_json(j);
  }
  return function_from_csv(body);
}

json to_json(const FiniteSignedMeasure& mu) {
  json atoms = json::array();
  for (const auto& a : mu.atoms()) atoms.push_back({{"point", to_json(a.point)}, {"mass", to_json(a.mass)}});
  return {{"shape", shape_to_json(mu.grid())}, {"atoms", std::move(atoms)}};
}

FiniteSignedMeasure measure_from_json(const json& j) {
  ProductGrid grid(shape_from_json(field(j, "shape")));
  const json& atoms = field(j, "atoms");
  if (!atoms.is_array()) throw InputError("\"atoms\" must be an array");
  std::vector<Atom> out;
  for (const auto& a : atoms) {
    GridPoint p = point_from_json(field(a, "point"));
    if (!grid.contains(p)) throw InputError("measure atom outside the grid");
    out.push_back({std::move(p), rat_from_json(field(a, "mass"))});
  }
  return {std::move(grid), std::move(out)};
}

json to_json(const CycleVectorPair& pair) {
  json points = json::array();
  json lambda = json::array();
  for (const auto& p : pair.points) points.push_back(to_json(p));
  for (const auto& l : pair.lambda) lambda.push_back(to_json(l));
  return {{"points", std::move(points)}, {"lambda", std::move(lambda)}};
}

json to_json(const MinimalCycle& cycle) { return to_json(cycle.pair); }

CycleVectorPair pair_from_json(const json& j, const ProductGrid& grid) {
  CycleVectorPair pair{grid, points_from_json(field(j, "points")), {}};
  const json& lambda = field(j, "lambda");
  if (!lambda.is_array()) throw InputError("\"lambda\" must be an array");
  for (const auto& l : lambda) pair.lambda.push_back(rat_from_json(l));
  validate(pair);
  return pair;
}

json to_json(const GolombCycle& gc) {
  json b = json::array();
  json c = json::array();
  for (const auto& p : gc.b_part) b.push_back(to_json(p));
  for (const auto& p : gc.c_part) c.push_back(to_json(p));
  return {{"b", std::move(b)}, {"c", std::move(c)}};
}

GolombCycle golomb_from_json(const json& j, const ProductGrid& grid) {
  GolombCycle gc{grid, points_from_json(field(j, "b")), points_from_json(field(j, "c"))};
  validate(gc);
  return gc;
}

json to_json(const ClosedBolt& bolt, const ProductGrid& grid) {
  json vertices = json::array();
  for (const auto& v : bolt.bolt.vertices) vertices.push_back(to_json(v));
  return {{"vertices", std::move(vertices)}, {"closed", is_closed_bolt(bolt.bolt.vertices, grid)}};
}

json to_json(const SeparableSum& g) {
  json tables = json::array();
  for (const auto& t : g.tables()) {
    json row = json::array();
    for (const auto& v : t) row.push_back(to_json(v));
    tables.push_back(std::move(row));
  }
  return tables;
}

json to_json(const ApproximationResult& result) {
  return {{"error", to_json(result.error)},
          {"best_g", to_json(result.best_g)},
          {"optimal_measure", to_json(result.optimal_measure)}};
}

json to_json(const GolombReport& report) {
  return {{"error", to_json(report.error)},
          {"cycle_supremum", to_json(report.cycle_supremum)},
          {"equal", report.equal},
          {"enumerated", report.enumerated},
          {"witness", report.witness ? to_json(*report.witness) : json(nullptr)},
          {"cycles_examined", report.cycles_examined}};
}

json to_json(const Decomposition& decomposition) {
  json terms = json::array();
  for (const auto& t : decomposition.terms) {
    terms.push_back({{"weight", to_json(t.weight)}, {"cycle", to_json(t.cycle)}});
  }
  return {{"terms", std::move(terms)}};
}

json to_json(const BoltReport& report, const ProductGrid& grid) {
  return {{"supremum", to_json(report.supremum)},
          {"witness", report.witness ? to_json(*report.witness, grid) : json(nullptr)},
          {"bolts_examined", report.bolts_examined},
          {"enumerated", report.enumerated}};
}

}  // namespace golomb::io
