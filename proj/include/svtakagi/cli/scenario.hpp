#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "svtakagi/svmap/grid.hpp"
#include "svtakagi/svmap/json.hpp"
#include "svtakagi/verify/run.hpp"

namespace svtakagi::cli {

using exactgeom::Json;
using exactgeom::Rational;
using exactgeom::RationalVector;
using svmap::DomainGrid;
using svmap::RegionKind;
using svmap::SetValuedMap;
using verify::Mode;

inline constexpr unsigned kMaxDepth = 16;

struct GridSpec {
  RegionKind kind = RegionKind::box;
  RationalVector lo, hi;
  Rational step;
  std::vector<RationalVector> vertices;
  unsigned divisions = 0;
  std::vector<RationalVector> points;

  bool operator==(const GridSpec&) const = default;

  DomainGrid build() const {
    switch (kind) {
      case RegionKind::box: return DomainGrid::box(lo, hi, step);
      case RegionKind::simplex: return DomainGrid::simplex(vertices, divisions);
      case RegionKind::points: return DomainGrid::points(points);
    }
    throw std::logic_error("unknown grid kind");
  }
};

enum class PairMode { all, sample, list };

struct PairSpec {
  PairMode mode = PairMode::all;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::size_t, std::size_t>> list;

  bool operator==(const PairSpec&) const = default;

  /// Index pairs over n base points: i < j for "all", distinct unordered
  /// draws from a seeded generator for "sample", verbatim for "list".
  std::vector<std::pair<std::size_t, std::size_t>> select(std::size_t n) const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    switch (mode) {
      case PairMode::all:
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = i + 1; j < n; ++j) out.emplace_back(i, j);
        return out;
      case PairMode::sample: {
        if (n < 2 || count > n * (n - 1) / 2) throw std::invalid_argument("pair sample larger than the grid allows");
        std::mt19937_64 rng(seed);
        std::set<std::pair<std::size_t, std::size_t>> seen;
        while (out.size() < count) {
          std::size_t i = static_cast<std::size_t>(rng() % n), j = static_cast<std::size_t>(rng() % n);
          if (i == j) continue;
          if (seen.insert({std::min(i, j), std::max(i, j)}).second) out.emplace_back(i, j);
        }
        return out;
      }
      case PairMode::list:
        for (auto [i, j] : list)
          if (i >= n || j >= n) throw std::invalid_argument("pair index outside the grid");
        return list;
    }
    return out;
  }
};

struct ProbeSpec {
  std::size_t trials = 200;
  std::uint64_t seed = 1;

  bool operator==(const ProbeSpec&) const = default;
};

/// A verification scenario: a map F with error maps A and B on a sampled domain.
struct Scenario {
  std::string id;
  std::size_t dim = 1;
  GridSpec grid;
  SetValuedMap map;
  SetValuedMap A;
  SetValuedMap B;
  PairSpec pairs;
  unsigned m_max = 6;
  Rational slack = 0;
  Mode mode = Mode::convex;
  bool oracle = true;
  std::optional<ProbeSpec> probe;

  bool operator==(const Scenario&) const = default;
};

namespace detail {

inline std::size_t natural(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw ParseError(where + ": expected a nonnegative integer");
  return j.get<std::size_t>();
}

inline bool boolean(const Json& j, const std::string& where) {
  if (!j.is_boolean()) throw ParseError(where + ": expected a boolean");
  return j.get<bool>();
}

inline std::string string(const Json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": expected a string");
  return j.get<std::string>();
}

inline void require_dim(const RationalVector& v, std::size_t d, const std::string& where) {
  if (v.size() != d) throw DimensionError(where + ": expected dimension " + std::to_string(d));
}

inline GridSpec grid_from_json(const Json& j, std::size_t dim) {
  using exactgeom::field;
  const std::string where = "grid";
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  const std::string kind = string(field(j, "kind", where), where + " kind");
  GridSpec g;
  if (kind == "box") {
    exactgeom::require_fields(j, {"kind", "lo", "hi", "step"}, where);
    g.kind = RegionKind::box;
    g.lo = exactgeom::vector_from_json(field(j, "lo", where));
    g.hi = exactgeom::vector_from_json(field(j, "hi", where));
    g.step = exactgeom::rational_from_json(field(j, "step", where));
    require_dim(g.lo, dim, "grid lo");
    require_dim(g.hi, dim, "grid hi");
    if (g.step <= 0) throw ParseError("grid step must be positive");
  } else if (kind == "simplex") {
    exactgeom::require_fields(j, {"kind", "vertices", "divisions"}, where);
    g.kind = RegionKind::simplex;
    g.vertices = exactgeom::vectors_from_json(field(j, "vertices", where), "grid vertices");
    for (const auto& v : g.vertices) require_dim(v, dim, "grid vertex");
    g.divisions = static_cast<unsigned>(natural(field(j, "divisions", where), "grid divisions"));
  } else if (kind == "points") {
    exactgeom::require_fields(j, {"kind", "points"}, where);
    g.kind = RegionKind::points;
    g.points = exactgeom::vectors_from_json(field(j, "points", where), "grid points");
    for (const auto& p : g.points) require_dim(p, dim, "grid point");
  } else {
    throw ParseError(where + ": unknown kind \"" + kind + "\"");
  }
  return g;
}

inline Json to_json(const GridSpec& g) {
  using exactgeom::to_json;
  Json j{{"kind", svmap::region_name(g.kind)}};
  switch (g.kind) {
    case RegionKind::box:
      j["lo"] = to_json(g.lo);
      j["hi"] = to_json(g.hi);
      j["step"] = to_json(g.step);
      break;
    case RegionKind::simplex:
      j["vertices"] = Json::array();
      for (const auto& v : g.vertices) j["vertices"].push_back(to_json(v));
      j["divisions"] = g.divisions;
      break;
    case RegionKind::points:
      j["points"] = Json::array();
      for (const auto& p : g.points) j["points"].push_back(to_json(p));
      break;
  }
  return j;
}

inline PairSpec pairs_from_json(const Json& j) {
  using exactgeom::field;
  const std::string where = "pairs";
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  const std::string mode = string(field(j, "mode", where), where + " mode");
  PairSpec p;
  if (mode == "all") {
    exactgeom::require_fields(j, {"mode"}, where);
  } else if (mode == "sample") {
    exactgeom::require_fields(j, {"mode", "count", "seed"}, where);
    p.mode = PairMode::sample;
    p.count = natural(field(j, "count", where), "pairs count");
    p.seed = natural(field(j, "seed", where), "pairs seed");
  } else if (mode == "list") {
    exactgeom::require_fields(j, {"mode", "list"}, where);
    p.mode = PairMode::list;
    const auto& l = field(j, "list", where);
    if (!l.is_array()) throw ParseError("pairs list: expected an array");
    for (const auto& e : l) {
      if (!e.is_array() || e.size() != 2) throw ParseError("pairs list: entries are [i, j]");
      p.list.emplace_back(natural(e[0], "pair index"), natural(e[1], "pair index"));
    }
  } else {
    throw ParseError(where + ": unknown mode \"" + mode + "\"");
  }
  return p;
}

inline Json to_json(const PairSpec& p) {
  switch (p.mode) {
    case PairMode::all: return Json{{"mode", "all"}};
    case PairMode::sample: return Json{{"mode", "sample"}, {"count", p.count}, {"seed", p.seed}};
    case PairMode::list: {
      Json l = Json::array();
      for (auto [i, j] : p.list) l.push_back(Json::array({i, j}));
      return Json{{"mode", "list"}, {"list", l}};
    }
  }
  return {};
}

}  // namespace detail

/// Parses a scenario document; unknown fields and inexact numbers are rejected.
inline Scenario scenario_from_json(const Json& j) {
  using exactgeom::field;
  const std::string where = "scenario";
  exactgeom::require_fields(
      j, {"id", "dim", "grid", "map", "A", "B", "pairs", "m_max", "slack", "mode", "oracle", "probe"}, where);
  const auto dim = exactgeom::dim_from_json(field(j, "dim", where), where);
  Scenario s{detail::string(field(j, "id", where), "scenario id"),
             dim,
             detail::grid_from_json(field(j, "grid", where), dim),
             svmap::map_from_json(field(j, "map", where), dim),
             svmap::map_from_json(field(j, "A", where), dim),
             svmap::map_from_json(field(j, "B", where), dim)};
  if (j.contains("pairs")) s.pairs = detail::pairs_from_json(j["pairs"]);
  if (j.contains("m_max")) s.m_max = static_cast<unsigned>(detail::natural(j["m_max"], "m_max"));
  if (s.m_max > kMaxDepth) throw CapabilityError("m_max above " + std::to_string(kMaxDepth) + " is not supported");
  if (j.contains("slack")) s.slack = exactgeom::rational_from_json(j["slack"]);
  if (s.slack < 0) throw ParseError("slack must be nonnegative");
  if (j.contains("mode")) {
    const auto m = detail::string(j["mode"], "mode");
    if (m == "convex") s.mode = Mode::convex;
    else if (m == "concave") s.mode = Mode::concave;
    else throw ParseError("mode must be \"convex\" or \"concave\"");
  }
  if (j.contains("oracle")) s.oracle = detail::boolean(j["oracle"], "oracle");
  if (j.contains("probe")) {
    const auto& p = j["probe"];
    exactgeom::require_fields(p, {"trials", "seed"}, "probe");
    ProbeSpec ps;
    if (p.contains("trials")) ps.trials = detail::natural(p["trials"], "probe trials");
    if (p.contains("seed")) ps.seed = detail::natural(p["seed"], "probe seed");
    if (ps.trials == 0) throw ParseError("probe trials must be positive");
    s.probe = ps;
  }
  if (s.A.value_dim() != s.map.value_dim() || s.B.value_dim() != s.map.value_dim())
    throw DimensionError("A, B and the map have different value dimensions");
  return s;
}

inline Json to_json(const Scenario& s) {
  Json j;
  j["id"] = s.id;
  j["dim"] = s.dim;
  j["grid"] = detail::to_json(s.grid);
  j["map"] = svmap::to_json(s.map);
  j["A"] = svmap::to_json(s.A);
  j["B"] = svmap::to_json(s.B);
  j["pairs"] = detail::to_json(s.pairs);
  j["m_max"] = s.m_max;
  j["slack"] = exactgeom::to_json(s.slack);
  j["mode"] = verify::mode_name(s.mode);
  j["oracle"] = s.oracle;
  if (s.probe) j["probe"] = Json{{"trials", s.probe->trials}, {"seed", s.probe->seed}};
  return j;
}

inline Scenario parse_scenario(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  try {
    return scenario_from_json(j);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("scenario: ") + e.what());
  }
}

inline Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read scenario file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

/// Builds the grid, selects pairs and runs the full verification.
inline verify::VerificationReport run_scenario(const Scenario& s) {
  DomainGrid grid = s.grid.build();
  if (grid.dim() != s.dim) throw DimensionError("grid dimension differs from scenario dim");
  const auto pairs = s.pairs.select(grid.base_size());
  verify::RunConfig cfg;
  cfg.id = s.id;
  cfg.mode = s.mode;
  cfg.m_max = s.m_max;
  cfg.slack = verify::SlackBox(s.slack);
  cfg.oracle = s.oracle;
  if (s.probe) {
    cfg.probe = true;
    cfg.probe_trials = s.probe->trials;
    cfg.probe_seed = s.probe->seed;
  }
  return verify::run_verification(s.map, svmap::ErrorMap(s.A), svmap::ErrorMap(s.B), grid, pairs, cfg);
}

}  // namespace svtakagi::cli
