#pragma once

#include <map>
#include <string>
#include <vector>

#include "svtakagi/exactgeom/json.hpp"
#include "svtakagi/svmap/map.hpp"

namespace svtakagi::svmap {

using exactgeom::Json;
using exactgeom::field;
using exactgeom::rational_from_json;
using exactgeom::require_fields;
using exactgeom::to_json;
using exactgeom::vector_from_json;

namespace detail {
inline void require_dim(const RationalVector& x, std::size_t d, const std::string& where) {
  if (x.size() != d) throw ParseError(where + ": expected a point of dimension " + std::to_string(d));
}
}  // namespace detail

// {"kind": "sq_l2", "epsilon": "1/4"} or {"kind": "tabulated", "table": [{"x": [...], "value": "q"}]}
inline ErrorFunction error_function_from_json(const Json& j, std::size_t domain_dim) {
  const std::string where = "phi";
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  const auto kind = takagi::error_kind_from_name(field(j, "kind", where).get<std::string>());
  try {
    if (kind == takagi::ErrorKind::tabulated) {
      require_fields(j, {"kind", "table"}, where);
      std::map<RationalVector, Rational> table;
      for (const auto& e : field(j, "table", where)) {
        require_fields(e, {"x", "value"}, "phi table entry");
        auto x = vector_from_json(field(e, "x", "phi table entry"));
        detail::require_dim(x, domain_dim, "phi table entry");
        table[x] = rational_from_json(field(e, "value", "phi table entry"));
      }
      return ErrorFunction::tabulated(std::move(table));
    }
    require_fields(j, {"kind", "epsilon"}, where);
    const Rational eps = rational_from_json(field(j, "epsilon", where));
    switch (kind) {
      case takagi::ErrorKind::constant: return ErrorFunction::constant(eps);
      case takagi::ErrorKind::l1: return ErrorFunction::l1(eps);
      case takagi::ErrorKind::linf: return ErrorFunction::linf(eps);
      default: return ErrorFunction::sq_l2(eps);
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(where + ": " + e.what());
  }
}

inline Json to_json(const ErrorFunction& phi) {
  Json j;
  j["kind"] = takagi::kind_name(phi.kind());
  if (phi.kind() == takagi::ErrorKind::tabulated) {
    j["table"] = Json::array();
    for (const auto& [x, v] : phi.table()) j["table"].push_back(Json{{"x", to_json(x)}, {"value", to_json(v)}});
  } else {
    j["epsilon"] = to_json(phi.epsilon());
  }
  return j;
}

// A polynomial is a list of monomials {"coef": "q", "exponents": [k, ...]}.
inline Polynomial polynomial_from_json(const Json& j, std::size_t domain_dim) {
  if (!j.is_array()) throw ParseError("polynomial: expected an array of monomials");
  std::vector<Monomial> terms;
  for (const auto& m : j) {
    require_fields(m, {"coef", "exponents"}, "monomial");
    Monomial t{rational_from_json(field(m, "coef", "monomial")), {}};
    const auto& ex = field(m, "exponents", "monomial");
    if (!ex.is_array()) throw ParseError("monomial: exponents must be an array");
    for (const auto& e : ex) {
      if (!e.is_number_unsigned()) throw ParseError("monomial: exponents must be nonnegative integers");
      t.exponents.push_back(e.get<unsigned>());
    }
    terms.push_back(std::move(t));
  }
  try {
    return Polynomial(domain_dim, std::move(terms));
  } catch (const DimensionError& e) {
    throw ParseError(std::string("polynomial: ") + e.what());
  }
}

inline Json to_json(const Polynomial& p) {
  Json a = Json::array();
  for (const auto& t : p.terms()) a.push_back(Json{{"coef", to_json(t.coef)}, {"exponents", t.exponents}});
  return a;
}

/// Map spec keyed by "kind": singleton, cone_plus_scaled or tabulated.
inline SetValuedMap map_from_json(const Json& j, std::size_t domain_dim) {
  const std::string where = "map";
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  const std::string kind = field(j, "kind", where).get<std::string>();
  try {
    if (kind == "singleton") {
      require_fields(j, {"kind", "f", "plus"}, where);
      std::vector<Polynomial> comps;
      const auto& f = field(j, "f", where);
      if (!f.is_array()) throw ParseError("map f: expected an array of polynomials");
      for (const auto& c : f) comps.push_back(polynomial_from_json(c, domain_dim));
      std::optional<Polyhedron> plus;
      if (j.contains("plus")) plus = exactgeom::polyhedron_from_json(j["plus"]);
      return SetValuedMap::singleton(PolynomialMap(domain_dim, std::move(comps)), std::move(plus));
    }
    if (kind == "cone_plus_scaled") {
      require_fields(j, {"kind", "K", "phi", "S0"}, where);
      return SetValuedMap::cone_plus_scaled(domain_dim, exactgeom::cone_from_json(field(j, "K", where)),
                                            error_function_from_json(field(j, "phi", where), domain_dim),
                                            exactgeom::polyhedron_from_json(field(j, "S0", where)));
    }
    if (kind == "tabulated") {
      require_fields(j, {"kind", "value_dim", "table"}, where);
      const auto vd = exactgeom::dim_from_json(field(j, "value_dim", where), where);
      std::map<RationalVector, TabulatedValue> table;
      for (const auto& e : field(j, "table", where)) {
        require_fields(e, {"x", "value", "convex"}, "map table entry");
        auto x = vector_from_json(field(e, "x", "map table entry"));
        detail::require_dim(x, domain_dim, "map table entry");
        TabulatedValue v{exactgeom::polyhedron_from_json(field(e, "value", "map table entry")), true};
        if (e.contains("convex")) {
          if (!e["convex"].is_boolean()) throw ParseError("map table entry: convex must be a boolean");
          v.convex = e["convex"].get<bool>();
        }
        if (!table.emplace(x, std::move(v)).second) throw ParseError("map table: repeated point");
      }
      return SetValuedMap::tabulated(domain_dim, vd, std::move(table));
    }
  } catch (const DimensionError& e) {
    throw ParseError(where + ": " + e.what());
  }
  throw ParseError(where + ": unknown kind \"" + kind + "\"");
}

inline Json to_json(const SetValuedMap& S) {
  Json j;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, SingletonSpec>) {
          j["kind"] = "singleton";
          j["f"] = Json::array();
          for (const auto& c : s.f.components()) j["f"].push_back(to_json(c));
          if (s.plus) j["plus"] = to_json(*s.plus);
        } else if constexpr (std::is_same_v<T, ConePlusScaledSpec>) {
          j["kind"] = "cone_plus_scaled";
          j["K"] = to_json(s.K);
          j["phi"] = to_json(s.phi);
          j["S0"] = to_json(s.S0);
        } else {
          j["kind"] = "tabulated";
          j["value_dim"] = s.value_dim;
          j["table"] = Json::array();
          for (const auto& [x, v] : s.table) {
            Json e{{"x", to_json(x)}, {"value", to_json(v.value)}};
            if (!v.convex) e["convex"] = false;
            j["table"].push_back(std::move(e));
          }
        }
      },
      S.spec());
  return j;
}

}  // namespace svtakagi::svmap
