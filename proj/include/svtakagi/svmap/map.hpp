#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <variant>
#include <vector>

#include "svtakagi/exactgeom/operations.hpp"
#include "svtakagi/exactgeom/polyhedron.hpp"
#include "svtakagi/svmap/polynomial.hpp"
#include "svtakagi/takagi/error_function.hpp"

namespace svtakagi::svmap {

using exactgeom::Cone;
using exactgeom::Polyhedron;
using takagi::ErrorFunction;

/// A tabulated map was evaluated off its table.
struct MissingPointError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

/// {f(x)}, optionally translated by a fixed polyhedron.
struct SingletonSpec {
  PolynomialMap f;
  std::optional<Polyhedron> plus;
  friend bool operator==(const SingletonSpec&, const SingletonSpec&) = default;
};

/// K + phi(x) * S0.
struct ConePlusScaledSpec {
  Cone K;
  ErrorFunction phi;
  Polyhedron S0;
  friend bool operator==(const ConePlusScaledSpec&, const ConePlusScaledSpec&) = default;
};

/// A stored value. Non-convex entries denote the finite set of their vertices
/// (plus rays); only the K-convexity precondition reads that distinction,
/// every other operation works with the closed convex hull.
struct TabulatedValue {
  Polyhedron value;
  bool convex = true;
  friend bool operator==(const TabulatedValue&, const TabulatedValue&) = default;
};

struct TabulatedSpec {
  std::size_t value_dim;
  std::map<RationalVector, TabulatedValue> table;
  friend bool operator==(const TabulatedSpec&, const TabulatedSpec&) = default;
};

enum class MapKind { singleton, cone_plus_scaled, tabulated };

/// Immutable set-valued map from rational domain points to polyhedra.
class SetValuedMap {
 public:
  using Spec = std::variant<SingletonSpec, ConePlusScaledSpec, TabulatedSpec>;

  static SetValuedMap singleton(PolynomialMap f, std::optional<Polyhedron> plus = std::nullopt) {
    if (plus && plus->dim() != f.value_dim()) throw DimensionError("singleton offset has wrong dimension");
    const auto dd = f.domain_dim();
    return SetValuedMap(dd, SingletonSpec{std::move(f), std::move(plus)});
  }

  static SetValuedMap cone_plus_scaled(std::size_t domain_dim, Cone K, ErrorFunction phi, Polyhedron S0) {
    if (K.dim() != S0.dim()) throw DimensionError("cone and S0 dimensions differ");
    return SetValuedMap(domain_dim, ConePlusScaledSpec{std::move(K), std::move(phi), std::move(S0)});
  }

  static SetValuedMap tabulated(std::size_t domain_dim, std::size_t value_dim,
                                std::map<RationalVector, TabulatedValue> table) {
    for (const auto& [x, v] : table) {
      if (x.size() != domain_dim) throw DimensionError("tabulated point has wrong dimension");
      if (v.value.dim() != value_dim) throw DimensionError("tabulated value has wrong dimension");
    }
    return SetValuedMap(domain_dim, TabulatedSpec{value_dim, std::move(table)});
  }

  /// The constant map x -> P.
  static SetValuedMap constant(std::size_t domain_dim, const Polyhedron& P) {
    return cone_plus_scaled(domain_dim, Cone(P.dim()), ErrorFunction::constant(1), P);
  }

  std::size_t domain_dim() const { return domain_dim_; }
  std::size_t value_dim() const {
    return std::visit(
        [](const auto& s) -> std::size_t {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, SingletonSpec>) return s.f.value_dim();
          else if constexpr (std::is_same_v<T, ConePlusScaledSpec>) return s.K.dim();
          else return s.value_dim;
        },
        spec_);
  }
  MapKind kind() const { return static_cast<MapKind>(spec_.index()); }
  const Spec& spec() const { return spec_; }

  /// True when every value is the same set regardless of x.
  bool is_constant() const {
    if (auto* c = std::get_if<ConePlusScaledSpec>(&spec_)) return c->phi.is_constant();
    return false;
  }

  Polyhedron evaluate(const RationalVector& x) const {
    if (x.size() != domain_dim_) throw DimensionError("map evaluated at a point of wrong dimension");
    return std::visit(
        [&](const auto& s) -> Polyhedron {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, SingletonSpec>) {
            auto p = Polyhedron::point(s.f(x));
            return s.plus ? exactgeom::minkowski_sum(p, *s.plus) : p;
          } else if constexpr (std::is_same_v<T, ConePlusScaledSpec>) {
            return exactgeom::minkowski_sum(exactgeom::as_polyhedron(s.K), exactgeom::scale(s.S0, s.phi(x)));
          } else {
            return lookup(s, x).value;
          }
        },
        spec_);
  }

  Polyhedron operator()(const RationalVector& x) const { return evaluate(x); }

  /// Stored entry of a tabulated map, nullptr for other kinds.
  const TabulatedValue* tabulated_entry(const RationalVector& x) const {
    if (auto* t = std::get_if<TabulatedSpec>(&spec_)) return &lookup(*t, x);
    return nullptr;
  }

  friend bool operator==(const SetValuedMap&, const SetValuedMap&) = default;

 private:
  SetValuedMap(std::size_t domain_dim, Spec spec) : domain_dim_(domain_dim), spec_(std::move(spec)) {
    if (domain_dim_ == 0) throw DimensionError("domain dimension must be positive");
  }

  static const TabulatedValue& lookup(const TabulatedSpec& s, const RationalVector& x) {
    auto it = s.table.find(x);
    if (it == s.table.end()) {
      std::ostringstream os;
      os << "tabulated map has no value at " << x;
      throw MissingPointError(os.str());
    }
    return it->second;
  }

  std::size_t domain_dim_;
  Spec spec_;
};

/// Error map for the Jensen-type hypotheses: 0 lies in every value.
///
/// S(0) may be any polyhedron containing 0; the Takagi transformation adds its
/// closed geometric tail exactly. Values are re-checked for 0 on evaluation.
class ErrorMap {
 public:
  explicit ErrorMap(SetValuedMap S, const std::vector<RationalVector>& sample = {}) : map_(std::move(S)) {
    if (auto* c = std::get_if<ConePlusScaledSpec>(&map_.spec()))
      if (!exactgeom::contains_point(c->S0, RationalVector(c->S0.dim())))
        throw std::invalid_argument("error map S0 must contain 0");
    (void)at_zero();
    for (const auto& u : sample) (void)(*this)(u);
  }

  static ErrorMap zero(std::size_t domain_dim, std::size_t value_dim) {
    return ErrorMap(SetValuedMap::constant(domain_dim, Polyhedron::origin(value_dim)));
  }

  const SetValuedMap& map() const { return map_; }
  std::size_t domain_dim() const { return map_.domain_dim(); }
  std::size_t value_dim() const { return map_.value_dim(); }

  Polyhedron operator()(const RationalVector& u) const {
    auto v = map_.evaluate(u);
    if (!exactgeom::contains_point(v, RationalVector(v.dim()))) {
      std::ostringstream os;
      os << "error map value at " << u << " does not contain 0";
      throw std::invalid_argument(os.str());
    }
    return v;
  }

  Polyhedron at_zero() const { return (*this)(RationalVector(domain_dim())); }

  /// S(0) equals its own recession cone, i.e. is a cone (possibly {0}).
  bool zero_value_is_cone() const {
    auto z = at_zero();
    return exactgeom::subset(z, exactgeom::as_polyhedron(exactgeom::recession_cone(z))).included;
  }

  friend bool operator==(const ErrorMap&, const ErrorMap&) = default;

 private:
  SetValuedMap map_;
};

}  // namespace svtakagi::svmap
