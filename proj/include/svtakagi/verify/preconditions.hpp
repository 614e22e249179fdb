#pragma once

#include <vector>

#include "svtakagi/exactgeom/operations.hpp"
#include "svtakagi/svmap/map.hpp"
#include "svtakagi/verify/checks.hpp"

namespace svtakagi::verify {

using exactgeom::Cone;

/// s F(x) + (1 - s) F(x) within F(x) + K. Convex values pass by construction
/// and are checked through the polyhedral path; non-convex tabulated values
/// are read as the finite set of their vertices plus cone(rays).
inline InclusionResult k_convex_at(const SetValuedMap& F, const RationalVector& x, const Cone& K, const Rational& s) {
  const auto* entry = F.tabulated_entry(x);
  if (!entry || entry->convex) {
    const Polyhedron v = F(x);
    const Polyhedron lhs = detail::add(exactgeom::scale(v, s), exactgeom::scale(v, 1 - s));
    return exactgeom::subset(lhs, detail::add(v, exactgeom::as_polyhedron(K)));
  }
  const auto& V = entry->value.vertices();
  std::vector<RationalVector> rays = entry->value.rays();
  rays.insert(rays.end(), K.rays().begin(), K.rays().end());
  const Cone C(K.dim(), rays);
  for (const auto& a : V)
    for (const auto& b : V) {
      const RationalVector p = s * a + (1 - s) * b;
      bool hit = false;
      for (const auto& v : V)
        if (exactgeom::contains(C, p - v)) {
          hit = true;
          break;
        }
      if (!hit) return {false, exactgeom::Witness{p, false}};
    }
  return {};
}

namespace detail {

inline Rational linf_radius(const std::vector<RationalVector>& pts) {
  Rational r = 0;
  for (const auto& p : pts) r = std::max(r, exactgeom::norm_linf(p));
  return r;
}

inline CheckRecord lower_bound_record(const SetValuedMap& F, const RationalVector& x, std::size_t i, const Cone& K) {
  CheckRecord r;
  r.kind = "precondition_lower_bound";
  r.pair = {i};
  const Polyhedron v = F(x);
  for (const auto& ray : v.rays())
    if (!exactgeom::contains(K, ray)) {
      r.status = Status::fail;
      r.witness = exactgeom::Witness{ray, true};
      r.note = "value recedes outside K";
      return r;
    }
  r.note = "H = box of radius " + linf_radius(v.vertices()).get_str();
  return r;
}

}  // namespace detail

/// Finite-grid versions of the boundedness and K-convexity hypotheses.
///   convex:  F(x) within H + K per point, and 0 in F(x) + H' + K for one box H';
///   concave: K-convexity at s in {1/4, 1/2, 3/4}, and one box H with F(x) within H + K.
inline std::vector<CheckRecord> validate_preconditions(const SetValuedMap& F, const Cone& K,
                                                       const std::vector<RationalVector>& points, Mode mode) {
  if (K.dim() != F.value_dim()) throw DimensionError("cone and map value dimensions differ");
  std::vector<CheckRecord> out;
  Rational common = 0;
  std::vector<bool> defined(points.size(), true);
  for (std::size_t i = 0; i < points.size(); ++i) {
    try {
      const Polyhedron v = F(points[i]);
      if (mode == Mode::convex) {
        Rational nearest = exactgeom::norm_linf(v.vertices().front());
        for (const auto& p : v.vertices()) nearest = std::min(nearest, exactgeom::norm_linf(p));
        common = std::max(common, nearest);
      } else {
        common = std::max(common, detail::linf_radius(v.vertices()));
      }
    } catch (const std::out_of_range&) {
      defined[i] = false;
    }
  }
  const Polyhedron box = Polyhedron::box(F.value_dim(), common);
  auto per_point = parallel_map(points.size(), [&](std::size_t i) {
    std::vector<CheckRecord> recs;
    const std::vector<std::size_t> idx{i};
    if (!defined[i]) {
      recs.push_back(skipped_record("precondition", idx, std::nullopt, "coverage gap: no value at grid point"));
      return recs;
    }
    const RationalVector& x = points[i];
    recs.push_back(detail::lower_bound_record(F, x, i, K));
    if (mode == Mode::convex) {
      CheckRecord r;
      r.kind = "precondition_weak_upper_bound";
      r.pair = idx;
      const Polyhedron reach = detail::add(detail::add(F(x), box), exactgeom::as_polyhedron(K));
      if (!exactgeom::contains_point(reach, RationalVector(F.value_dim()))) r.status = Status::fail;
      r.note = "H' = box of radius " + common.get_str();
      recs.push_back(r);
    } else {
      CheckRecord r;
      r.kind = "precondition_k_convex";
      r.pair = idx;
      for (const char* s : {"1/4", "1/2", "3/4"}) {
        auto res = k_convex_at(F, x, K, exactgeom::parse_rational(s));
        if (!res.included) {
          r.set(res);
          r.note = std::string("fails at s = ") + s;
          break;
        }
      }
      recs.push_back(r);
      if (recs.front().passed()) recs.front().note = "common H = box of radius " + common.get_str();
    }
    return recs;
  });
  for (auto& v : per_point) out.insert(out.end(), v.begin(), v.end());
  return out;
}

}  // namespace svtakagi::verify
