#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "svtakagi/exactgeom/linalg.hpp"
#include "svtakagi/exactgeom/operations.hpp"
#include "svtakagi/exactgeom/polyhedron.hpp"

namespace svtakagi::exactgeom {

inline constexpr std::size_t kMaxConeDim = 4;

namespace detail {

inline void require_cone_dim(std::size_t d) {
  if (d > kMaxConeDim)
    throw CapabilityError("cone intersection supports dimension <= 4, got " + std::to_string(d));
}

// Calls fn on every k-subset of {0..n-1} in lexicographic order.
inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
    if (pos == k) {
      fn(idx);
      return;
    }
    for (std::size_t i = start; i + (k - pos) <= n; ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
}

/// Generators of {x : a.x >= 0 for every row a}. Lineality directions come out
/// as +/- pairs; the pointed part's extreme rays are found as one-dimensional
/// solutions of (k-1) active rows plus the lineality complement, k being the
/// pointed dimension.
inline std::vector<RationalVector> hcone_generators(const std::vector<RationalVector>& rows, std::size_t dim) {
  std::vector<RationalVector> lineality = null_space(rows, dim);
  std::vector<RationalVector> gens;
  for (const auto& l : lineality) {
    gens.push_back(l);
    gens.push_back(-l);
  }
  const std::size_t k = dim - lineality.size();
  if (k == 0) return gens;
  auto satisfies = [&](const RationalVector& x) {
    for (const auto& a : rows)
      if (dot(a, x) < 0) return false;
    return true;
  };
  for_each_subset(rows.size(), k - 1, [&](const std::vector<std::size_t>& active) {
    std::vector<RationalVector> eq = lineality;
    for (auto i : active) eq.push_back(rows[i]);
    auto ns = null_space(eq, dim);
    if (ns.size() != 1) return;
    if (satisfies(ns[0]))
      gens.push_back(ns[0]);
    else if (satisfies(-ns[0]))
      gens.push_back(-ns[0]);
  });
  canonicalize_rays(gens, dim);
  return gens;
}

inline std::vector<RationalVector> drop_redundant_rays(std::vector<RationalVector> rays) {
  for (std::size_t i = 0; i < rays.size();) {
    std::vector<RationalVector> others;
    for (std::size_t j = 0; j < rays.size(); ++j)
      if (j != i) others.push_back(rays[j]);
    if (rays_contain(others, rays[i]))
      rays.erase(rays.begin() + static_cast<std::ptrdiff_t>(i));
    else
      ++i;
  }
  return rays;
}

}  // namespace detail

/// Inequality normals a with cone(rays) = {x : a.x >= 0 for all a}.
inline std::vector<RationalVector> facet_normals(const Cone& C) {
  detail::require_cone_dim(C.dim());
  return detail::hcone_generators(C.rays(), C.dim());
}

/// C1 intersected with C2, by passing both to inequality form and back.
inline Cone cone_intersection(const Cone& C1, const Cone& C2) {
  detail::require_same_dim(C1.dim(), C2.dim(), "cone_intersection");
  detail::require_cone_dim(C1.dim());
  std::vector<RationalVector> rows = facet_normals(C1);
  auto more = facet_normals(C2);
  rows.insert(rows.end(), more.begin(), more.end());
  return Cone(C1.dim(), detail::drop_redundant_rays(detail::hcone_generators(rows, C1.dim())));
}

}  // namespace svtakagi::exactgeom
