#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "svtakagi/exactgeom/polyhedron.hpp"
#include "svtakagi/exactgeom/simplex.hpp"

namespace svtakagi::exactgeom {

/// A generator of the left operand that escapes the right operand.
struct Witness {
  RationalVector point;
  bool is_ray = false;
};

struct InclusionResult {
  bool included = true;
  std::optional<Witness> witness;
  explicit operator bool() const { return included; }
};

namespace detail {
inline void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw DimensionError(std::string(what) + ": dimension mismatch");
}

struct Interval1d {
  Rational lo, hi;
  bool unbounded_below = false, unbounded_above = false;
};

inline Interval1d hull_1d(const std::vector<RationalVector>& vertices, const std::vector<RationalVector>& rays) {
  Interval1d iv;
  iv.lo = iv.hi = vertices.front()[0];
  for (const auto& v : vertices) {
    if (v[0] < iv.lo) iv.lo = v[0];
    if (v[0] > iv.hi) iv.hi = v[0];
  }
  for (const auto& r : rays) (r[0] > 0 ? iv.unbounded_above : iv.unbounded_below) = true;
  return iv;
}

inline bool rays_contain(const std::vector<RationalVector>& rays, const RationalVector& v) {
  if (v.is_zero()) return true;
  if (rays.empty()) return false;
  const std::size_t d = v.size();
  if (d == 1) {
    for (const auto& r : rays)
      if ((r[0] > 0) == (v[0] > 0)) return true;
    return false;
  }
  std::vector<std::vector<Rational>> A(d, std::vector<Rational>(rays.size()));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < rays.size(); ++j) A[i][j] = rays[j][i];
  return feasible(A, v.coords());
}

inline bool generators_contain(const std::vector<RationalVector>& vertices, const std::vector<RationalVector>& rays,
                               const RationalVector& p) {
  const std::size_t d = p.size();
  if (d == 1) {
    auto iv = hull_1d(vertices, rays);
    return (iv.unbounded_below || p[0] >= iv.lo) && (iv.unbounded_above || p[0] <= iv.hi);
  }
  const std::size_t n = vertices.size() + rays.size();
  std::vector<std::vector<Rational>> A(d + 1, std::vector<Rational>(n));
  for (std::size_t j = 0; j < vertices.size(); ++j) {
    for (std::size_t i = 0; i < d; ++i) A[i][j] = vertices[j][i];
    A[d][j] = 1;
  }
  for (std::size_t j = 0; j < rays.size(); ++j)
    for (std::size_t i = 0; i < d; ++i) A[i][vertices.size() + j] = rays[j][i];
  std::vector<Rational> b = p.coords();
  b.emplace_back(1);
  return feasible(A, b);
}
}  // namespace detail

/// P + Q. Vertices are all pairwise sums, rays the union.
inline Polyhedron minkowski_sum(const Polyhedron& P, const Polyhedron& Q) {
  detail::require_same_dim(P.dim(), Q.dim(), "minkowski_sum");
  std::vector<RationalVector> vertices;
  vertices.reserve(P.vertices().size() * Q.vertices().size());
  for (const auto& p : P.vertices())
    for (const auto& q : Q.vertices()) vertices.push_back(p + q);
  std::vector<RationalVector> rays = P.rays();
  rays.insert(rays.end(), Q.rays().begin(), Q.rays().end());
  return Polyhedron(P.dim(), std::move(vertices), std::move(rays));
}

/// c * P for c >= 0. With c = 0 the result is {0}, or cone(rays) when keep_rays is set.
inline Polyhedron scale(const Polyhedron& P, const Rational& c, bool keep_rays = false) {
  if (c < 0) throw std::invalid_argument("scale: negative factor");
  if (c == 0) {
    if (keep_rays) return Polyhedron(P.dim(), {RationalVector(P.dim())}, P.rays());
    return Polyhedron::origin(P.dim());
  }
  std::vector<RationalVector> vertices = P.vertices();
  for (auto& v : vertices) v *= c;
  return Polyhedron(P.dim(), std::move(vertices), P.rays());
}

/// Exact membership: v = sum l_i v_i + sum m_j r_j with l, m >= 0 and sum l = 1.
inline bool contains_point(const Polyhedron& P, const RationalVector& v) {
  detail::require_same_dim(P.dim(), v.size(), "contains_point");
  return detail::generators_contain(P.vertices(), P.rays(), v);
}

inline bool contains(const Cone& K, const RationalVector& v) {
  detail::require_same_dim(K.dim(), v.size(), "cone membership");
  return detail::rays_contain(K.rays(), v);
}

inline Cone recession_cone(const Polyhedron& P) { return Cone(P.dim(), P.rays()); }

/// P subset of Q inflated by [-slack, slack]^d. On failure the first escaping
/// generator of P (vertices before rays, in stored order) is returned.
inline InclusionResult subset(const Polyhedron& P, const Polyhedron& Q, const Rational& slack = 0) {
  detail::require_same_dim(P.dim(), Q.dim(), "subset");
  if (slack < 0) throw std::invalid_argument("subset: negative slack");
  const Polyhedron target = slack > 0 ? minkowski_sum(Q, Polyhedron::box(Q.dim(), slack)) : Q;
  for (const auto& v : P.vertices())
    if (!contains_point(target, v)) return {false, Witness{v, false}};
  for (const auto& r : P.rays())
    if (!detail::rays_contain(Q.rays(), r)) return {false, Witness{r, true}};
  return {};
}

inline bool same_set(const Polyhedron& P, const Polyhedron& Q) {
  return subset(P, Q).included && subset(Q, P).included;
}

inline bool cone_subset(const Cone& a, const Cone& b) {
  detail::require_same_dim(a.dim(), b.dim(), "cone_subset");
  for (const auto& r : a.rays())
    if (!detail::rays_contain(b.rays(), r)) return false;
  return true;
}

inline bool same_cone(const Cone& a, const Cone& b) { return cone_subset(a, b) && cone_subset(b, a); }

/// Drops rays generated by the remaining rays, then vertices contained in the
/// polyhedron of the remaining generators. The represented set is unchanged.
inline Polyhedron reduce(const Polyhedron& P) {
  const std::size_t d = P.dim();
  if (d == 1) {
    auto iv = detail::hull_1d(P.vertices(), P.rays());
    std::vector<RationalVector> rays, vertices;
    if (iv.unbounded_above) rays.push_back(RationalVector{1});
    if (iv.unbounded_below) rays.push_back(RationalVector{-1});
    if (!iv.unbounded_below) vertices.push_back(RationalVector{iv.lo});
    if (!iv.unbounded_above && (iv.hi != iv.lo || vertices.empty())) vertices.push_back(RationalVector{iv.hi});
    if (vertices.empty()) vertices.push_back(RationalVector{iv.lo});
    return Polyhedron(1, std::move(vertices), std::move(rays));
  }
  std::vector<RationalVector> rays = P.rays();
  for (std::size_t i = 0; i < rays.size();) {
    std::vector<RationalVector> others;
    for (std::size_t j = 0; j < rays.size(); ++j)
      if (j != i) others.push_back(rays[j]);
    if (detail::rays_contain(others, rays[i]))
      rays.erase(rays.begin() + static_cast<std::ptrdiff_t>(i));
    else
      ++i;
  }
  std::vector<RationalVector> vertices = P.vertices();
  for (std::size_t i = 0; i < vertices.size() && vertices.size() > 1;) {
    std::vector<RationalVector> others;
    for (std::size_t j = 0; j < vertices.size(); ++j)
      if (j != i) others.push_back(vertices[j]);
    if (detail::generators_contain(others, rays, vertices[i]))
      vertices.erase(vertices.begin() + static_cast<std::ptrdiff_t>(i));
    else
      ++i;
  }
  return Polyhedron(d, std::move(vertices), std::move(rays));
}

/// Smallest r >= 0 with P subset of Q + [-r, r]^d; nullopt when no finite r
/// exists (some ray of P leaves the recession cone of Q).
inline std::optional<Rational> inclusion_margin(const Polyhedron& P, const Polyhedron& Q) {
  detail::require_same_dim(P.dim(), Q.dim(), "inclusion_margin");
  for (const auto& r : P.rays())
    if (!detail::rays_contain(Q.rays(), r)) return std::nullopt;
  const std::size_t d = Q.dim(), nv = Q.vertices().size(), nr = Q.rays().size();
  // columns: lambda (nv), mu (nr), r, s (d), s' (d)
  const std::size_t n = nv + nr + 1 + 2 * d;
  Rational worst = 0;
  for (const auto& v : P.vertices()) {
    LinearProgram lp;
    lp.A.assign(2 * d + 1, std::vector<Rational>(n));
    lp.b.assign(2 * d + 1, Rational(0));
    lp.c.assign(n, Rational(0));
    lp.c[nv + nr] = 1;
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < nv; ++j) lp.A[i][j] = lp.A[d + i][j] = Q.vertices()[j][i];
      for (std::size_t j = 0; j < nr; ++j) lp.A[i][nv + j] = lp.A[d + i][nv + j] = Q.rays()[j][i];
      lp.A[i][nv + nr] = 1;
      lp.A[i][nv + nr + 1 + i] = -1;
      lp.A[d + i][nv + nr] = -1;
      lp.A[d + i][nv + nr + 1 + d + i] = 1;
      lp.b[i] = lp.b[d + i] = v[i];
    }
    for (std::size_t j = 0; j < nv; ++j) lp.A[2 * d][j] = 1;
    lp.b[2 * d] = 1;
    auto res = solve(lp);
    if (res.status != LpStatus::optimal) throw std::logic_error("inclusion_margin: LP not optimal");
    if (res.value > worst) worst = res.value;
  }
  return worst;
}

}  // namespace svtakagi::exactgeom
