#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "svtakagi/exactgeom/rational.hpp"

namespace svtakagi::exactgeom {

/// Scales a nonzero direction so its first nonzero coordinate is +1 or -1.
inline RationalVector canonical_ray(RationalVector r) {
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] != 0) {
      Rational s = 1 / abs(r[i]);
      r *= s;
      return r;
    }
  }
  throw std::invalid_argument("zero vector is not a ray");
}

namespace detail {
inline void sort_unique(std::vector<RationalVector>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

inline void canonicalize_rays(std::vector<RationalVector>& rays, std::size_t dim) {
  std::vector<RationalVector> out;
  out.reserve(rays.size());
  for (auto& r : rays) {
    if (r.size() != dim) throw DimensionError("ray has wrong dimension");
    if (!r.is_zero()) out.push_back(canonical_ray(std::move(r)));
  }
  sort_unique(out);
  rays = std::move(out);
}
}  // namespace detail

/// Convex cone generated by finitely many rays; no rays encodes {0}.
class Cone {
 public:
  explicit Cone(std::size_t dim, std::vector<RationalVector> rays = {}) : dim_(dim), rays_(std::move(rays)) {
    if (dim_ == 0) throw DimensionError("cone dimension must be positive");
    detail::canonicalize_rays(rays_, dim_);
  }

  std::size_t dim() const { return dim_; }
  const std::vector<RationalVector>& rays() const { return rays_; }
  bool is_trivial() const { return rays_.empty(); }

  friend bool operator==(const Cone&, const Cone&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Cone& c) {
    os << "cone{";
    for (std::size_t i = 0; i < c.rays_.size(); ++i) os << (i ? ", " : "") << c.rays_[i];
    return os << '}';
  }

 private:
  std::size_t dim_;
  std::vector<RationalVector> rays_;
};

/// conv(vertices) + cone(rays), stored in V-form.
///
/// Vertices are sorted and exact duplicates dropped; other redundancy is
/// permitted, every predicate on polyhedra is semantic.
class Polyhedron {
 public:
  Polyhedron(std::size_t dim, std::vector<RationalVector> vertices, std::vector<RationalVector> rays = {})
      : dim_(dim), vertices_(std::move(vertices)), rays_(std::move(rays)) {
    if (dim_ == 0) throw DimensionError("polyhedron dimension must be positive");
    if (vertices_.empty()) throw std::invalid_argument("polyhedron needs at least one vertex");
    for (const auto& v : vertices_)
      if (v.size() != dim_) throw DimensionError("vertex has wrong dimension");
    detail::sort_unique(vertices_);
    detail::canonicalize_rays(rays_, dim_);
  }

  static Polyhedron point(RationalVector p) {
    const auto d = p.size();
    return Polyhedron(d, {std::move(p)});
  }
  static Polyhedron origin(std::size_t dim) { return Polyhedron(dim, {RationalVector(dim)}); }
  static Polyhedron from_cone(const Cone& k) { return Polyhedron(k.dim(), {RationalVector(k.dim())}, k.rays()); }
  static Polyhedron interval(const Rational& lo, const Rational& hi) {
    return Polyhedron(1, {RationalVector{lo}, RationalVector{hi}});
  }
  /// The box [-r, r]^dim.
  static Polyhedron box(std::size_t dim, const Rational& r) {
    std::vector<RationalVector> corners;
    const std::size_t count = std::size_t{1} << dim;
    for (std::size_t mask = 0; mask < count; ++mask) {
      RationalVector v(dim);
      for (std::size_t i = 0; i < dim; ++i) v[i] = (mask >> i) & 1 ? r : Rational(-r);
      corners.push_back(std::move(v));
    }
    return Polyhedron(dim, std::move(corners));
  }

  std::size_t dim() const { return dim_; }
  const std::vector<RationalVector>& vertices() const { return vertices_; }
  const std::vector<RationalVector>& rays() const { return rays_; }
  bool is_bounded() const { return rays_.empty(); }

  /// Structural equality of the stored generators (not set equality).
  friend bool operator==(const Polyhedron&, const Polyhedron&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Polyhedron& p) {
    os << "conv{";
    for (std::size_t i = 0; i < p.vertices_.size(); ++i) os << (i ? ", " : "") << p.vertices_[i];
    os << '}';
    if (!p.rays_.empty()) {
      os << " + cone{";
      for (std::size_t i = 0; i < p.rays_.size(); ++i) os << (i ? ", " : "") << p.rays_[i];
      os << '}';
    }
    return os;
  }

 private:
  std::size_t dim_;
  std::vector<RationalVector> vertices_;
  std::vector<RationalVector> rays_;
};

inline Polyhedron as_polyhedron(const Cone& k) { return Polyhedron::from_cone(k); }

}  // namespace svtakagi::exactgeom
