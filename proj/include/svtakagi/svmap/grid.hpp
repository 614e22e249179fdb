#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "svtakagi/exactgeom/operations.hpp"
#include "svtakagi/exactgeom/rational.hpp"

namespace svtakagi::svmap {

using exactgeom::Polyhedron;
using exactgeom::Rational;
using exactgeom::RationalVector;

enum class RegionKind { box, simplex, points };

inline const char* region_name(RegionKind k) {
  switch (k) {
    case RegionKind::box: return "box";
    case RegionKind::simplex: return "simplex";
    case RegionKind::points: return "points";
  }
  return "?";
}

/// Finite sample of a domain D. Box and simplex grids carry their region as a
/// convexity certificate; explicit point lists carry none.
class DomainGrid {
 public:
  /// Lattice lo + k * step inside the box [lo, hi].
  static DomainGrid box(const RationalVector& lo, const RationalVector& hi, const Rational& step) {
    if (lo.size() != hi.size() || lo.size() == 0) throw DimensionError("box corners must share a positive dimension");
    if (step <= 0) throw std::invalid_argument("grid step must be positive");
    std::vector<std::vector<Rational>> axes(lo.size());
    for (std::size_t i = 0; i < lo.size(); ++i) {
      if (hi[i] < lo[i]) throw std::invalid_argument("box upper corner below lower corner");
      for (Rational v = lo[i]; v <= hi[i]; v += step) axes[i].push_back(v);
    }
    std::vector<RationalVector> pts;
    RationalVector cur(lo.size());
    product(axes, 0, cur, pts);
    std::vector<RationalVector> region{lo, hi};
    return DomainGrid(RegionKind::box, lo.size(), std::move(region), std::move(pts));
  }

  /// Barycentric lattice with denominator `divisions` on conv(vertices).
  static DomainGrid simplex(const std::vector<RationalVector>& vertices, unsigned divisions) {
    if (vertices.empty()) throw std::invalid_argument("simplex needs vertices");
    if (divisions == 0) throw std::invalid_argument("simplex divisions must be positive");
    const std::size_t d = vertices.front().size();
    for (const auto& v : vertices)
      if (v.size() != d) throw DimensionError("simplex vertices differ in dimension");
    std::vector<RationalVector> pts;
    std::vector<unsigned> weights(vertices.size(), 0);
    barycentric(vertices, divisions, 0, divisions, weights, pts);
    return DomainGrid(RegionKind::simplex, d, vertices, std::move(pts));
  }

  static DomainGrid points(std::vector<RationalVector> pts) {
    if (pts.empty()) throw std::invalid_argument("point grid must be nonempty");
    const std::size_t d = pts.front().size();
    for (const auto& p : pts)
      if (p.size() != d) throw DimensionError("grid points differ in dimension");
    return DomainGrid(RegionKind::points, d, {}, std::move(pts));
  }

  std::size_t dim() const { return dim_; }
  RegionKind region_kind() const { return kind_; }
  bool has_convexity_certificate() const { return kind_ != RegionKind::points; }
  const std::vector<RationalVector>& region() const { return region_; }

  /// Generated points first, adjoined points after, each without repeats.
  const std::vector<RationalVector>& points() const { return points_; }
  std::size_t base_size() const { return base_size_; }

  /// Membership in the declared region (in the sample itself for point grids).
  bool in_region(const RationalVector& x) const {
    if (x.size() != dim_) return false;
    switch (kind_) {
      case RegionKind::box:
        for (std::size_t i = 0; i < dim_; ++i)
          if (x[i] < region_[0][i] || x[i] > region_[1][i]) return false;
        return true;
      case RegionKind::simplex:
        return exactgeom::contains_point(Polyhedron(dim_, region_, {}), x);
      case RegionKind::points:
        return seen_.count(x) > 0;
    }
    return false;
  }

  /// Adds x when it lies in the region; returns whether x is now a grid point.
  bool adjoin(const RationalVector& x) {
    if (seen_.count(x)) return true;
    if (!in_region(x)) return false;
    seen_.insert(x);
    points_.push_back(x);
    return true;
  }

  bool contains(const RationalVector& x) const { return seen_.count(x) > 0; }

 private:
  DomainGrid(RegionKind kind, std::size_t dim, std::vector<RationalVector> region, std::vector<RationalVector> pts)
      : kind_(kind), dim_(dim), region_(std::move(region)) {
    for (auto& p : pts)
      if (seen_.insert(p).second) points_.push_back(std::move(p));
    if (points_.empty()) throw std::invalid_argument("grid has no points");
    base_size_ = points_.size();
  }

  static void product(const std::vector<std::vector<Rational>>& axes, std::size_t i, RationalVector& cur,
                      std::vector<RationalVector>& out) {
    if (i == axes.size()) {
      out.push_back(cur);
      return;
    }
    for (const auto& v : axes[i]) {
      cur[i] = v;
      product(axes, i + 1, cur, out);
    }
  }

  static void barycentric(const std::vector<RationalVector>& V, unsigned n, std::size_t i, unsigned left,
                          std::vector<unsigned>& w, std::vector<RationalVector>& out) {
    if (i + 1 == V.size()) {
      w[i] = left;
      RationalVector p(V.front().size());
      for (std::size_t k = 0; k < V.size(); ++k) {
        Rational c(w[k], n);
        c.canonicalize();
        p += V[k] * c;
      }
      out.push_back(p);
      return;
    }
    for (unsigned a = 0; a <= left; ++a) {
      w[i] = a;
      barycentric(V, n, i + 1, left - a, w, out);
    }
  }

  RegionKind kind_;
  std::size_t dim_;
  std::vector<RationalVector> region_;
  std::vector<RationalVector> points_;
  std::set<RationalVector> seen_;
  std::size_t base_size_ = 0;
};

}  // namespace svtakagi::svmap
