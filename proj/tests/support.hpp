#pragma once

// Shared test helpers: seeded generators and independent brute-force oracles.
// Nothing in here calls into the simplex code path.

#include <cstdint>
#include <random>
#include <vector>

#include "svtakagi/exactgeom.hpp"

namespace svtakagi::testing {

using exactgeom::Polyhedron;
using exactgeom::Rational;
using exactgeom::RationalVector;

inline Rational q(const char* s) { return exactgeom::parse_rational(s); }

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }

  /// Multiple of 1/den in [lo, hi].
  Rational rational(long lo, long hi, long den) {
    Rational r(integer(lo * den, hi * den), den);
    r.canonicalize();
    return r;
  }

  RationalVector vec(std::size_t d, long lo, long hi, long den) {
    RationalVector v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = rational(lo, hi, den);
    return v;
  }

  RationalVector nonzero_vec(std::size_t d, long lo, long hi, long den) {
    for (;;) {
      auto v = vec(d, lo, hi, den);
      if (!v.is_zero()) return v;
    }
  }

  /// Polyhedron with 1..max_vertices vertices and 0..max_rays rays.
  Polyhedron polyhedron(std::size_t d, std::size_t max_vertices, std::size_t max_rays, long range = 3) {
    std::size_t nv = 1 + rng_() % max_vertices;
    std::size_t nr = max_rays ? rng_() % (max_rays + 1) : 0;
    std::vector<RationalVector> v, r;
    for (std::size_t i = 0; i < nv; ++i) v.push_back(vec(d, -range, range, 2));
    for (std::size_t i = 0; i < nr; ++i) r.push_back(nonzero_vec(d, -2, 2, 1));
    return Polyhedron(d, v, r);
  }

  std::uint64_t raw() { return rng_(); }

 private:
  std::mt19937_64 rng_;
};

inline RationalVector perp(const RationalVector& e) { return RationalVector{-e[1], e[0]}; }

/// Support-function brute force for 2-d membership: p escapes P exactly when
/// some candidate direction w has w.p > sup_{x in P} w.x. Candidates are the
/// normals of and directions along every generator difference, every ray,
/// and every p - v; that list contains a separating direction whenever one
/// exists in the plane.
inline bool membership_by_separation_2d(const Polyhedron& P, const RationalVector& p) {
  std::vector<RationalVector> base;
  const auto& V = P.vertices();
  const auto& R = P.rays();
  for (std::size_t i = 0; i < V.size(); ++i) {
    for (std::size_t j = i + 1; j < V.size(); ++j) base.push_back(V[i] - V[j]);
    base.push_back(p - V[i]);
  }
  for (const auto& r : R) base.push_back(r);
  for (const auto& e : base) {
    if (e.is_zero()) continue;
    for (const auto& w : {e, -e, perp(e), -perp(e)}) {
      bool unbounded = false;
      for (const auto& r : R)
        if (exactgeom::dot(w, r) > 0) unbounded = true;
      if (unbounded) continue;
      Rational support = exactgeom::dot(w, V.front());
      for (const auto& v : V)
        if (exactgeom::dot(w, v) > support) support = exactgeom::dot(w, v);
      if (exactgeom::dot(w, p) > support) return false;
    }
  }
  return true;
}

/// All points lo + (i, j) * step for i, j = 0..n-1.
inline std::vector<RationalVector> raster(const Rational& lo, const Rational& step, int n) {
  std::vector<RationalVector> pts;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) pts.push_back(RationalVector{lo + i * step, lo + j * step});
  return pts;
}

}  // namespace svtakagi::testing
