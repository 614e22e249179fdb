#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "svtakagi/exactgeom/cone_ops.hpp"
#include "svtakagi/exactgeom/operations.hpp"
#include "svtakagi/svmap/map.hpp"
#include "svtakagi/takagi/dyadic.hpp"
#include "svtakagi/takagi/error_function.hpp"
#include "svtakagi/takagi/series.hpp"

namespace svtakagi::svmap {

using exactgeom::InclusionResult;
using takagi::DyadicRational;

namespace detail {
inline void require_unit_parameter(const Rational& t) {
  if (t < 0 || t > 1) throw std::invalid_argument("Takagi parameter t must lie in [0, 1]");
}
}  // namespace detail

/// sum_{k=0}^{N} 2^{-k} S(2 d(2^k t) x), plus the closed tail 2^{-N} S(0)
/// whenever the remaining terms are all S(0): t = p/2^m with m <= N + 1, or S
/// constant. In those cases the result is S^T(t, x) exactly, since
/// sum_{k>N} 2^{-k} C = 2^{-N} C for convex C containing 0.
inline Polyhedron takagi_transform_truncated(const ErrorMap& S, const Rational& t, const RationalVector& x,
                                             unsigned N) {
  if (N < 1) throw std::invalid_argument("truncation level must be at least 1");
  detail::require_unit_parameter(t);
  if (x.size() != S.domain_dim()) throw DimensionError("transform point has wrong dimension");
  Polyhedron sum = Polyhedron::origin(S.value_dim());
  for (unsigned k = 0; k <= N; ++k) {
    const Rational s = 2 * takagi::dist_to_integers(t * exactgeom::pow2(k));
    auto term = exactgeom::scale(S(s * x), exactgeom::pow2(-static_cast<long>(k)));
    sum = exactgeom::reduce(exactgeom::minkowski_sum(sum, term));
  }
  const auto dyadic = DyadicRational::from_rational(t);
  if (S.map().is_constant() || (dyadic && dyadic->exponent() <= N + 1))
    sum = exactgeom::reduce(
        exactgeom::minkowski_sum(sum, exactgeom::scale(S.at_zero(), exactgeom::pow2(-static_cast<long>(N)))));
  return sum;
}

/// S^T(t, x) at dyadic t, evaluated at the smallest level that is already exact.
inline Polyhedron takagi_transform(const ErrorMap& S, const DyadicRational& t, const RationalVector& x) {
  return takagi_transform_truncated(S, t.value(), x, std::max(1u, t.exponent()));
}

/// K + phi^T(t, x) S0.
inline Polyhedron takagi_transform_structured(const Cone& K, const ErrorFunction& phi, const Polyhedron& S0,
                                              const DyadicRational& t, const RationalVector& x) {
  detail::require_unit_parameter(t.value());
  if (K.dim() != S0.dim()) throw DimensionError("cone and S0 dimensions differ");
  if (!exactgeom::contains_point(S0, RationalVector(S0.dim()))) throw std::invalid_argument("S0 must contain 0");
  const Rational c = takagi::phi_transform_dyadic(phi, t, x);
  return exactgeom::reduce(exactgeom::minkowski_sum(exactgeom::as_polyhedron(K), exactgeom::scale(S0, c)));
}

struct LemmaTTResult {
  InclusionResult forward;                  // S(x) within S^T(1/2, x)
  bool equality_hypothesis = false;         // S(0) within rec S(u) for all sampled u
  std::optional<InclusionResult> backward;  // S^T(1/2, x) within S(x), only under the hypothesis

  bool holds() const { return forward.included && (!backward || backward->included); }
  bool equality() const { return backward && backward->included && forward.included; }
};

/// Checks S(x) within S^T(1/2, x) at level N, and the reverse inclusion when
/// S(0) lies in the recession cone of S at x and every point of `sample`.
inline LemmaTTResult check_lemma_TT(const ErrorMap& S, const RationalVector& x, unsigned N,
                                    const std::vector<RationalVector>& sample = {}) {
  const Polyhedron value = S(x);
  const Polyhedron transformed = takagi_transform_truncated(S, Rational(1, 2), x, N);
  LemmaTTResult out;
  out.forward = exactgeom::subset(value, transformed);
  const Polyhedron zero = S.at_zero();
  out.equality_hypothesis = true;
  auto covered = [&](const Polyhedron& v) {
    return exactgeom::subset(zero, exactgeom::as_polyhedron(exactgeom::recession_cone(v))).included;
  };
  if (!covered(value)) out.equality_hypothesis = false;
  for (const auto& u : sample)
    if (out.equality_hypothesis && !covered(S(u))) out.equality_hypothesis = false;
  if (out.equality_hypothesis) out.backward = exactgeom::subset(transformed, value);
  return out;
}

/// Intersection of the recession cones of S over a finite sample; an outer
/// approximation of the intersection over the whole domain.
inline Cone rec_of_map(const SetValuedMap& S, const std::vector<RationalVector>& sample) {
  if (sample.empty()) throw std::invalid_argument("rec_of_map needs a nonempty sample");
  exactgeom::detail::require_cone_dim(S.value_dim());
  Cone acc = exactgeom::recession_cone(S(sample.front()));
  for (std::size_t i = 1; i < sample.size(); ++i) {
    Cone next = exactgeom::recession_cone(S(sample[i]));
    if (!exactgeom::same_cone(acc, next)) acc = exactgeom::cone_intersection(acc, next);
  }
  return acc;
}

}  // namespace svtakagi::svmap
