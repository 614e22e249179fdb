#pragma once

#include <string>
#include <vector>

#include "svtakagi/cli/scenario.hpp"
#include "svtakagi/svmap/polynomial.hpp"

namespace svtakagi::cli {

namespace builtin {

using exactgeom::Cone;
using exactgeom::Polyhedron;
using svmap::Polynomial;
using svmap::PolynomialMap;
using takagi::ErrorFunction;

inline Rational r(const char* s) { return exactgeom::parse_rational(s); }

inline RationalVector fill(std::size_t d, const Rational& v) {
  RationalVector x(d);
  for (std::size_t i = 0; i < d; ++i) x[i] = v;
  return x;
}

inline GridSpec box(std::size_t d, const Rational& lo, const Rational& hi, const Rational& step) {
  GridSpec g;
  g.kind = RegionKind::box;
  g.lo = fill(d, lo);
  g.hi = fill(d, hi);
  g.step = step;
  return g;
}

inline SetValuedMap scalar(std::size_t d, Polynomial p) { return SetValuedMap::singleton(PolynomialMap(d, {std::move(p)})); }

inline SetValuedMap zero(std::size_t d, std::size_t vd) { return SetValuedMap::constant(d, Polyhedron::origin(vd)); }

inline SetValuedMap half_line(std::size_t d) {
  return SetValuedMap::constant(d, exactgeom::as_polyhedron(Cone(1, {RationalVector{1}})));
}

// R_+ + phi(u) [-1, 0]
inline SetValuedMap approximate(std::size_t d, const ErrorFunction& phi) {
  return SetValuedMap::cone_plus_scaled(d, Cone(1, {RationalVector{1}}), phi, Polyhedron::interval(-1, 0));
}

// phi(u) [-1, 0] with a trivial cone
inline SetValuedMap strong(std::size_t d, const ErrorFunction& phi) {
  return SetValuedMap::cone_plus_scaled(d, Cone(1), phi, Polyhedron::interval(-1, 0));
}

inline Scenario make(std::string id, std::size_t dim, GridSpec grid, SetValuedMap F, SetValuedMap A, SetValuedMap B,
                     Mode mode, PairSpec pairs, unsigned m_max = 6) {
  Scenario s{std::move(id), dim, std::move(grid), std::move(F), std::move(A), std::move(B), std::move(pairs)};
  s.m_max = m_max;
  s.mode = mode;
  return s;
}

inline PairSpec sample(std::size_t count, std::uint64_t seed) {
  PairSpec p;
  p.mode = PairMode::sample;
  p.count = count;
  p.seed = seed;
  return p;
}

}  // namespace builtin

/// f = x^4 - x on [-1, 1] with A = {0}, B = R_+.
inline Scenario bernstein_doetsch() {
  using namespace builtin;
  Polynomial f(1, {{r("1"), {4}}, {r("-1"), {1}}});
  return make("bernstein-doetsch", 1, box(1, -1, 1, r("1/4")), scalar(1, f), zero(1, 1), half_line(1), Mode::convex,
              PairSpec{});
}

/// f = -x^2 on [0, 1], which is 1/4-Jensen convex.
inline Scenario constant_error() {
  using namespace builtin;
  return make("constant-error", 1, box(1, 0, 1, r("1/8")), scalar(1, svmap::scaled_sq_norm(1, -1)), zero(1, 1),
              approximate(1, ErrorFunction::constant(r("1/4"))), Mode::convex, PairSpec{});
}

/// f = -x^2 on [-1, 1] with the error (1/2)|u|_1.
inline Scenario l1_error() {
  using namespace builtin;
  return make("l1-error", 1, box(1, -1, 1, r("1/4")), scalar(1, svmap::scaled_sq_norm(1, -1)), zero(1, 1),
              approximate(1, ErrorFunction::l1(r("1/2"))), Mode::convex, PairSpec{});
}

/// F(x) = {|x|^2} on a 9 x 9 grid in [-2, 2]^2 with modulus 1/4.
inline Scenario strong_quadratic() {
  using namespace builtin;
  return make("strong-quadratic", 2, box(2, -2, 2, r("1/2")), scalar(2, svmap::scaled_sq_norm(2, 1)),
              strong(2, ErrorFunction::sq_l2(r("1/4"))), half_line(2), Mode::convex, sample(60, 2024));
}

/// F(x) = {-|x|^2}, the concave mirror.
inline Scenario strong_quadratic_concave() {
  using namespace builtin;
  return make("strong-quadratic-concave", 2, box(2, -2, 2, r("1/2")), scalar(2, svmap::scaled_sq_norm(2, -1)),
              strong(2, ErrorFunction::sq_l2(r("1/4"))), half_line(2), Mode::concave, sample(60, 2025));
}

namespace builtin {

// F(x) = {(s |x|^2, x_1 - 2 x_2 + 1/2)} + [0, e_2] + K with K = cone{e_1}
inline Scenario cone_valued(std::string id, const Rational& s, Mode mode, std::uint64_t seed) {
  const Cone K(2, {RationalVector{1, 0}});
  std::vector<Polynomial> f{svmap::scaled_sq_norm(2, s), svmap::affine(r("1/2"), {1, -2})};
  Polyhedron plus(2, {RationalVector{0, 0}, RationalVector{0, 1}}, K.rays());
  auto F = SetValuedMap::singleton(PolynomialMap(2, std::move(f)), plus);
  auto A = SetValuedMap::cone_plus_scaled(2, Cone(2), ErrorFunction::sq_l2(r("1/4")),
                                          Polyhedron(2, {RationalVector{0, 0}, RationalVector{-1, 0}}, {}));
  auto B = SetValuedMap::constant(2, exactgeom::as_polyhedron(K));
  return make(std::move(id), 2, box(2, -1, 1, r("1/2")), F, A, B, mode, sample(24, seed), 5);
}

}  // namespace builtin

/// Set-valued F with values (|x|^2, affine) + segment + K, K = R_+ x {0}.
inline Scenario cone_valued() { return builtin::cone_valued("cone-valued", 1, Mode::convex, 7); }

/// Concave mirror with first component -|x|^2.
inline Scenario cone_valued_concave() { return builtin::cone_valued("cone-valued-concave", -1, Mode::concave, 8); }

inline std::vector<Scenario> builtin_scenarios() {
  return {bernstein_doetsch(),         constant_error(), l1_error(),          strong_quadratic(),
          strong_quadratic_concave(), cone_valued(),    cone_valued_concave()};
}

}  // namespace svtakagi::cli
