#pragma once

#include <mpfr.h>

#include <cmath>
#include <stdexcept>

#include "svtakagi/exactgeom/rational.hpp"
#include "svtakagi/takagi/dyadic.hpp"

namespace svtakagi::takagi {

/// Closed enclosure [lower, upper] of a real value.
struct BoundedValue {
  Rational lower;
  Rational upper;

  bool contains(const Rational& x) const { return lower <= x && x <= upper; }
  Rational width() const { return upper - lower; }
  Rational midpoint() const { return (lower + upper) / 2; }
};

/// Distance from t to the nearest integer; lies in [0, 1/2].
inline Rational dist_to_integers(const Rational& t) {
  Rational frac = t - Rational(exactgeom::floor(t));
  Rational other = 1 - frac;
  return frac < other ? frac : other;
}

/// Exact T_alpha(t) = sum_{n<m} 2^{alpha-n} d(2^n t)^alpha for t = p/2^m.
/// Terms with n >= m vanish because 2^n t is an integer there.
inline Rational takagi_alpha_dyadic(const DyadicRational& t, unsigned alpha) {
  if (alpha != 1 && alpha != 2) throw std::invalid_argument("exact Takagi evaluation supports alpha in {1, 2}");
  const Rational x = t.value();
  Rational sum = 0;
  for (unsigned n = 0; n < t.exponent(); ++n) {
    Rational d = dist_to_integers(x * exactgeom::pow2(n));
    sum += exactgeom::pow2(static_cast<long>(alpha) - static_cast<long>(n)) * exactgeom::pow(d, alpha);
  }
  return sum;
}

/// Smallest N with 2^{1-N} <= tail_bound.
inline unsigned truncation_level(const Rational& tail_bound) {
  if (tail_bound <= 0) throw std::invalid_argument("tail bound must be positive");
  unsigned n = 0;
  while (exactgeom::pow2(1 - static_cast<long>(n)) > tail_bound) ++n;
  return n;
}

namespace detail {

// Outward-rounded rational enclosure of base^alpha for base in [0, 1].
inline BoundedValue power_enclosure(const Rational& base, double alpha) {
  if (base == 0) return {0, 0};
  BoundedValue out;
  mpfr_t b, a, r;
  mpfr_inits2(256, b, a, r, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_d(a, alpha, MPFR_RNDN);  // exact: alpha is a binary64 value
  mpfr_set_q(b, base.get_mpq_t(), MPFR_RNDD);
  mpfr_pow(r, b, a, MPFR_RNDD);
  mpfr_get_q(out.lower.get_mpq_t(), r);
  mpfr_set_q(b, base.get_mpq_t(), MPFR_RNDU);
  mpfr_pow(r, b, a, MPFR_RNDU);
  mpfr_get_q(out.upper.get_mpq_t(), r);
  mpfr_clears(b, a, r, static_cast<mpfr_ptr>(nullptr));
  return out;
}

}  // namespace detail

/// Enclosure of T_alpha(t) for any rational t and real alpha > 0.
///
/// The partial sum runs to N with 2^{1-N} <= tail_bound; every term is at most
/// 2^{-n} because d <= 1/2, so the tail is at most 2^{1-N}. Integer alpha is
/// summed exactly, other alpha with outward-rounded MPFR powers.
inline BoundedValue takagi_alpha(const Rational& t, double alpha, const Rational& tail_bound) {
  if (!(alpha > 0) || !std::isfinite(alpha)) throw std::invalid_argument("alpha must be a positive real");
  const unsigned N = truncation_level(tail_bound);
  const bool integral = alpha == std::floor(alpha) && alpha <= 64;
  Rational lo = 0, hi = 0;
  for (unsigned n = 0; n < N; ++n) {
    Rational two_d = 2 * dist_to_integers(t * exactgeom::pow2(n));
    Rational scale = exactgeom::pow2(-static_cast<long>(n));
    if (integral) {
      Rational term = scale * exactgeom::pow(two_d, static_cast<unsigned>(alpha));
      lo += term;
      hi += term;
    } else {
      auto p = detail::power_enclosure(two_d, alpha);
      lo += scale * p.lower;
      hi += scale * p.upper;
    }
  }
  return {lo, hi + exactgeom::pow2(1 - static_cast<long>(N))};
}

/// Enclosure of the classical Takagi function sum 2^{-n} d(2^n t).
inline BoundedValue takagi_classic(const Rational& t, const Rational& tail_bound) {
  const unsigned N = truncation_level(tail_bound);
  Rational partial = 0;
  for (unsigned n = 0; n < N; ++n)
    partial += exactgeom::pow2(-static_cast<long>(n)) * dist_to_integers(t * exactgeom::pow2(n));
  return {partial, partial + exactgeom::pow2(1 - static_cast<long>(N))};
}

/// |T_a(t) - 2^a d(t)^a - T_a(2t)/2|, computed exactly on dyadic t.
inline Rational functional_equation_residual(unsigned alpha, const DyadicRational& t) {
  const Rational lhs = takagi_alpha_dyadic(t, alpha);
  const auto twice = *DyadicRational::from_rational(2 * t.value());
  const Rational rhs = exactgeom::pow2(alpha) * exactgeom::pow(dist_to_integers(t.value()), alpha) +
                       takagi_alpha_dyadic(twice, alpha) / 2;
  return abs(lhs - rhs);
}

}  // namespace svtakagi::takagi
