#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "svtakagi/exactgeom/operations.hpp"
#include "svtakagi/svmap/map.hpp"
#include "svtakagi/svmap/transform.hpp"
#include "svtakagi/verify/parallel.hpp"
#include "svtakagi/verify/report.hpp"

namespace svtakagi::verify {

using exactgeom::Polyhedron;
using svmap::ErrorMap;
using svmap::SetValuedMap;

enum class Mode { convex, concave };

inline const char* mode_name(Mode m) { return m == Mode::convex ? "convex" : "concave"; }

/// Grid indices and points of one pair, plus the parameters to test on it.
struct TestPair {
  std::size_t i = 0, j = 0;
  RationalVector x, y;
  std::vector<DyadicRational> t_list;

  std::vector<std::size_t> indices() const { return {i, j}; }
};

/// Box [-r, r]^d added to right-hand sides; r = 0 is exact inclusion.
struct SlackBox {
  Rational radius = 0;
  explicit SlackBox(Rational r = 0) : radius(std::move(r)) {
    if (radius < 0) throw std::invalid_argument("slack radius must be nonnegative");
  }
};

/// The two sides of an inclusion lhs within rhs.
struct InclusionSets {
  Polyhedron lhs;
  Polyhedron rhs;
};

namespace detail {

inline Polyhedron add(const Polyhedron& a, const Polyhedron& b) {
  return exactgeom::reduce(exactgeom::minkowski_sum(a, b));
}

inline Polyhedron half(const Polyhedron& P) { return exactgeom::scale(P, Rational(1, 2)); }

inline RationalVector combination(const Rational& t, const RationalVector& x, const RationalVector& y) {
  return t * x + (1 - t) * y;
}

inline std::string context(const std::vector<std::size_t>& pair, const std::optional<DyadicRational>& t) {
  std::string s = "pair [";
  for (std::size_t k = 0; k < pair.size(); ++k) s += (k ? "," : "") + std::to_string(pair[k]);
  s += "]";
  if (t) s += " t=" + t->str();
  return s + ": ";
}

/// Runs fn; evaluations off a tabulated domain become a skipped record,
/// other errors are rethrown with the pair attached.
template <class Fn>
CheckRecord guarded(const std::string& kind, const std::vector<std::size_t>& pair,
                    const std::optional<DyadicRational>& t, Fn fn) {
  try {
    return fn();
  } catch (const std::out_of_range& e) {
    return skipped_record(kind, pair, t, std::string("coverage gap: ") + e.what());
  } catch (const DimensionError& e) {
    throw DimensionError(context(pair, t) + e.what());
  } catch (const CapabilityError& e) {
    throw CapabilityError(context(pair, t) + e.what());
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(context(pair, t) + e.what());
  }
}

}  // namespace detail

/// Sides of the Jensen-type hypothesis on (x, y).
///   convex:  (F(x) + F(y))/2 + A(x - y)  within  F((x + y)/2) + B(x - y)
///   concave: F((x + y)/2) + A(x - y)     within  (F(x) + F(y))/2 + B(x - y)
inline InclusionSets jensen_sets(const SetValuedMap& F, const ErrorMap& A, const ErrorMap& B, const RationalVector& x,
                                 const RationalVector& y, Mode mode) {
  const RationalVector u = x - y;
  const Polyhedron avg = detail::half(exactgeom::minkowski_sum(F(x), F(y)));
  const Polyhedron mid = F(detail::combination(Rational(1, 2), x, y));
  if (mode == Mode::convex) return {detail::add(avg, A(u)), detail::add(mid, B(u))};
  return {detail::add(mid, A(u)), detail::add(avg, B(u))};
}

inline CheckRecord check_jensen(const SetValuedMap& F, const ErrorMap& A, const ErrorMap& B, const TestPair& p,
                                Mode mode) {
  const std::string kind = std::string("jensen_") + mode_name(mode);
  return detail::guarded(kind, p.indices(), std::nullopt, [&] {
    CheckRecord r;
    r.kind = kind;
    r.pair = p.indices();
    auto sides = jensen_sets(F, A, B, p.x, p.y, mode);
    r.set(exactgeom::subset(sides.lhs, sides.rhs));
    return r;
  });
}

inline VerificationReport check_jensen_pairs(const SetValuedMap& F, const ErrorMap& A, const ErrorMap& B,
                                             const std::vector<TestPair>& pairs, Mode mode) {
  VerificationReport rep;
  rep.checks = parallel_map(pairs.size(), [&](std::size_t k) { return check_jensen(F, A, B, pairs[k], mode); });
  return rep;
}

inline VerificationReport check_jensen_convex(const SetValuedMap& F, const ErrorMap& A, const ErrorMap& B,
                                              const std::vector<TestPair>& pairs) {
  return check_jensen_pairs(F, A, B, pairs, Mode::convex);
}

inline VerificationReport check_jensen_concave(const SetValuedMap& F, const ErrorMap& A, const ErrorMap& B,
                                               const std::vector<TestPair>& pairs) {
  return check_jensen_pairs(F, A, B, pairs, Mode::concave);
}

/// Truncation level used for the conclusion at t; exact for dyadic t.
inline unsigned conclusion_level(const DyadicRational& t) { return std::max(1u, t.exponent()); }

/// Sides of the conclusion at t, with the error transforms at level N.
///   convex:  tF(x) + (1-t)F(y) + A^T(t, x-y)  within  F(tx + (1-t)y) + B^T(t, x-y)
///   concave: F(tx + (1-t)y) + A^T(t, x-y)     within  tF(x) + (1-t)F(y) + B^T(t, x-y)
inline InclusionSets conclusion_sets(const SetValuedMap& F, const ErrorMap& A, const ErrorMap& B,
                                     const RationalVector& x, const RationalVector& y, const DyadicRational& t,
                                     Mode mode, unsigned N) {
  const Rational tv = t.value();
  const RationalVector u = x - y;
  const Polyhedron comb =
      detail::add(exactgeom::scale(F(x), tv), exactgeom::scale(F(y), 1 - tv));
  const Polyhedron at = F(detail::combination(tv, x, y));
  const Polyhedron AT = svmap::takagi_transform_truncated(A, tv, u, N);
  const Polyhedron BT = svmap::takagi_transform_truncated(B, tv, u, N);
  if (mode == Mode::convex) return {detail::add(comb, AT), detail::add(at, BT)};
  return {detail::add(at, AT), detail::add(comb, BT)};
}

/// With `with_margin`, failing records carry the smallest slack that would pass.
inline CheckRecord check_conclusion(const SetValuedMap& F, const ErrorMap& A, const ErrorMap& B, const TestPair& p,
                                    const DyadicRational& t, const SlackBox& slack, Mode mode,
                                    bool with_margin = false) {
  const std::string kind = std::string("conclusion_") + mode_name(mode);
  return detail::guarded(kind, p.indices(), t, [&] {
    CheckRecord r;
    r.kind = kind;
    r.pair = p.indices();
    r.t = t;
    r.slack = slack.radius;
    r.level = conclusion_level(t);
    auto sides = conclusion_sets(F, A, B, p.x, p.y, t, mode, r.level);
    r.set(exactgeom::subset(sides.lhs, sides.rhs, slack.radius));
    if (with_margin && r.failed()) r.margin = exactgeom::inclusion_margin(sides.lhs, sides.rhs);
    return r;
  });
}

inline CheckRecord check_conclusion_convex(const SetValuedMap& F, const ErrorMap& A, const ErrorMap& B,
                                           const TestPair& p, const DyadicRational& t, const SlackBox& slack) {
  return check_conclusion(F, A, B, p, t, slack, Mode::convex);
}

inline CheckRecord check_conclusion_concave(const SetValuedMap& F, const ErrorMap& A, const ErrorMap& B,
                                            const TestPair& p, const DyadicRational& t, const SlackBox& slack) {
  return check_conclusion(F, A, B, p, t, slack, Mode::concave);
}

}  // namespace svtakagi::verify
