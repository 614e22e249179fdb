#pragma once

#include <optional>
#include <string>
#include <vector>

#include "svtakagi/svmap/transform.hpp"
#include "svtakagi/verify/checks.hpp"
#include "svtakagi/verify/preconditions.hpp"

namespace svtakagi::verify {

inline constexpr unsigned kMaxOracleDepth = 24;

/// Step records of the bisection chain and the level-0 sets it derives.
struct OracleResult {
  std::vector<CheckRecord> steps;
  std::optional<InclusionSets> final_sets;  // empty when the chain left the domain

  bool passed() const {
    for (const auto& s : steps)
      if (!s.passed()) return false;
    return final_sets.has_value();
  }
};

namespace detail {

// First failing inclusion among the listed ones, or success.
inline InclusionResult all_of(std::initializer_list<std::pair<const Polyhedron*, const Polyhedron*>> incl) {
  for (const auto& [a, b] : incl) {
    auto r = exactgeom::subset(*a, *b);
    if (!r.included) return r;
  }
  return {};
}

inline CheckRecord step_record(const std::string& kind, const TestPair& p, const DyadicRational& t, unsigned level,
                               const Rational& tj, const InclusionResult& res) {
  CheckRecord r;
  r.kind = kind;
  r.pair = p.indices();
  r.t = t;
  r.level = level;
  r.set(res);
  r.note = "t_" + std::to_string(level) + " = " + tj.get_str();
  return r;
}

}  // namespace detail

/// Replays the bisection induction at t = p/2^m. With t_0 = t and
/// t_{j+1} = 2 t_j (t_j <= 1/2) or 2 t_j - 1 (t_j > 1/2), the chain ends at
/// t_m in {0, 1}. Level j pairs z_{j+1} = t_{j+1} x + (1 - t_{j+1}) y with the
/// anchor w = y (resp. x), whose midpoint is z_j and whose difference is
/// 2 d(t_j)(x - y). Each level checks the Jensen step on that pair and the
/// composed inclusion, so no bounded residual is needed. The sets reached at
/// level 0 are independent of the closed-form transform and must agree with
/// the conclusion sets.
inline OracleResult inductive_oracle(const SetValuedMap& F, const ErrorMap& A, const ErrorMap& B, const TestPair& p,
                                     const DyadicRational& t, Mode mode, const std::optional<Cone>& K = std::nullopt) {
  const unsigned m = t.exponent();
  if (m > kMaxOracleDepth) throw std::invalid_argument("oracle depth limit exceeded");
  if (t.value() < 0 || t.value() > 1) throw std::invalid_argument("oracle parameter must lie in [0, 1]");
  const std::string prefix = std::string("oracle_") + mode_name(mode);
  const RationalVector u = p.x - p.y;

  std::vector<Rational> ts{t.value()};
  for (unsigned j = 0; j < m; ++j) ts.push_back(ts[j] <= Rational(1, 2) ? Rational(2 * ts[j]) : Rational(2 * ts[j] - 1));

  OracleResult out;
  try {
    auto mix = [&](const Rational& s) {
      return detail::add(exactgeom::scale(F(p.x), s), exactgeom::scale(F(p.y), 1 - s));
    };
    // level m
    Polyhedron Asum = exactgeom::scale(A.at_zero(), 2);
    Polyhedron Bsum = exactgeom::scale(B.at_zero(), 2);
    Polyhedron Fz = F(detail::combination(ts[m], p.x, p.y));
    const bool cv = mode == Mode::convex;
    Polyhedron L = cv ? detail::add(mix(ts[m]), Asum) : detail::add(Fz, Asum);
    Polyhedron R = cv ? detail::add(Fz, Bsum) : detail::add(mix(ts[m]), Bsum);
    out.steps.push_back(detail::step_record(prefix + "_base", p, t, m, ts[m], exactgeom::subset(L, R)));

    for (unsigned jj = m; jj-- > 0;) {
      const Rational& tj = ts[jj];
      const bool low = tj <= Rational(1, 2);
      const Rational d = takagi::dist_to_integers(tj);
      const RationalVector uj = (2 * d) * u;
      const Polyhedron Fw = F(low ? p.y : p.x);
      const Polyhedron Fnext = Fz;
      Fz = F(detail::combination(tj, p.x, p.y));
      const Polyhedron Aj = A(uj), Bj = B(uj);
      const Polyhedron halfFw = detail::half(Fw);
      Asum = detail::add(Aj, detail::half(Asum));
      Bsum = detail::add(Bj, detail::half(Bsum));
      const Polyhedron jensen_avg = detail::half(exactgeom::minkowski_sum(Fnext, Fw));

      InclusionResult res;
      if (mode == Mode::convex) {
        const Polyhedron J_lhs = detail::add(jensen_avg, Aj), J_rhs = detail::add(Fz, Bj);
        const Polyhedron Lj = detail::add(detail::add(detail::half(L), halfFw), Aj);
        const Polyhedron Mj = detail::add(detail::add(detail::half(R), halfFw), Aj);
        const Polyhedron Rj = detail::add(Fz, Bsum);
        res = detail::all_of({{&J_lhs, &J_rhs}, {&Lj, &Mj}, {&Mj, &Rj}});
        L = Lj;
        R = Rj;
      } else {
        const Polyhedron J_lhs = detail::add(Fz, Aj), J_rhs = detail::add(jensen_avg, Bj);
        const Polyhedron Lj = detail::add(Fz, Asum);
        const Polyhedron M1 = detail::add(detail::add(detail::half(L), halfFw), Bj);
        const Polyhedron M2 = detail::add(detail::add(detail::half(R), halfFw), Bj);
        const Polyhedron Rj = detail::add(mix(tj), Bsum);
        res = detail::all_of({{&J_lhs, &J_rhs}, {&Lj, &M1}, {&M1, &M2}, {&M2, &Rj}});
        if (res.included && d < Rational(1, 2)) {
          const Cone KK = K ? *K : Cone(F.value_dim());
          res = k_convex_at(F, low ? p.y : p.x, KK, (1 - 2 * d) / (2 - 2 * d));
        }
        L = Lj;
        R = Rj;
      }
      out.steps.push_back(detail::step_record(prefix + "_step", p, t, jj, tj, res));
    }
    out.final_sets = InclusionSets{L, R};
  } catch (const std::out_of_range& e) {
    out.steps.push_back(skipped_record(prefix, p.indices(), t, std::string("coverage gap: ") + e.what()));
  }
  return out;
}

inline OracleResult inductive_oracle_convex(const SetValuedMap& F, const ErrorMap& A, const ErrorMap& B,
                                            const TestPair& p, const DyadicRational& t) {
  return inductive_oracle(F, A, B, p, t, Mode::convex);
}

inline OracleResult inductive_oracle_concave(const SetValuedMap& F, const ErrorMap& A, const ErrorMap& B,
                                             const TestPair& p, const DyadicRational& t,
                                             const std::optional<Cone>& K = std::nullopt) {
  return inductive_oracle(F, A, B, p, t, Mode::concave, K);
}

/// Mutual inclusion of the oracle's level-0 sets and the conclusion sets.
inline CheckRecord oracle_equivalence(const OracleResult& oracle, const InclusionSets& conclusion, const TestPair& p,
                                      const DyadicRational& t, Mode mode) {
  CheckRecord r;
  r.kind = std::string("oracle_equivalence_") + mode_name(mode);
  r.pair = p.indices();
  r.t = t;
  r.level = conclusion_level(t);
  if (!oracle.final_sets) {
    r.status = Status::skipped;
    r.note = "coverage gap";
    return r;
  }
  const auto& o = *oracle.final_sets;
  r.set(detail::all_of({{&o.lhs, &conclusion.lhs},
                        {&conclusion.lhs, &o.lhs},
                        {&o.rhs, &conclusion.rhs},
                        {&conclusion.rhs, &o.rhs}}));
  return r;
}

}  // namespace svtakagi::verify
