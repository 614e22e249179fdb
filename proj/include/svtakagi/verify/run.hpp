#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "svtakagi/svmap/grid.hpp"
#include "svtakagi/svmap/transform.hpp"
#include "svtakagi/verify/checks.hpp"
#include "svtakagi/verify/oracle.hpp"
#include "svtakagi/verify/preconditions.hpp"
#include "svtakagi/verify/search.hpp"

namespace svtakagi::verify {

struct RunConfig {
  std::string id;
  Mode mode = Mode::convex;
  unsigned m_max = 6;
  SlackBox slack;
  bool oracle = true;
  bool probe = false;
  std::size_t probe_trials = 200;
  std::uint64_t probe_seed = 1;
};

/// One oracle record per (pair, t): passes when every step of the chain does.
inline CheckRecord condense(const OracleResult& o, const TestPair& p, const DyadicRational& t, Mode mode) {
  CheckRecord r;
  r.kind = std::string("oracle_") + mode_name(mode);
  r.pair = p.indices();
  r.t = t;
  r.level = t.exponent();
  for (const auto& s : o.steps) {
    if (s.status == Status::skipped) return s;
    if (s.failed()) {
      r.status = Status::fail;
      r.witness = s.witness;
      r.note = s.kind + " at " + s.note;
      return r;
    }
  }
  return r;
}

/// Full scenario run: preconditions, Jensen hypotheses, conclusions on the
/// dyadic lattice up to m_max, the inductive oracle and, on request, probing.
/// Combination points are adjoined to the grid first; pairs whose points
/// cannot be adjoined are reported as coverage gaps.
inline VerificationReport run_verification(const SetValuedMap& F, const ErrorMap& A, const ErrorMap& B,
                                           svmap::DomainGrid& grid,
                                           const std::vector<std::pair<std::size_t, std::size_t>>& index_pairs,
                                           const RunConfig& cfg) {
  if (F.domain_dim() != grid.dim() || A.domain_dim() != grid.dim() || B.domain_dim() != grid.dim())
    throw DimensionError("map and grid dimensions differ");
  if (A.value_dim() != F.value_dim() || B.value_dim() != F.value_dim())
    throw DimensionError("error maps and F have different value dimensions");
  const auto lattice = takagi::dyadic_lattice(cfg.m_max);
  const std::size_t base = grid.base_size();
  const std::vector<RationalVector> base_points(grid.points().begin(), grid.points().begin() + base);

  std::vector<TestPair> pairs;
  for (auto [i, j] : index_pairs) {
    if (i >= base || j >= base) throw std::invalid_argument("pair index outside the grid");
    pairs.push_back(TestPair{i, j, base_points[i], base_points[j], lattice});
  }
  // covered[k][l]: combination point of pair k at lattice[l] is in the grid
  std::vector<std::vector<bool>> covered(pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k)
    for (const auto& t : lattice) covered[k].push_back(grid.adjoin(detail::combination(t.value(), pairs[k].x, pairs[k].y)));

  std::vector<RationalVector> diffs{RationalVector(grid.dim())};
  for (const auto& p : pairs) diffs.push_back(p.x - p.y);
  const Cone K = svmap::rec_of_map(B.map(), diffs);

  VerificationReport rep;
  rep.scenario = cfg.id;
  rep.extra = Json{{"mode", mode_name(cfg.mode)},
                   {"m_max", cfg.m_max},
                   {"sampled_recession_cone", exactgeom::to_json(K)}};

  rep.append(validate_preconditions(F, K, base_points, cfg.mode));
  rep.append(check_jensen_pairs(F, A, B, pairs, cfg.mode).checks);

  const std::size_t L = lattice.size();
  auto combos = parallel_map(pairs.size() * L, [&](std::size_t c) {
    const TestPair& p = pairs[c / L];
    const DyadicRational& t = lattice[c % L];
    std::vector<CheckRecord> recs;
    const std::string kind = std::string("conclusion_") + mode_name(cfg.mode);
    if (!covered[c / L][c % L]) {
      recs.push_back(skipped_record(kind, p.indices(), t, "coverage gap: combination point outside the domain"));
      return recs;
    }
    std::optional<InclusionSets> sides;
    recs.push_back(detail::guarded(kind, p.indices(), t, [&] {
      CheckRecord r;
      r.kind = kind;
      r.pair = p.indices();
      r.t = t;
      r.slack = cfg.slack.radius;
      r.level = conclusion_level(t);
      sides = conclusion_sets(F, A, B, p.x, p.y, t, cfg.mode, r.level);
      r.set(exactgeom::subset(sides->lhs, sides->rhs, cfg.slack.radius));
      if (cfg.probe && r.failed()) r.margin = exactgeom::inclusion_margin(sides->lhs, sides->rhs);
      return r;
    }));
    if (cfg.oracle && sides) {
      auto o = inductive_oracle(F, A, B, p, t, cfg.mode, K);
      recs.push_back(condense(o, p, t, cfg.mode));
      recs.push_back(oracle_equivalence(o, *sides, p, t, cfg.mode));
    }
    return recs;
  });
  for (const auto& v : combos) rep.append(v);

  if (cfg.probe) {
    Family fam{F, A, B, base_points, cfg.mode, cfg.m_max};
    CheckRecord r;
    r.kind = "probe_counterexample";
    if (auto w = search_counterexample(fam, cfg.probe_trials, cfg.probe_seed)) {
      r.pair = {w->i, w->j};
      r.t = w->t;
      r.witness = w->witness;
      r.note = w->describe();
      if (w->kind == CounterexampleWitness::Kind::bug) r.status = Status::fail;
    } else {
      r.note = "no witness in " + std::to_string(cfg.probe_trials) + " trials";
    }
    rep.checks.push_back(r);
  }
  rep.sort();
  return rep;
}

}  // namespace svtakagi::verify
