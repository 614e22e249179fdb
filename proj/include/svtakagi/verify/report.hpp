#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "svtakagi/exactgeom/json.hpp"
#include "svtakagi/exactgeom/operations.hpp"
#include "svtakagi/takagi/dyadic.hpp"

namespace svtakagi::verify {

using exactgeom::InclusionResult;
using exactgeom::Json;
using exactgeom::Rational;
using exactgeom::RationalVector;
using exactgeom::Witness;
using takagi::DyadicRational;

enum class Status { pass, fail, skipped };

/// One check. `pair` holds grid indices: two for pair checks, one for
/// pointwise preconditions, none for scenario-wide records.
struct CheckRecord {
  std::string kind;
  std::vector<std::size_t> pair;
  std::optional<DyadicRational> t;
  Status status = Status::pass;
  std::optional<Witness> witness;
  Rational slack = 0;
  unsigned level = 0;
  std::string note;
  std::optional<Rational> margin;

  bool passed() const { return status == Status::pass; }
  bool failed() const { return status == Status::fail; }

  void set(const InclusionResult& r) {
    status = r.included ? Status::pass : Status::fail;
    witness = r.witness;
  }
};

inline CheckRecord skipped_record(std::string kind, std::vector<std::size_t> pair, std::optional<DyadicRational> t,
                                  std::string note) {
  CheckRecord r;
  r.kind = std::move(kind);
  r.pair = std::move(pair);
  r.t = std::move(t);
  r.status = Status::skipped;
  r.note = std::move(note);
  return r;
}

struct Summary {
  std::size_t pass = 0, fail = 0, skipped = 0;
};

struct VerificationReport {
  std::string scenario;
  std::vector<CheckRecord> checks;
  std::optional<Json> extra;  // scenario-level data such as the sampled recession cone

  Summary summary() const {
    Summary s;
    for (const auto& c : checks) {
      if (c.status == Status::pass) ++s.pass;
      else if (c.status == Status::fail) ++s.fail;
      else ++s.skipped;
    }
    return s;
  }

  bool ok() const { return summary().fail == 0; }

  void append(const std::vector<CheckRecord>& more) { checks.insert(checks.end(), more.begin(), more.end()); }

  /// Stable order by (pair, t); records of one (pair, t) keep insertion order.
  void sort() {
    std::stable_sort(checks.begin(), checks.end(), [](const CheckRecord& a, const CheckRecord& b) {
      if (a.pair != b.pair) return a.pair < b.pair;
      if (a.t.has_value() != b.t.has_value()) return !a.t.has_value();
      return a.t && *a.t < *b.t;
    });
  }
};

inline Json to_json(const CheckRecord& r) {
  Json j;
  j["kind"] = r.kind;
  j["pair"] = r.pair;
  j["t"] = r.t ? Json(r.t->str()) : Json(nullptr);
  j["pass"] = r.status == Status::skipped ? Json(nullptr) : Json(r.status == Status::pass);
  if (r.witness) {
    j["witness"] = exactgeom::to_json(r.witness->point);
    if (r.witness->is_ray) j["witness_is_ray"] = true;
  } else {
    j["witness"] = nullptr;
  }
  j["slack"] = exactgeom::to_json(r.slack);
  j["level"] = r.level;
  if (r.margin) j["margin"] = exactgeom::to_json(*r.margin);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

inline Json to_json(const VerificationReport& rep) {
  Json j;
  j["scenario"] = rep.scenario;
  if (rep.extra)
    for (const auto& [k, v] : rep.extra->items()) j[k] = v;
  j["checks"] = Json::array();
  for (const auto& c : rep.checks) j["checks"].push_back(to_json(c));
  const auto s = rep.summary();
  j["summary"] = Json{{"pass", s.pass}, {"fail", s.fail}, {"skipped", s.skipped}};
  return j;
}

}  // namespace svtakagi::verify
