#pragma once

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "svtakagi/cli/builtins.hpp"
#include "svtakagi/cli/scenario.hpp"
#include "svtakagi/takagi/series.hpp"

namespace svtakagi::cli {

enum ExitCode : int { kPass = 0, kVerificationFailure = 1, kInputError = 2, kEnvironmentError = 3 };

struct EnvironmentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Maps exceptions from `fn` onto exit codes, reporting them on `err`.
template <class Fn>
int guarded_command(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << "\n";
    return kEnvironmentError;
  } catch (const CapabilityError& e) {
    err << "error: " << e.what() << "\n";
    return kEnvironmentError;
  } catch (const EnvironmentError& e) {
    err << "error: " << e.what() << "\n";
    return kEnvironmentError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kEnvironmentError;
  }
}

namespace detail {

inline void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw EnvironmentError("cannot write " + path.string());
  out << text;
  if (!out) throw EnvironmentError("write failed for " + path.string());
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline std::string cell(const Rational& q) { return q.get_str() + " (" + exactgeom::to_decimal(q, 12) + ")"; }

}  // namespace detail

struct VerifyOverrides {
  std::optional<Rational> slack;
  std::optional<unsigned> depth;
};

/// Runs one scenario file and writes its JSON report.
inline int cmd_verify(const std::string& scenario_path, const std::string& out_path, const VerifyOverrides& ov = {},
                      std::ostream& err = std::cerr) {
  return guarded_command(err, [&] {
    Scenario s = load_scenario(scenario_path);
    if (ov.slack) {
      if (*ov.slack < 0) throw ParseError("slack must be nonnegative");
      s.slack = *ov.slack;
    }
    if (ov.depth) {
      if (*ov.depth > kMaxDepth) throw CapabilityError("depth above " + std::to_string(kMaxDepth) + " is not supported");
      s.m_max = *ov.depth;
    }
    const auto rep = run_scenario(s);
    detail::write_file(out_path, detail::dump(verify::to_json(rep)));
    const auto sum = rep.summary();
    err << s.id << ": " << sum.pass << " pass, " << sum.fail << " fail, " << sum.skipped << " skipped\n";
    return rep.ok() ? kPass : kVerificationFailure;
  });
}

struct TakagiRequest {
  std::string alpha = "2";
  Rational t_min = 0;
  Rational t_max = 1;
  unsigned steps = 5;
  Rational tail = Rational(1, 1099511627776ul);
};

/// One CSV row per point of the uniform grid on [t_min, t_max]. Exact
/// orders 1 and 2 are evaluated exactly at dyadic points; other points and
/// orders are enclosed with a tail below `tail`.
inline std::string takagi_csv(const TakagiRequest& req, std::ostream& err) {
  if (req.steps < 2) throw std::invalid_argument("steps must be at least 2");
  if (req.t_min > req.t_max) throw std::invalid_argument("t_min exceeds t_max");
  if (req.tail <= 0) throw std::invalid_argument("tail bound must be positive");
  std::optional<unsigned> exact;
  double alpha = 0;
  try {
    const Rational a = exactgeom::parse_rational(req.alpha);
    if (a == 1 || a == 2) exact = static_cast<unsigned>(a.get_num().get_ui());
    alpha = a.get_d();
  } catch (const ParseError&) {
    std::size_t used = 0;
    try {
      alpha = std::stod(req.alpha, &used);
    } catch (const std::exception&) {
      throw ParseError("alpha must be a positive number, got \"" + req.alpha + "\"");
    }
    if (used != req.alpha.size()) throw ParseError("alpha must be a positive number, got \"" + req.alpha + "\"");
  }
  if (!(alpha > 0)) throw std::invalid_argument("alpha must be positive");
  if (!exact) err << "notice: alpha = " << req.alpha << " has no exact evaluation; using interval enclosures\n";

  std::string out = "t,value_lower,value_upper\n";
  const Rational h = (req.t_max - req.t_min) / (req.steps - 1);
  for (unsigned k = 0; k < req.steps; ++k) {
    const Rational t = req.t_min + h * k;
    takagi::BoundedValue v;
    auto dy = takagi::DyadicRational::from_rational(t);
    if (exact && dy) {
      const Rational e = takagi::takagi_alpha_dyadic(*dy, *exact);
      v = {e, e};
    } else {
      v = takagi::takagi_alpha(t, alpha, req.tail);
    }
    out += detail::cell(t) + "," + detail::cell(v.lower) + "," + detail::cell(v.upper) + "\n";
  }
  return out;
}

inline int cmd_takagi(const TakagiRequest& req, const std::string& out_path, std::ostream& err = std::cerr) {
  return guarded_command(err, [&] {
    const std::string csv = takagi_csv(req, err);
    detail::write_file(out_path, csv);
    return kPass;
  });
}

/// Runs the built-in scenarios into `out_dir` with an index.json.
inline int cmd_suite(const std::string& out_dir, std::ostream& err = std::cerr) {
  return guarded_command(err, [&] {
    namespace fs = std::filesystem;
    const fs::path dir(out_dir);
    const fs::path parent = dir.has_parent_path() ? dir.parent_path() : fs::path(".");
    std::error_code ec;
    if (!fs::is_directory(parent, ec)) throw EnvironmentError("parent directory " + parent.string() + " does not exist");
    fs::create_directory(dir, ec);
    if (ec || !fs::is_directory(dir)) throw EnvironmentError("cannot create " + dir.string());

    Json index{{"scenarios", Json::array()}};
    bool all_ok = true;
    for (const auto& s : builtin_scenarios()) {
      const auto rep = run_scenario(s);
      const std::string file = s.id + ".json";
      detail::write_file(dir / file, detail::dump(verify::to_json(rep)));
      detail::write_file(dir / (s.id + ".scenario.json"), detail::dump(to_json(s)));
      const auto sum = rep.summary();
      index["scenarios"].push_back(Json{{"id", s.id},
                                        {"report", file},
                                        {"ok", rep.ok()},
                                        {"summary", {{"pass", sum.pass}, {"fail", sum.fail}, {"skipped", sum.skipped}}}});
      err << s.id << ": " << (rep.ok() ? "ok" : "FAILED") << " (" << sum.pass << " pass, " << sum.fail << " fail, "
          << sum.skipped << " skipped)\n";
      all_ok = all_ok && rep.ok();
    }
    index["ok"] = all_ok;
    detail::write_file(dir / "index.json", detail::dump(index));
    return all_ok ? kPass : kVerificationFailure;
  });
}

}  // namespace svtakagi::cli
