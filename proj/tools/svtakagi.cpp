#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "svtakagi/cli.hpp"

using namespace svtakagi;

int main(int argc, char** argv) {
  CLI::App app{"Takagi-type error functions and exact verification of Jensen-type set-valued inclusions"};
  app.require_subcommand(1);

  std::string scenario, out, slack;
  std::optional<unsigned> depth;
  auto* verify = app.add_subcommand("verify", "verify a scenario file and write a JSON report");
  verify->add_option("--scenario", scenario, "scenario JSON file")->required();
  verify->add_option("--out", out, "report path")->required();
  verify->add_option("--slack", slack, "slack radius as an exact rational");
  verify->add_option("--depth", depth, "largest dyadic exponent m");

  cli::TakagiRequest req;
  std::string from = "0", to = "1", tail;
  auto* tak = app.add_subcommand("takagi", "write Takagi function enclosures as CSV");
  tak->add_option("--alpha", req.alpha, "order alpha")->required();
  tak->add_option("--from", from, "first t as an exact rational");
  tak->add_option("--to", to, "last t as an exact rational");
  tak->add_option("--steps", req.steps, "number of grid points (>= 2)");
  tak->add_option("--tail", tail, "bound on the truncation tail as an exact rational");
  tak->add_option("--out", out, "CSV path")->required();

  auto* suite = app.add_subcommand("suite", "run the built-in scenarios");
  suite->add_option("--out", out, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kPass : cli::kInputError;
  }

  if (*verify) {
    cli::VerifyOverrides ov;
    ov.depth = depth;
    return cli::guarded_command(std::cerr, [&] {
      if (!slack.empty()) ov.slack = exactgeom::parse_rational(slack);
      return cli::cmd_verify(scenario, out, ov);
    });
  }
  if (*tak) {
    return cli::guarded_command(std::cerr, [&] {
      req.t_min = exactgeom::parse_rational(from);
      req.t_max = exactgeom::parse_rational(to);
      if (!tail.empty()) req.tail = exactgeom::parse_rational(tail);
      return cli::cmd_takagi(req, out);
    });
  }
  return cli::cmd_suite(out);
}
