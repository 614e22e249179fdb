#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace svtakagi;
using namespace svtakagi::exactgeom;
using svtakagi::testing::q;

TEST_CASE("parse_rational accepts p/q and canonicalizes", "[rational]") {
  CHECK(parse_rational("6/8") == Rational(3, 4));
  CHECK(parse_rational("-6/8") == Rational(-3, 4));
  CHECK(parse_rational("7") == 7);
  CHECK(parse_rational("0/5") == 0);
  CHECK(parse_rational("6/8").get_den() == 4);
}

TEST_CASE("parse_rational rejects inexact or malformed text", "[rational]") {
  CHECK_THROWS_AS(parse_rational("0.5"), ParseError);
  CHECK_THROWS_AS(parse_rational("1e3"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1/"), ParseError);
  CHECK_THROWS_AS(parse_rational("--1"), ParseError);
}

TEST_CASE("to_decimal rounds to twelve digits", "[rational]") {
  CHECK(to_decimal(q("3/4")) == "0.750000000000");
  CHECK(to_decimal(q("2/3")) == "0.666666666667");
  CHECK(to_decimal(q("-1/3")) == "-0.333333333333");
  CHECK(to_decimal(q("5")) == "5.000000000000");
  CHECK(to_decimal(q("0")) == "0.000000000000");
}

TEST_CASE("floor and pow2", "[rational]") {
  CHECK(floor(q("7/2")) == 3);
  CHECK(floor(q("-7/2")) == -4);
  CHECK(floor(q("4")) == 4);
  CHECK(pow2(3) == 8);
  CHECK(pow2(-3) == q("1/8"));
  CHECK(pow2(0) == 1);
}

TEST_CASE("RationalVector arithmetic is exact", "[rational]") {
  RationalVector a{q("1/2"), q("1/3")};
  RationalVector b{q("1/2"), q("2/3")};
  CHECK(a + b == RationalVector{1, 1});
  CHECK(q("3") * a == RationalVector{q("3/2"), 1});
  CHECK(dot(a, b) == q("1/4") + q("2/9"));
  CHECK(norm_l1(RationalVector{-1, 2}) == 3);
  CHECK(norm_linf(RationalVector{-3, 2}) == 3);
  CHECK(norm_sq_l2(RationalVector{-3, 4}) == 25);
  CHECK_THROWS_AS(a + RationalVector{1}, DimensionError);
}

TEST_CASE("simplex solves small programs exactly", "[simplex]") {
  // min x0 + x1, x0 + 2 x1 = 3, x0 - x1 + x2 = 0
  LinearProgram lp{{{1, 2, 0}, {1, -1, 1}}, {3, 0}, {1, 1, 0}};
  auto r = solve(lp);
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.value == q("3/2"));

  LinearProgram infeasible{{{1, 1}}, {-1}, {}};
  CHECK(solve(infeasible).status == LpStatus::infeasible);

  LinearProgram unbounded{{{1, -1}}, {0}, {-1, 0}};
  CHECK(solve(unbounded).status == LpStatus::unbounded);

  // Redundant equality rows are tolerated.
  CHECK(feasible({{1, 1}, {2, 2}}, {1, 2}));
  CHECK_FALSE(feasible({{1, 1}, {2, 2}}, {1, 3}));
}
