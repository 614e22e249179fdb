#include <catch_amalgamated.hpp>

#include <cstdlib>

#include "support.hpp"
#include "svtakagi/verify.hpp"

using namespace svtakagi;
using namespace svtakagi::verify;
using exactgeom::Integer;
using svmap::PolynomialMap;
using svmap::affine;
using svmap::scaled_sq_norm;
using svtakagi::testing::Gen;
using svtakagi::testing::q;
using takagi::ErrorFunction;

namespace {

RationalVector v1(const Rational& a) { return RationalVector{a}; }
DyadicRational dy(long p, unsigned m) { return DyadicRational(Integer(p), m); }

Cone half_line() { return Cone(1, {RationalVector{1}}); }
Polyhedron neg_unit() { return Polyhedron::interval(q("-1"), 0); }

SetValuedMap quad(std::size_t d, const Rational& c) { return SetValuedMap::singleton(PolynomialMap(d, {scaled_sq_norm(d, c)})); }

ErrorMap zero1(std::size_t d) { return ErrorMap::zero(d, 1); }
ErrorMap cone1(std::size_t d) { return ErrorMap(SetValuedMap::constant(d, exactgeom::as_polyhedron(half_line()))); }
ErrorMap strong_error(std::size_t d, const Rational& c) {
  return ErrorMap(SetValuedMap::cone_plus_scaled(d, Cone(1), ErrorFunction::sq_l2(c), neg_unit()));
}
ErrorMap approx_error(std::size_t d, const ErrorFunction& phi) {
  return ErrorMap(SetValuedMap::cone_plus_scaled(d, half_line(), phi, neg_unit()));
}

TestPair pair1(const char* x, const char* y) { return TestPair{0, 1, v1(q(x)), v1(q(y)), {}}; }

Rational lowest(const Polyhedron& P) {
  Rational lo = P.vertices().front()[0];
  for (const auto& v : P.vertices()) lo = std::min(lo, v[0]);
  return lo;
}

}  // namespace

TEST_CASE("check_jensen_convex examples", "[verify]") {
  std::vector<TestPair> pairs{pair1("-2", "3"), pair1("1/2", "1/3"), pair1("0", "0")};
  auto pass = check_jensen_convex(quad(1, 1), zero1(1), cone1(1), pairs);
  CHECK(pass.ok());

  // (x^2 + y^2)/2 - ((x + y)/2)^2 = (x - y)^2 / 4: the strong hypothesis is tight.
  auto strong = check_jensen_convex(quad(1, 1), strong_error(1, q("1/4")), cone1(1), pairs);
  CHECK(strong.ok());
  auto sides = jensen_sets(quad(1, 1), strong_error(1, q("1/4")), cone1(1), v1(q("-2")), v1(q("3")), Mode::convex);
  CHECK(lowest(sides.lhs) == lowest(sides.rhs));

  auto fail = check_jensen_convex(quad(1, -1), zero1(1), zero1(1), pairs);
  CHECK(fail.summary().fail == 2);
  REQUIRE(fail.checks[0].failed());
  CHECK(fail.checks[0].witness.has_value());
  CHECK(fail.checks[2].passed());
}

TEST_CASE("check_jensen_concave examples", "[verify]") {
  std::vector<TestPair> pairs{pair1("-2", "3"), pair1("1/2", "1/3")};
  CHECK(check_jensen_concave(quad(1, -1), zero1(1), cone1(1), pairs).ok());
  auto constant = SetValuedMap::constant(1, Polyhedron::interval(q("-1"), q("5")));
  CHECK(check_jensen_concave(constant, zero1(1), zero1(1), pairs).ok());
  CHECK(check_jensen_concave(quad(1, 1), zero1(1), zero1(1), pairs).summary().fail == 2);
}

TEST_CASE("check_conclusion_convex examples", "[verify]") {
  auto F = quad(1, 1);
  auto A = strong_error(1, q("1/4"));
  auto B = cone1(1);
  auto p = pair1("-3/2", "2");
  for (auto t : takagi::dyadic_lattice(5)) {
    auto r = check_conclusion_convex(F, A, B, p, t, SlackBox());
    REQUIRE(r.passed());
    // t f(x) + (1 - t) f(y) - f(tx + (1 - t)y) = t(1 - t)(x - y)^2 = (1/4) T_2(t) (x - y)^2
    auto sides = conclusion_sets(F, A, B, p.x, p.y, t, Mode::convex, conclusion_level(t));
    REQUIRE(lowest(sides.lhs) == lowest(sides.rhs));
  }

  // endpoints: F(x) + 2A(0) within F(x) + 2B(0)
  auto end = conclusion_sets(F, A, B, p.x, p.y, dy(1, 0), Mode::convex, 1);
  CHECK(exactgeom::same_set(end.lhs, F(p.x)));

  // f = -x^2 on [0, 1] is 1/4-Jensen convex, so the conclusion holds with 2 eps.
  const Rational eps = q("1/4");
  auto nn = approx_error(1, ErrorFunction::constant(eps));
  auto nf = quad(1, -1);
  REQUIRE(check_jensen(nf, zero1(1), nn, pair1("0", "1"), Mode::convex).passed());
  for (auto t : takagi::dyadic_lattice(4)) {
    CHECK(check_conclusion_convex(nf, zero1(1), nn, pair1("0", "1"), t, SlackBox()).passed());
    auto s = conclusion_sets(nf, zero1(1), nn, v1(0), v1(1), t, Mode::convex, conclusion_level(t));
    const Rational z = 1 - t.value();
    CHECK(lowest(s.rhs) == -z * z - 2 * eps);
  }
}

TEST_CASE("check_conclusion_concave examples", "[verify]") {
  auto F = quad(1, -1);
  auto A = strong_error(1, q("1/4"));
  auto B = cone1(1);
  auto p = pair1("2", "-1/2");
  for (auto t : takagi::dyadic_lattice(5)) REQUIRE(check_conclusion_concave(F, A, B, p, t, SlackBox()).passed());
  auto end = conclusion_sets(F, A, B, p.x, p.y, dy(0, 0), Mode::concave, 1);
  CHECK(exactgeom::same_set(end.lhs, F(p.y)));
  auto nn = approx_error(1, ErrorFunction::constant(q("1/4")));
  for (auto t : takagi::dyadic_lattice(4))
    CHECK(check_conclusion_concave(quad(1, 1), zero1(1), nn, pair1("0", "1"), t, SlackBox()).passed());
}

TEST_CASE("slack boxes", "[verify]") {
  auto F = quad(1, 1);
  auto r = check_conclusion_convex(F, strong_error(1, q("1/2")), cone1(1), pair1("0", "2"), dy(1, 1), SlackBox());
  CHECK(r.failed());
  // lhs reaches 2 - (1/2) * 4 = 0 while the rhs starts at f(1) = 1
  auto wide = check_conclusion_convex(F, strong_error(1, q("1/2")), cone1(1), pair1("0", "2"), dy(1, 1), SlackBox(1));
  CHECK(wide.passed());
  CHECK(wide.slack == 1);
  CHECK_THROWS(SlackBox(-1));
  auto probe = check_conclusion(F, strong_error(1, q("1/2")), cone1(1), pair1("0", "2"), dy(1, 1), SlackBox(),
                                Mode::convex, true);
  REQUIRE(probe.margin.has_value());
  CHECK(*probe.margin == 1);
}

TEST_CASE("inductive oracle examples", "[verify]") {
  auto F = quad(1, 1);
  auto A = strong_error(1, q("1/4"));
  auto B = cone1(1);
  auto p = pair1("-1", "2");

  auto half = inductive_oracle_convex(F, A, B, p, dy(1, 1));
  REQUIRE(half.passed());
  REQUIRE(half.steps.size() == 2);  // base at t_1 = 1, one bisection
  CHECK(half.steps[1].level == 0);

  for (auto t : {dy(1, 2), dy(3, 3)}) {
    auto o = inductive_oracle_convex(F, A, B, p, t);
    REQUIRE(o.passed());
    CHECK(o.steps.size() == t.exponent() + 1);
    auto sides = conclusion_sets(F, A, B, p.x, p.y, t, Mode::convex, conclusion_level(t));
    CHECK(oracle_equivalence(o, sides, p, t, Mode::convex).passed());
  }

  auto neg = inductive_oracle_convex(quad(1, -1), zero1(1), zero1(1), p, dy(3, 3));
  CHECK_FALSE(neg.passed());

  auto cc = inductive_oracle_concave(quad(1, -1), A, B, p, dy(5, 4));
  CHECK(cc.passed());
  CHECK_THROWS(inductive_oracle_convex(F, A, B, p, dy(1, 30)));
}

TEST_CASE("validate_preconditions examples", "[verify]") {
  std::vector<RationalVector> pts;
  for (int i = -4; i <= 4; ++i) pts.push_back(v1(Rational(i, 2)));
  auto poly = SetValuedMap::singleton(PolynomialMap(1, {svmap::Polynomial(1, {{q("1"), {4}}, {q("-3"), {1}}})}));
  for (auto mode : {Mode::convex, Mode::concave})
    for (const auto& r : validate_preconditions(poly, half_line(), pts, mode)) CHECK(r.passed());

  // a two-point value: the midpoint of {0, 1} escapes {0, 1} + {0}
  std::map<RationalVector, svmap::TabulatedValue> table{
      {v1(0), {Polyhedron(1, {v1(0), v1(1)}, {}), false}},
      {v1(1), {Polyhedron::interval(0, 1), true}},
  };
  auto two = SetValuedMap::tabulated(1, 1, table);
  auto recs = validate_preconditions(two, Cone(1), {v1(0), v1(1)}, Mode::concave);
  bool found = false;
  for (const auto& r : recs)
    if (r.kind == "precondition_k_convex" && r.pair == std::vector<std::size_t>{0}) {
      found = true;
      CHECK(r.failed());
      REQUIRE(r.witness.has_value());
      CHECK((r.witness->point == v1(q("1/4")) || r.witness->point == v1(q("3/4"))));
    }
  CHECK(found);
  // with K = R_+ the upper point absorbs the gap
  for (const auto& r : validate_preconditions(two, half_line(), {v1(0), v1(1)}, Mode::concave)) CHECK(r.passed());

  Cone K(2, {RationalVector{1, 0}});
  auto boxed = SetValuedMap::cone_plus_scaled(1, K, ErrorFunction::constant(3), Polyhedron::box(2, 1));
  for (const auto& r : validate_preconditions(boxed, K, pts, Mode::convex)) CHECK(r.passed());
  auto wrong = validate_preconditions(boxed, Cone(2, {RationalVector{0, 1}}), pts, Mode::convex);
  CHECK(wrong.front().failed());
  CHECK(wrong.front().witness->is_ray);
}

TEST_CASE("search_counterexample examples", "[verify]") {
  std::vector<RationalVector> pts;
  for (int i = -4; i <= 4; ++i) pts.push_back(v1(Rational(i, 2)));
  Family strong{quad(1, 1), strong_error(1, q("1/4")), cone1(1), pts, Mode::convex, 6};
  CHECK_FALSE(search_counterexample(strong, 10000, 7).has_value());

  Family broken{quad(1, -1), zero1(1), zero1(1), pts, Mode::convex, 4};
  auto w = search_counterexample(broken, 100, 7);
  REQUIRE(w.has_value());
  CHECK(w->kind == CounterexampleWitness::Kind::hypothesis_necessity);
  CHECK(w->describe().find("necessity") != std::string::npos);
  CHECK_THROWS(search_counterexample(strong, 0, 7));
}

TEST_CASE("specializations: constant and l1 errors", "[verify]") {
  Gen g(77);
  const Rational eps = q("1/4");
  auto nn = approx_error(1, ErrorFunction::constant(eps));
  auto hp = approx_error(1, ErrorFunction::l1(q("1/2")));
  for (int trial = 0; trial < 40; ++trial) {
    auto u = g.vec(1, -2, 2, 4);
    const unsigned m = static_cast<unsigned>(g.raw() % 7);
    auto t = DyadicRational(Integer(g.integer(0, 1l << m)), m);
    auto nt = svmap::takagi_transform(nn, t, u);
    CHECK(exactgeom::same_set(nt, Polyhedron(1, {v1(-2 * eps)}, {v1(1)})));
    // 2 eps T(t) |u| = eps T_1(t) |u|
    const Rational coef = q("1/2") * takagi::takagi_alpha_dyadic(t, 1) * exactgeom::norm_l1(u);
    auto ht = svmap::takagi_transform(hp, t, u);
    CHECK(exactgeom::same_set(ht, Polyhedron(1, {v1(-coef)}, {v1(1)})));
  }
}

TEST_CASE("strong modulus above 1/4 fails at t = 1/2", "[verify]") {
  auto F = quad(1, 1);
  for (const char* c : {"1/2", "17/64"}) {
    bool flipped = false;
    for (int i = -4; i <= 4 && !flipped; ++i)
      for (int j = -4; j <= 4 && !flipped; ++j) {
        TestPair p{0, 1, v1(Rational(i, 2)), v1(Rational(j, 2)), {}};
        flipped = check_conclusion_convex(F, strong_error(1, q(c)), cone1(1), p, dy(1, 1), SlackBox()).failed();
      }
    CHECK(flipped);
  }
}

TEST_CASE("report json and determinism", "[verify]") {
  auto run = [](const char* threads) {
    setenv("SVTAKAGI_THREADS", threads, 1);
    auto grid = svmap::DomainGrid::box(v1(-1), v1(1), q("1/2"));
    RunConfig cfg;
    cfg.id = "tiny";
    cfg.m_max = 3;
    cfg.probe = true;
    cfg.probe_trials = 50;
    return to_json(run_verification(quad(1, 1), strong_error(1, q("1/4")), cone1(1), grid, {{0, 4}, {1, 3}, {2, 2}},
                                    cfg))
        .dump();
  };
  const auto a = run("1"), b = run("3");
  CHECK(a == b);
  auto j = Json::parse(a);
  CHECK(j["scenario"] == "tiny");
  CHECK(j["summary"]["fail"] == 0);
  CHECK(j["summary"]["pass"].get<std::size_t>() == j["checks"].size());
  const auto& c = j["checks"][0];
  for (const char* k : {"kind", "pair", "t", "pass", "witness", "slack", "level"}) CHECK(c.contains(k));
  unsetenv("SVTAKAGI_THREADS");
}

TEST_CASE("property: conclusions follow from hypotheses on random families", "[verify][property]") {
  Gen g(101);
  std::vector<RationalVector> pts;
  for (int i = -4; i <= 4; ++i) pts.push_back(v1(Rational(i, 4)));
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<svmap::Monomial> terms;
    for (unsigned e = 0; e <= 4; ++e) terms.push_back({g.rational(-2, 2, 4), {e}});
    auto F = SetValuedMap::singleton(PolynomialMap(1, {svmap::Polynomial(1, terms)}));
    auto A = strong_error(1, g.rational(0, 1, 8));
    auto B = approx_error(1, g.raw() % 2 ? ErrorFunction::constant(g.rational(0, 1, 8))
                                         : ErrorFunction::l1(g.rational(0, 1, 8)));
    for (auto mode : {Mode::convex, Mode::concave}) {
      Family fam{F, A, B, pts, mode, 5};
      auto w = search_counterexample(fam, 300, g.raw());
      if (w) REQUIRE(w->kind == CounterexampleWitness::Kind::hypothesis_necessity);
    }
  }
}

TEST_CASE("property: oracle sets equal conclusion sets", "[verify][property]") {
  Gen g(102);
  Cone K(2, {RationalVector{1, 0}});
  auto F2 = SetValuedMap::singleton(
      PolynomialMap(2, {scaled_sq_norm(2, 1), affine(q("1/2"), {q("1"), q("-1")})}),
      Polyhedron(2, {RationalVector{0, 0}, RationalVector{0, 1}}, {RationalVector{1, 0}}));
  auto A2 = ErrorMap(SetValuedMap::cone_plus_scaled(2, Cone(2), ErrorFunction::sq_l2(q("1/4")),
                                                   Polyhedron(2, {RationalVector{0, 0}, RationalVector{-1, 0}}, {})));
  auto B2 = ErrorMap(SetValuedMap::constant(2, exactgeom::as_polyhedron(K)));
  for (int trial = 0; trial < 40; ++trial) {
    const bool two = trial % 2;
    const std::size_t d = two ? 2 : 1;
    auto mode = trial % 4 < 2 ? Mode::convex : Mode::concave;
    TestPair p{0, 1, g.vec(d, -2, 2, 2), g.vec(d, -2, 2, 2), {}};
    const unsigned m = static_cast<unsigned>(g.raw() % 5);
    auto t = DyadicRational(Integer(g.integer(0, 1l << m)), m);
    auto F = two ? F2 : quad(1, mode == Mode::convex ? 1 : -1);
    auto A = two ? A2 : strong_error(1, q("1/4"));
    auto B = two ? B2 : cone1(1);
    if (two && mode == Mode::concave) continue;
    auto o = inductive_oracle(F, A, B, p, t, mode);
    auto sides = conclusion_sets(F, A, B, p.x, p.y, t, mode, conclusion_level(t));
    REQUIRE(o.passed());
    REQUIRE(oracle_equivalence(o, sides, p, t, mode).passed());
  }
}
