#include <catch_amalgamated.hpp>

#include "support.hpp"
#include "svtakagi/svmap.hpp"

using namespace svtakagi;
using namespace svtakagi::svmap;
using exactgeom::Integer;
using exactgeom::same_set;
using svtakagi::testing::Gen;
using svtakagi::testing::q;
using takagi::ErrorFunction;

namespace {

RationalVector v1(const char* a) { return RationalVector{q(a)}; }
RationalVector v2(const char* a, const char* b) { return RationalVector{q(a), q(b)}; }
DyadicRational dy(long p, unsigned m) { return DyadicRational(Integer(p), m); }

Cone half_line() { return Cone(1, {RationalVector{1}}); }
Polyhedron neg_unit() { return Polyhedron::interval(q("-1"), 0); }

// Scalar route for one-dimensional values: S^T is the interval whose ends are
// the weighted sums of the end points of the terms. Infinite ends stay infinite.
struct Ends {
  Rational lo, hi;
  bool lo_inf = false, hi_inf = false;
};

Ends ends_of(const Polyhedron& P) {
  Ends e{P.vertices().front()[0], P.vertices().front()[0]};
  for (const auto& v : P.vertices()) {
    if (v[0] < e.lo) e.lo = v[0];
    if (v[0] > e.hi) e.hi = v[0];
  }
  for (const auto& r : P.rays()) (r[0] > 0 ? e.hi_inf : e.lo_inf) = true;
  return e;
}

Ends transform_ends_1d(const ErrorMap& S, const DyadicRational& t, const RationalVector& x) {
  Ends out{0, 0};
  const unsigned m = t.exponent();
  for (unsigned k = 0; k < m; ++k) {
    Rational s = 2 * takagi::dist_to_integers(t.value() * exactgeom::pow2(k));
    Ends e = ends_of(S(s * x));
    out.lo += exactgeom::pow2(-static_cast<long>(k)) * e.lo;
    out.hi += exactgeom::pow2(-static_cast<long>(k)) * e.hi;
    out.lo_inf = out.lo_inf || e.lo_inf;
    out.hi_inf = out.hi_inf || e.hi_inf;
  }
  Ends z = ends_of(S.at_zero());
  out.lo += exactgeom::pow2(1 - static_cast<long>(m)) * z.lo;
  out.hi += exactgeom::pow2(1 - static_cast<long>(m)) * z.hi;
  out.lo_inf = out.lo_inf || z.lo_inf;
  out.hi_inf = out.hi_inf || z.hi_inf;
  return out;
}

bool same_ends(const Ends& a, const Ends& b) {
  if (a.lo_inf != b.lo_inf || a.hi_inf != b.hi_inf) return false;
  return (a.lo_inf || a.lo == b.lo) && (a.hi_inf || a.hi == b.hi);
}

ErrorFunction random_phi(Gen& g) {
  Rational eps = g.rational(0, 2, 4);
  switch (g.raw() % 4) {
    case 0: return ErrorFunction::constant(eps);
    case 1: return ErrorFunction::l1(eps);
    case 2: return ErrorFunction::linf(eps);
    default: return ErrorFunction::sq_l2(eps);
  }
}

// Random 2-d S0 containing 0, and a random cone with up to two rays.
Polyhedron random_s0(Gen& g) {
  auto P = g.polyhedron(2, 3, 1, 2);
  std::vector<RationalVector> v = P.vertices();
  v.push_back(RationalVector(2));
  return Polyhedron(2, v, P.rays());
}

Cone random_cone(Gen& g) {
  std::vector<RationalVector> rays;
  const auto n = g.raw() % 3;
  for (std::uint64_t i = 0; i < n; ++i) rays.push_back(g.nonzero_vec(2, -2, 2, 1));
  return Cone(2, rays);
}

}  // namespace

TEST_CASE("evaluate examples", "[svmap]") {
  auto sq = SetValuedMap::singleton(PolynomialMap(1, {scaled_sq_norm(1, 1)}));
  CHECK(sq(v1("3")) == Polyhedron::point(v1("9")));

  auto nn = SetValuedMap::cone_plus_scaled(1, half_line(), ErrorFunction::constant(q("1/4")), neg_unit());
  auto val = nn(v1("17"));
  CHECK(same_set(val, Polyhedron(1, {v1("-1/4")}, {RationalVector{1}})));

  std::map<RationalVector, TabulatedValue> table{{v1("1"), {Polyhedron::interval(0, 2), true}}};
  auto tab = SetValuedMap::tabulated(1, 1, table);
  CHECK(tab(v1("1")) == Polyhedron::interval(0, 2));
  CHECK_THROWS_AS(tab(v1("2")), MissingPointError);
  CHECK_THROWS_AS(sq(v2("1", "2")), DimensionError);
}

TEST_CASE("polynomials are limited to degree four", "[svmap]") {
  CHECK_NOTHROW(Polynomial(1, {{q("1"), {4}}}));
  CHECK_THROWS_AS(Polynomial(1, {{q("1"), {5}}}), CapabilityError);
  CHECK_THROWS_AS(Polynomial(2, {{q("1"), {1}}}), DimensionError);
  Polynomial p(2, {{q("2"), {1, 1}}, {q("-1/2"), {0, 0}}});
  CHECK(p(v2("3", "1/4")) == 1);
  CHECK(affine(q("1"), {q("2"), q("-1")})(v2("1", "5")) == -2);
}

TEST_CASE("error maps require 0 in their values", "[svmap]") {
  CHECK_THROWS(ErrorMap(SetValuedMap::cone_plus_scaled(1, Cone(1), ErrorFunction::constant(1),
                                                       Polyhedron::interval(1, 2))));
  auto shifted = SetValuedMap::singleton(PolynomialMap(1, {affine(0, {q("1")})}));
  CHECK_NOTHROW(ErrorMap(shifted));
  CHECK_THROWS(ErrorMap(shifted, {v1("1")}));
  CHECK(ErrorMap::zero(1, 1).zero_value_is_cone());
  auto seg = ErrorMap(SetValuedMap::constant(1, Polyhedron::interval(0, 1)));
  CHECK_FALSE(seg.zero_value_is_cone());
}

TEST_CASE("takagi_transform_truncated examples", "[svmap]") {
  auto zero = ErrorMap::zero(2, 1);
  CHECK(takagi_transform_truncated(zero, q("3/8"), v2("1", "2"), 5) == Polyhedron::origin(1));

  Cone K(2, {v2("1", "0"), v2("1", "1")});
  auto cone_map = ErrorMap(SetValuedMap::constant(1, exactgeom::as_polyhedron(K)));
  for (unsigned N : {1u, 3u, 7u})
    for (const char* t : {"0", "1/3", "5/8", "1"})
      CHECK(same_set(takagi_transform_truncated(cone_map, q(t), v1("2"), N), exactgeom::as_polyhedron(K)));

  auto strong = ErrorMap(SetValuedMap::cone_plus_scaled(1, half_line(), ErrorFunction::sq_l2(q("1/4")), neg_unit()));
  for (auto t : {dy(1, 2), dy(3, 3), dy(5, 4)}) {
    auto truncated = takagi_transform_truncated(strong, t.value(), v1("2"), t.exponent());
    auto structured = takagi_transform_structured(half_line(), ErrorFunction::sq_l2(q("1/4")), neg_unit(), t, v1("2"));
    CHECK(same_set(truncated, structured));
  }
  CHECK_THROWS(takagi_transform_truncated(zero, q("1/2"), v2("0", "0"), 0));
  CHECK_THROWS(takagi_transform_truncated(zero, q("3/2"), v2("0", "0"), 2));
}

TEST_CASE("takagi_transform_structured examples", "[svmap]") {
  for (const char* e : {"1/3", "1", "7/2"}) {
    auto got = takagi_transform_structured(half_line(), ErrorFunction::constant(q(e)), neg_unit(), dy(5, 3), v1("1"));
    CHECK(same_set(got, Polyhedron(1, {RationalVector{-2 * q(e)}}, {RationalVector{1}})));
  }
  auto phi = ErrorFunction::l1(q("3"));
  auto S = SetValuedMap::cone_plus_scaled(1, half_line(), phi, neg_unit());
  CHECK(same_set(takagi_transform_structured(half_line(), phi, neg_unit(), dy(1, 1), v1("5")), S(v1("5"))));

  auto got = takagi_transform_structured(half_line(), ErrorFunction::sq_l2(q("1/4")), neg_unit(), dy(1, 2),
                                         v2("2", "0"));
  CHECK(same_set(got, Polyhedron(1, {v1("-3/4")}, {RationalVector{1}})));
  CHECK_THROWS(takagi_transform_structured(half_line(), phi, Polyhedron::interval(1, 2), dy(1, 1), v1("1")));
}

TEST_CASE("check_lemma_TT examples", "[svmap]") {
  auto strong = ErrorMap(SetValuedMap::cone_plus_scaled(1, half_line(), ErrorFunction::sq_l2(q("1/4")), neg_unit()));
  auto r = check_lemma_TT(strong, v1("3"), 4);
  CHECK(r.equality_hypothesis);
  CHECK(r.equality());

  auto bounded = ErrorMap(
      SetValuedMap::cone_plus_scaled(1, Cone(1), ErrorFunction::sq_l2(1), Polyhedron::interval(q("-1"), 1)));
  CHECK(bounded.at_zero() == Polyhedron::origin(1));
  CHECK(check_lemma_TT(bounded, v1("2"), 3).equality());

  std::map<RationalVector, TabulatedValue> table{
      {v1("0"), {Polyhedron::interval(0, 1), true}},
      {v1("1"), {Polyhedron::interval(q("-1"), 2), true}},
  };
  auto tab = ErrorMap(SetValuedMap::tabulated(1, 1, table));
  auto one_sided = check_lemma_TT(tab, v1("1"), 3);
  CHECK_FALSE(one_sided.equality_hypothesis);
  CHECK(one_sided.forward.included);
  CHECK_FALSE(one_sided.backward.has_value());
  CHECK(one_sided.holds());
}

TEST_CASE("rec_of_map examples", "[svmap]") {
  Gen g(5);
  Cone K(2, {v2("1", "0")});
  auto S = SetValuedMap::cone_plus_scaled(2, K, ErrorFunction::l1(1), Polyhedron::box(2, 1));
  std::vector<RationalVector> sample;
  for (int i = 0; i < 6; ++i) sample.push_back(g.vec(2, -3, 3, 2));
  CHECK(exactgeom::same_cone(rec_of_map(S, sample), K));

  auto f = SetValuedMap::singleton(PolynomialMap(2, {scaled_sq_norm(2, 1), affine(0, {q("1"), q("2")})}));
  CHECK(rec_of_map(f, sample).is_trivial());

  std::map<RationalVector, TabulatedValue> table{
      {v1("0"), {Polyhedron(2, {v2("0", "0")}, {v2("1", "0"), v2("1", "1")}), true}},
      {v1("1"), {Polyhedron(2, {v2("1", "1")}, {v2("1", "1"), v2("0", "1")}), true}},
  };
  auto tab = SetValuedMap::tabulated(1, 2, table);
  CHECK(exactgeom::same_cone(rec_of_map(tab, {v1("0"), v1("1")}), Cone(2, {v2("1", "1")})));
  CHECK_THROWS(rec_of_map(tab, {}));
  CHECK_THROWS_AS(rec_of_map(SetValuedMap::constant(1, Polyhedron::origin(5)), {v1("0")}), CapabilityError);
}

TEST_CASE("domain grids", "[svmap]") {
  auto box = DomainGrid::box(v2("-2", "-2"), v2("2", "2"), q("1/2"));
  CHECK(box.points().size() == 81);
  CHECK(box.has_convexity_certificate());
  CHECK(box.adjoin(v2("1/3", "1/7")));
  CHECK_FALSE(box.adjoin(v2("3", "0")));
  CHECK(box.points().size() == 82);
  CHECK(box.base_size() == 81);

  auto tri = DomainGrid::simplex({v2("0", "0"), v2("1", "0"), v2("0", "1")}, 4);
  CHECK(tri.points().size() == 15);
  CHECK(tri.in_region(v2("1/4", "1/4")));
  CHECK_FALSE(tri.in_region(v2("3/4", "1/2")));

  auto pts = DomainGrid::points({v1("0"), v1("1"), v1("0")});
  CHECK(pts.points().size() == 2);
  CHECK_FALSE(pts.has_convexity_certificate());
  CHECK_FALSE(pts.adjoin(v1("1/2")));
}

TEST_CASE("map json round trip", "[svmap]") {
  std::vector<SetValuedMap> maps{
      SetValuedMap::singleton(PolynomialMap(2, {scaled_sq_norm(2, q("1/3")), affine(q("-1"), {q("1"), q("2")})}),
                              Polyhedron(2, {v2("0", "0"), v2("0", "1")}, {v2("1", "0")})),
      SetValuedMap::cone_plus_scaled(1, half_line(), ErrorFunction::sq_l2(q("1/4")), neg_unit()),
      SetValuedMap::cone_plus_scaled(1, half_line(), ErrorFunction::tabulated({{v1("0"), 0}, {v1("1"), q("2")}}),
                                     neg_unit()),
      SetValuedMap::tabulated(1, 1, {{v1("0"), {Polyhedron::interval(0, 1), false}}, {v1("1/2"), {neg_unit(), true}}}),
  };
  for (const auto& m : maps) {
    auto j = to_json(m);
    auto back = map_from_json(j, m.domain_dim());
    CHECK(back == m);
    CHECK(to_json(back).dump() == j.dump());
  }
  Json bad = to_json(maps[1]);
  bad["extra"] = 1;
  CHECK_THROWS_AS(map_from_json(bad, 1), ParseError);
  Json decimal = to_json(maps[1]);
  decimal["phi"]["epsilon"] = 0.25;
  CHECK_THROWS_AS(map_from_json(decimal, 1), ParseError);
}

TEST_CASE("property: truncation levels are nondecreasing", "[svmap][property]") {
  Gen g(31);
  for (int trial = 0; trial < 25; ++trial) {
    auto S = ErrorMap(SetValuedMap::cone_plus_scaled(2, random_cone(g), random_phi(g), random_s0(g)));
    auto x = g.vec(2, -2, 2, 2);
    Rational t = g.rational(0, 1, 1 + static_cast<long>(g.raw() % 12));
    auto prev = takagi_transform_truncated(S, t, x, 1);
    for (unsigned N = 2; N <= 5; ++N) {
      auto next = takagi_transform_truncated(S, t, x, N);
      REQUIRE(exactgeom::subset(prev, next).included);
      prev = next;
    }
  }
}

TEST_CASE("property: dyadic levels stabilize and match the closed form", "[svmap][property]") {
  Gen g(32);
  for (int trial = 0; trial < 25; ++trial) {
    Cone K = random_cone(g);
    auto phi = random_phi(g);
    auto S0 = random_s0(g);
    auto S = ErrorMap(SetValuedMap::cone_plus_scaled(2, K, phi, S0));
    auto x = g.vec(2, -2, 2, 2);
    const unsigned m = static_cast<unsigned>(g.raw() % 5);
    auto t = DyadicRational(Integer(g.integer(0, 1l << m)), m);
    const unsigned N = std::max(1u, t.exponent());
    auto at_m = takagi_transform_truncated(S, t.value(), x, N);
    REQUIRE(same_set(at_m, takagi_transform_truncated(S, t.value(), x, N + 1)));
    REQUIRE(same_set(at_m, takagi_transform_structured(K, phi, S0, t, x)));
  }
}

TEST_CASE("property: one-dimensional transforms match the scalar end point sums", "[svmap][property]") {
  Gen g(33);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<RationalVector> S0v{RationalVector{0}, RationalVector{g.rational(-2, 2, 3)}};
    std::vector<RationalVector> rays;
    if (g.raw() % 2) rays.push_back(RationalVector{g.raw() % 2 ? 1 : -1});
    auto S = ErrorMap(SetValuedMap::cone_plus_scaled(1, Cone(1, rays), random_phi(g), Polyhedron(1, S0v, {})));
    auto x = g.vec(1, -3, 3, 2);
    const unsigned m = 1 + static_cast<unsigned>(g.raw() % 6);
    auto t = DyadicRational(Integer(g.integer(0, 1l << m)), m);
    auto got = takagi_transform_truncated(S, t.value(), x, std::max(1u, t.exponent()));
    REQUIRE(same_ends(ends_of(got), transform_ends_1d(S, t, x)));
  }
}

TEST_CASE("property: sampled recession cone lies in every sampled recession cone", "[svmap][property]") {
  Gen g(34);
  for (int trial = 0; trial < 15; ++trial) {
    std::map<RationalVector, TabulatedValue> table;
    std::vector<RationalVector> sample;
    for (int i = 0; i < 3; ++i) {
      auto x = RationalVector{Rational(i)};
      table.emplace(x, TabulatedValue{g.polyhedron(2, 2, 3), true});
      sample.push_back(x);
    }
    auto S = SetValuedMap::tabulated(1, 2, table);
    auto R = rec_of_map(S, sample);
    for (const auto& x : sample) REQUIRE(exactgeom::cone_subset(R, exactgeom::recession_cone(S(x))));
  }
}
