#include <doctest.h>

#include "monoclosure/closures.hpp"
#include "monoclosure/oracles.hpp"
#include "monoclosure/polyhedra.hpp"
#include "support.hpp"

using namespace monoclosure;
using testing::Gen;
using testing::ideal;
using testing::mono;

namespace {

const std::vector<std::string> XY{"x", "y"};
const std::vector<std::string> UVX{"u", "v", "x"};

MonomialIdeal counter() { return ideal("(u^2,v^2,u*v*x^2)", UVX); }

ExponentVector widened(const ExponentVector& b, Exponent extra) {
  ExponentVector out = b;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += extra;
  return out;
}

// Minimal lattice points of an up-closed predicate over a box, by brute force.
template <class Pred>
std::vector<ExponentVector> brute_generators(const ExponentVector& box, Pred in) {
  std::vector<ExponentVector> pts;
  for (const auto& a : testing::box_points(box))
    if (in(a)) pts.push_back(a);
  return testing::minimal_elements(pts);
}

}  // namespace

TEST_CASE("integral closure") {
  CHECK(integral_closure(ideal("(x^2,y^2)", XY)) == ideal("(x^2,x*y,y^2)", XY));
  CHECK(contains(integral_closure(counter()), mono("u*v", UVX)));
  CHECK(integral_closure(parse_ideal("(x)")) == parse_ideal("(x)"));
  CHECK(integral_closure(MonomialIdeal::zero(XY)).is_zero());
  CHECK(integral_closure(MonomialIdeal::unit(XY)).is_unit());
  // The oracle witness for xy: (xy)^2 ∈ (x^2, y^2)^2.
  CHECK(integral_oracle({1, 1}, ideal("(x^2,y^2)", XY)) == OracleAnswer::Yes(2));
}

TEST_CASE("inner integral closure, both implementations") {
  const auto X = parse_ideal("(x)");
  CHECK(inner_integral_closure_facet(X) == parse_ideal("(x^2)", std::vector<std::string>{"x"}));
  CHECK(inner_integral_closure_lp(X) == inner_integral_closure_facet(X));
  const auto I = ideal("(x^2,y^2)", XY);
  const auto np = newton_polyhedron(I);
  CHECK_FALSE(inner_member_facet(np, {1, 1}));
  CHECK(inner_member_facet(np, {3, 0}));
  CHECK_FALSE(inner_member_lp(I, {1, 1}));
  CHECK(inner_member_lp(I, {3, 0}));
  CHECK(inner_oracle({3, 0}, I) == OracleAnswer::Yes(2));
  CHECK_FALSE(inner_member_facet(newton_polyhedron(counter()), {1, 1, 1}));
  CHECK_FALSE(contains(inner_integral_closure_lp(counter()), mono("u*v*x", UVX)));
  CHECK(inner_integral_closure(MonomialIdeal::zero(XY)).is_zero());
  CHECK(inner_integral_closure(MonomialIdeal::unit(XY)).is_unit());
}

TEST_CASE("special part") {
  const auto I = ideal("(x^2,y^2)", XY);
  const auto M = ideal("(x,y)", XY);
  CHECK(special_part(I, M) == power(M, 3));
  CHECK(special_part(I, M) == product(M, integral_closure(I)));
  const auto X = parse_ideal("(x)");
  CHECK(special_part(X, X) == parse_ideal("(x^2)", std::vector<std::string>{"x"}));
  CHECK_FALSE(special_member(ideal("(x*y)", XY), M, {1, 1}));
  CHECK(special_part(MonomialIdeal::zero(XY), M).is_zero());
  CHECK(special_part(I, MonomialIdeal::zero(XY)).is_zero());
  // The facets of NP(xy) alone cannot detect this.
  for (const auto& f : facets(newton_polyhedron(ideal("(x*y)", XY)))) {
    CHECK(ord(f.w, M) == 0);
  }
}

TEST_CASE("natural and continuous closure") {
  CHECK(natural_closure(ideal("(x^2,y^2)", XY)) == ideal("(x^2,y^2)", XY));
  CHECK(is_naturally_closed(ideal("(x^2,y^2)", XY)));
  CHECK_FALSE(contains(natural_closure(counter()), mono("u*v*x", UVX)));
  CHECK(natural_closure(parse_ideal("(x)")) == parse_ideal("(x)"));
  CHECK(natural_closure(parse_ideal("(x^3,y^2)")) == parse_ideal("(x^3,x^2*y,y^2)"));
  CHECK_FALSE(is_naturally_closed(parse_ideal("(x^3,y^2)")));
  const auto cc = continuous_closure_monomial(counter());
  CHECK_FALSE(contains(cc.ideal, mono("u*v*x", UVX)));
  CHECK(cc.ideal == natural_closure(counter()));
  CHECK_FALSE(cc.field_semantics.empty());
  CHECK_FALSE(cc.justification.empty());
  CHECK(continuous_closure_monomial(ideal("(x^2,y^2)", XY)).ideal == ideal("(x^2,y^2)", XY));
  CHECK(continuous_closure_monomial(MonomialIdeal::unit(XY)).ideal.is_unit());
}

TEST_CASE("Rees valuations and relevant ideals") {
  auto rv = rees_valuations(ideal("(x^2,y^2)", XY));
  REQUIRE(rv.size() == 1);
  CHECK(rv[0].w == Weight({1, 1}));
  CHECK(rv[0].order == 2);
  rv = rees_valuations(ideal("(x*y)", XY));
  REQUIRE(rv.size() == 2);
  CHECK(rv[0].w == Weight({0, 1}));
  CHECK(rv[1].w == Weight({1, 0}));
  CHECK(rv[0].order == 1);
  rv = rees_valuations(parse_ideal("(x)"));
  REQUIRE(rv.size() == 1);
  CHECK(rv[0].order == 1);
  CHECK(rees_valuations(MonomialIdeal::unit(XY)).empty());

  CHECK(relevant_ideal(Weight({1, 1}), ideal("(x^2,y^2)", XY)) == ideal("(x^3,x^2*y,x*y^2,y^3)", XY));
  CHECK(relevant_ideal(Weight({1}), parse_ideal("(x)")) == parse_ideal("(x^2)", std::vector<std::string>{"x"}));
  CHECK(relevant_ideal(Weight({1, 0}), ideal("(x*y)", XY)) == ideal("(x^2)", XY));
  CHECK_THROWS_AS(relevant_ideal(Weight({1, 0}), ideal("(x^2,y^2)", XY)), DomainError);

  const auto I = ideal("(x^2,y^2)", XY);
  CHECK(inner_via_relevant(I) == ideal("(x^3,x^2*y,x*y^2,y^3)", XY));
  CHECK(sum(inner_via_relevant(I), I) == I);
  CHECK(inner_via_relevant(parse_ideal("(x)")) == parse_ideal("(x^2)", std::vector<std::string>{"x"}));
  CHECK_FALSE(contains(relevant_ideal(Weight({1, 1, 0}), counter()), mono("u*v*x", UVX)));
  CHECK(inner_via_relevant(MonomialIdeal::unit(XY)).is_unit());
}

TEST_CASE("axes lower bound") {
  const auto lower = axes_lower_bound(counter());
  CHECK(contains(lower, mono("u*v*x", UVX)));
  CHECK(lower == ideal("(u^2,v^2,u*v*x)", UVX));
  CHECK(axes_lower_bound(ideal("(x^2,y^2)", XY)) == ideal("(x^2,y^2)", XY));
  CHECK(axes_lower_bound(parse_ideal("(x)")) == parse_ideal("(x)"));
  LowerBoundTrace trace;
  axes_lower_bound(counter(), &trace);
  CHECK(trace.iterations >= 1);
  CHECK_FALSE(trace.contributions.empty());
}

TEST_CASE("axes membership verdicts") {
  CHECK(axes_membership(counter(), mono("u*v*x", UVX)).kind == AxesMembershipVerdict::Kind::InLowerBound);
  const auto I = ideal("(x^2,y^2)", XY);
  CHECK(axes_membership(I, mono("x", XY)).kind == AxesMembershipVerdict::Kind::OutsideIntegralClosure);
  const auto v = axes_membership(I, mono("x*y", XY));
  CHECK(v.kind == AxesMembershipVerdict::Kind::OutCertified);
  REQUIRE(v.certificate.has_value());
  CHECK(verify_certificate(*v.certificate).verified);
  CertifyConfig none;
  none.budget = 0;
  CHECK(axes_membership(I, mono("x*y", XY), none).kind == AxesMembershipVerdict::Kind::Unknown);
  CHECK(to_string(AxesMembershipVerdict::Kind::OutCertified) == "OutCertified");
}

TEST_CASE("monomial fiber criterion") {
  const std::vector<std::size_t> fiber{0, 1};
  const auto Ifib = ideal("(u^2,v^2)", UVX);
  const auto J = ideal("(x^2)", UVX);
  CHECK(fiber_exclusion_monomial(mono("x", UVX), mono("u*v", UVX), Ifib, J, fiber));
  CHECK_FALSE(fiber_exclusion_monomial(mono("x", UVX), mono("u^2", UVX), Ifib, J, fiber));
  CHECK_FALSE(fiber_exclusion_monomial(mono("x^2", UVX), mono("u*v", UVX), Ifib, J, fiber));
  CHECK_THROWS_AS(fiber_exclusion_monomial(mono("x", UVX), mono("u*v", UVX), ideal("(u^2)", UVX), J, fiber),
                  DomainError);
  CHECK_THROWS_AS(
      fiber_exclusion_monomial(mono("x", UVX), mono("u*v", UVX), ideal("(u^2,v^2,x)", UVX), J, fiber),
      InputError);
  // The certified element really is outside the natural closure of the assembled ideal.
  const auto assembled = sum(Ifib, multiply(J, mono("u*v", UVX)));
  CHECK(assembled == counter());
  CHECK_FALSE(contains(natural_closure(assembled), mono("u*v*x", UVX)));
}

TEST_CASE("primary detection") {
  CHECK(is_primary_to(ideal("(x^2,y^3)", XY), {0, 1}));
  CHECK_FALSE(is_primary_to(ideal("(x^2,x*y)", XY), {0, 1}));
  CHECK(is_monomial_primary(ideal("(x^2,x*y^5)", {"x", "y"})) == false);
  CHECK(is_monomial_primary(ideal("(x^2)", XY)));
  CHECK_FALSE(is_monomial_primary(ideal("(x*y)", XY)));
}

TEST_CASE("box lemmas: generators never lie outside the stated boxes") {
  Gen g(41);
  for (int t = 0; t < 120; ++t) {
    const std::size_t n = g.uniform(1, 3);
    const auto I = g.ideal(n, 4, 4);
    const auto np = newton_polyhedron(I);
    const auto bigI = widened(max_exponents(I), 3);
    CHECK(integral_closure(I).generators() ==
          brute_generators(bigI, [&](const ExponentVector& a) { return contains_point(np, a); }));
    const auto bigInner = widened(max_exponents(I), 4);
    CHECK(inner_integral_closure_lp(I).generators() ==
          brute_generators(bigInner, [&](const ExponentVector& a) { return inner_member_lp(I, a); }));
    const auto J = g.ideal(n, 3, 3);
    const auto bigSp = widened(max_exponents(I) + max_exponents(J), 2);
    CHECK(special_part(I, J).generators() ==
          brute_generators(bigSp, [&](const ExponentVector& a) { return special_member(I, J, a); }));
  }
}

TEST_CASE("box lemmas: integral closure against the power oracle") {
  Gen g(42);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = g.uniform(1, 3);
    const auto I = g.ideal(n, 3, 3);
    const auto closure = integral_closure(I);
    for (const auto& a : testing::box_points(widened(max_exponents(I), 1))) {
      const auto ans = integral_oracle(a, I, 12);
      if (ans.yes) CHECK(contains(closure, a));
    }
    // Every minimal generator has an explicit witness.
    for (const auto& a : closure.generators()) CHECK(integral_oracle(a, I, 20).yes);
  }
}

TEST_CASE("property: pipelines agree monomial by monomial") {
  Gen g(43);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = g.uniform(1, 4);
    const auto I = g.ideal(n, 5, 4);
    const auto np = newton_polyhedron(I);
    const auto relevant = inner_via_relevant(I);
    for (const auto& a : testing::box_points(widened(max_exponents(I), 1))) {
      const bool f = inner_member_facet(np, a);
      CHECK(f == inner_member_lp(I, a));
      CHECK(f == contains(relevant, a));
    }
  }
}

TEST_CASE("property: closure axioms, sandwich, enlargement and localization") {
  Gen g(44);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = g.uniform(1, 4);
    const auto I = g.ideal(n, 5, 4);
    const auto K = sum(I, g.ideal(n, 2, 4));
    const auto nat = natural_closure(I);
    CHECK(is_subset(I, nat));
    CHECK(natural_closure(nat) == nat);
    CHECK(is_subset(nat, natural_closure(K)));
    const auto lower = axes_lower_bound(I);
    const auto closure = integral_closure(I);
    CHECK(is_subset(nat, lower));
    CHECK(is_subset(lower, closure));
    CHECK(inner_integral_closure(I) == inner_integral_closure(closure));
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(saturate_variable(nat, i) == natural_closure(saturate_variable(I, i)));
    }
    const auto J = g.ideal(n, 3, 3);
    CHECK(is_subset(product(inner_integral_closure(I), inner_integral_closure(J)),
                    inner_integral_closure(product(I, J))));
  }
}

TEST_CASE("property: primary ideals have lower bound equal to natural closure") {
  Gen g(45);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = g.uniform(1, 4);
    const auto I = g.primary_ideal(n, g.uniform(0, 3), 5);
    CHECK(is_monomial_primary(I));
    CHECK(axes_lower_bound(I) == natural_closure(I));
  }
}

TEST_CASE("property: high-degree monomials lie in the natural closure") {
  Gen g(46);
  for (int t = 0; t < 80; ++t) {
    const std::size_t n = g.uniform(1, 3);
    const Exponent d = g.uniform(2, 6);
    std::vector<Exponent> w(n, 1);
    if (t % 2 == 1)
      for (auto& x : w) x = g.uniform(1, std::min<Exponent>(3, d - 1));
    // Generators of weighted degree < d: a pure power of every variable plus extras.
    std::vector<ExponentVector> gens;
    for (std::size_t i = 0; i < n; ++i) gens.push_back(scaled(unit_vector(n, i), (d - 1) / w[i]));
    for (int k = 0; k < 3; ++k) {
      ExponentVector a = g.exponent(n, d);
      Exponent deg = 0;
      for (std::size_t i = 0; i < n; ++i) deg += w[i] * a[i];
      if (deg > 0 && deg < d) gens.push_back(a);
    }
    const auto I = make_ideal(testing::names(n), gens);
    const auto nat = natural_closure(I);
    ExponentVector box(n);
    for (std::size_t i = 0; i < n; ++i) box[i] = (d + 2) / w[i];
    for (const auto& a : testing::box_points(box)) {
      Exponent deg = 0;
      for (std::size_t i = 0; i < n; ++i) deg += w[i] * a[i];
      if (deg >= d && deg <= d + 2) CHECK_MESSAGE(contains(nat, a), format_ideal(I));
    }
  }
}
