#include <doctest.h>

#include "monoclosure/monomial.hpp"
#include "support.hpp"

using namespace monoclosure;
using testing::Gen;
using testing::ideal;
using testing::mono;

namespace {
const std::vector<std::string> XY{"x", "y"};
const std::vector<std::string> UVX{"u", "v", "x"};

// Membership in I·J computed without the library product.
bool in_product(const MonomialIdeal& I, const MonomialIdeal& J, const ExponentVector& m) {
  for (const auto& a : I.generators())
    for (const auto& b : J.generators())
      if ((a + b).divides(m)) return true;
  return false;
}
}  // namespace

TEST_CASE("make_ideal minimalizes and sorts") {
  CHECK(make_ideal(XY, {{2, 0}, {0, 2}, {2, 1}}).generators() ==
        std::vector<ExponentVector>{{0, 2}, {2, 0}});
  const auto I = make_ideal(UVX, {{2, 0, 0}, {0, 2, 0}, {1, 1, 2}});
  CHECK(I.generators() == std::vector<ExponentVector>{{0, 2, 0}, {1, 1, 2}, {2, 0, 0}});
  CHECK(make_ideal({"x"}, {}).is_zero());
  CHECK(make_ideal(XY, {{1, 0}, {1, 0}}).size() == 1);
}

TEST_CASE("make_ideal rejects length mismatch") {
  CHECK_THROWS_AS(make_ideal(XY, {{1, 0, 0}}), InputError);
}

TEST_CASE("zero and unit representations") {
  const auto Z = MonomialIdeal::zero(XY);
  const auto U = MonomialIdeal::unit(XY);
  CHECK(Z.is_zero());
  CHECK(U.is_unit());
  CHECK(U.generators() == std::vector<ExponentVector>{{0, 0}});
  CHECK(make_ideal(XY, {{0, 0}, {3, 1}}) == U);
  CHECK(sum(Z, U) == U);
  CHECK(product(Z, U) == Z);
  CHECK(intersect(Z, U) == Z);
  CHECK(radical(Z) == Z);
  CHECK(radical(U) == U);
  CHECK(!contains(Z, {0, 0}));
  CHECK(contains(U, {0, 0}));
}

TEST_CASE("contains") {
  const auto I = ideal("(x^2,y^2)", XY);
  CHECK(contains(I, mono("x^2*y", XY)));
  CHECK_FALSE(contains(I, mono("x*y", XY)));
  CHECK_FALSE(contains(ideal("(u^2,v^2,u*v*x^2)", UVX), mono("u*v*x", UVX)));
  CHECK_THROWS_AS(contains(I, ExponentVector{1, 1, 1}), InputError);
}

TEST_CASE("sum product power") {
  CHECK(product(ideal("(x)", XY), ideal("(y)", XY)) == ideal("(x*y)", XY));
  CHECK(power(ideal("(x^2,y^2)", XY), 2) == ideal("(x^4,x^2*y^2,y^4)", XY));
  CHECK(sum(ideal("(x^2,y^2)", XY), ideal("(x*y)", XY)) == ideal("(x^2,x*y,y^2)", XY));
  CHECK(power(ideal("(x,y)", XY), 1) == ideal("(x,y)", XY));
  CHECK_THROWS(power(ideal("(x,y)", XY), 0));
  CHECK_THROWS_AS(sum(ideal("(x)", XY), ideal("(x)", {"x"})), InputError);
}

TEST_CASE("colon") {
  const auto I = ideal("(u^2,v^2,u*v*x^2)", UVX);
  CHECK(contains(colon(I, ideal("(u,v,x)", UVX)), mono("u*v*x", UVX)));
  CHECK(colon(ideal("(x^2)", XY), ideal("(x)", XY)) == ideal("(x)", XY));
  CHECK(colon(ideal("(x*y)", XY), ideal("(x^2)", XY)) == ideal("(y)", XY));
  CHECK(colon(ideal("(x*y)", XY), mono("x*y", XY)).is_unit());
  CHECK_THROWS_AS(colon(I, MonomialIdeal::zero(UVX)), DomainError);
}

TEST_CASE("intersect") {
  CHECK(intersect(ideal("(x)", XY), ideal("(y)", XY)) == ideal("(x*y)", XY));
  CHECK(intersect(ideal("(x^2,y)", XY), ideal("(x,y^2)", XY)) == ideal("(x^2,x*y,y^2)", XY));
  const auto I = ideal("(x^3,x*y^2)", XY);
  CHECK(intersect(I, MonomialIdeal::unit(XY)) == I);
}

TEST_CASE("radical and monomial primes") {
  CHECK(radical(ideal("(x^2*y^3)", XY)) == ideal("(x*y)", XY));
  CHECK(radical(ideal("(u^2,v^2,u*v*x^2)", UVX)) == ideal("(u,v)", UVX));
  const auto primes = monomial_primes(UVX);
  CHECK(primes.size() == 8);
  CHECK(primes.front().is_zero());
  CHECK(std::find(primes.begin(), primes.end(), ideal("(u,v,x)", UVX)) != primes.end());
}

TEST_CASE("saturate_variable") {
  CHECK(saturate_variable(ideal("(x^2*y,y^3)", XY), 0) == ideal("(y)", XY));
  CHECK(saturate_variable(ideal("(x^2)", XY), 1) == ideal("(x^2)", XY));
  CHECK(saturate_variable(ideal("(x*y)", XY), 0) == ideal("(y)", XY));
  CHECK(saturate_variable(ideal("(x^2)", XY), 0).is_unit());
  CHECK_THROWS_AS(saturate_variable(ideal("(x)", XY), 2), InputError);
}

TEST_CASE("exponent overflow is reported") {
  const Exponent big = std::numeric_limits<Exponent>::max();
  CHECK_THROWS_AS(ExponentVector{big} + ExponentVector{1}, DomainError);
  CHECK_THROWS_AS(scaled(ExponentVector{big}, 2), DomainError);
}

TEST_CASE("subring restriction and embedding") {
  const auto I = ideal("(u^2,v^2)", UVX);
  const std::vector<std::size_t> uv{0, 1};
  const auto sub = restrict_to(I, uv);
  CHECK(sub.vars() == std::vector<std::string>{"u", "v"});
  CHECK(extend_to(sub, UVX, uv) == I);
  CHECK(embed(ExponentVector{1, 2}, 3, {0, 2}) == ExponentVector{1, 0, 2});
  CHECK_THROWS_AS(restrict_to(ideal("(u*x)", UVX), uv), InputError);
  CHECK(support(mono("u*x^3", UVX)) == std::vector<std::size_t>{0, 2});
}

TEST_CASE("minimal_points_in_box on an up-closed set") {
  const auto I = ideal("(x^2,x*y^3,y^4)", XY);
  const auto pts = minimal_points_in_box({4, 4}, [&](const ExponentVector& a) { return contains(I, a); });
  CHECK(pts == I.generators());
}

TEST_CASE("property: make_ideal is idempotent") {
  Gen g(11);
  for (int t = 0; t < 300; ++t) {
    const auto I = g.ideal(g.uniform(1, 4), 6, 5);
    CHECK(make_ideal(I.vars(), I.generators()) == I);
    auto shuffled = I.generators();
    std::shuffle(shuffled.begin(), shuffled.end(), g.engine());
    CHECK(make_ideal(I.vars(), shuffled) == I);
  }
}

TEST_CASE("property: product monotone, colon adjunction, lattice laws") {
  Gen g(12);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = g.uniform(1, 3);
    const auto I = g.ideal(n, 4, 4);
    const auto J = g.ideal(n, 4, 4);
    const auto K = g.ideal(n, 3, 4);
    const auto Ibig = sum(I, K);
    // Monotonicity of product: I ⊆ I + K.
    CHECK(is_subset(product(I, J), product(Ibig, J)));
    // Adjunction J·(I:J) ⊆ I.
    CHECK(is_subset(product(J, colon(I, J)), I));
    // Product agrees with pairwise generator sums on the box.
    const auto P = product(I, J);
    for (const auto& p : testing::box_points(ExponentVector(std::vector<Exponent>(n, 6)))) {
      CHECK(contains(P, p) == in_product(I, J, p));
    }
    // Intersection is below both; sum is the least upper bound.
    const auto M = intersect(I, J);
    CHECK(is_subset(M, I));
    CHECK(is_subset(M, J));
    const auto S = sum(I, J);
    CHECK(is_subset(I, S));
    CHECK(is_subset(J, S));
    const auto upper = sum(S, K);
    CHECK(is_subset(S, upper));
    for (const auto& p : testing::box_points(ExponentVector(std::vector<Exponent>(n, 5)))) {
      CHECK(contains(M, p) == (contains(I, p) && contains(J, p)));
      CHECK(contains(S, p) == (contains(I, p) || contains(J, p)));
    }
  }
}

TEST_CASE("property: power matches iterated generator sums") {
  Gen g(13);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = g.uniform(1, 3);
    const auto I = g.ideal(n, 3, 3);
    const auto I3 = power(I, 3);
    for (const auto& p : testing::box_points(ExponentVector(std::vector<Exponent>(n, 7)))) {
      bool direct = false;
      for (const auto& a : I.generators())
        for (const auto& b : I.generators())
          for (const auto& c : I.generators())
            if ((a + b + c).divides(p)) direct = true;
      CHECK(contains(I3, p) == direct);
    }
  }
}
