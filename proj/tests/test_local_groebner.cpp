#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "singspec/parser.hpp"
#include "singspec/standard_basis.hpp"

using namespace singspec;

namespace {

Polynomial P(const char* s, int n = 2) { return parse_poly(s, default_variable_names(n)); }

StandardBasis sb_of(const std::vector<Polynomial>& g) { return standard_basis(g, MonomialOrder(g.front().nvars())); }

std::vector<Polynomial> jac_and(const Polynomial& f, std::vector<Polynomial> extra = {}) {
  auto j = jacobian(f);
  j.insert(j.end(), extra.begin(), extra.end());
  return j;
}

}  // namespace

TEST_CASE("local order puts lower degree first") {
  MonomialOrder o(2);
  CHECK(o.greater(ExponentVector{0, 0}, ExponentVector{1, 0}));
  CHECK(o.greater(ExponentVector{5, 0}, ExponentVector{3, 3}));
  CHECK(o.leading_exponent(P("x^5+x*y+3*y^2")) == ExponentVector{1, 1});
}

TEST_CASE("small standard bases") {
  auto m = sb_of({P("2*x"), P("2*y")});
  CHECK(colength(m).value == 1);
  CHECK(m.leading_ideal().size() == 2);

  auto j = sb_of(jacobian(P("x^3+y^3")));
  auto lead = j.leading_ideal();
  std::sort(lead.begin(), lead.end());
  CHECK(lead == std::vector<ExponentVector>{ExponentVector{0, 2}, ExponentVector{2, 0}});
  auto std_m = standard_monomials(j);
  std::sort(std_m.begin(), std_m.end());
  CHECK(std_m == std::vector<ExponentVector>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});

  auto a2 = sb_of(jacobian(P("x^2+y^3")));
  CHECK(standard_monomials(a2).size() == 2);
  CHECK(standard_monomials(sb_of(jacobian(P("x^2+y^2")))).size() == 1);
}

TEST_CASE("non-isolated ideals have infinite colength") {
  auto sb = sb_of(jacobian(P("x^2*y")));
  CHECK(colength(sb).infinite);
  CHECK_THROWS_AS(standard_monomials(sb), std::domain_error);
  CHECK(!oracle::find_corner(jacobian(P("x^2*y")), 2, 12));
}

TEST_CASE("normal forms") {
  auto x = sb_of({P("x")});
  CHECK(normal_form(P("x^2"), x).is_zero());
  Polynomial f = P("x^5+y^5+x^3*y^3");
  auto j = sb_of(jacobian(f));
  Polynomial nf = reduced_normal_form(f, j);
  REQUIRE(!nf.is_zero());
  CHECK(MonomialOrder(2).leading_exponent(nf) == ExponentVector{3, 3});
  CHECK(ideal_contains(j, poly_pow(f, 2)));
  CHECK(!ideal_contains(j, f));
  // the oracle agrees on both memberships
  oracle::TruncatedIdeal t(jacobian(f), 2, *oracle::find_corner(jacobian(f), 2, 20));
  CHECK(!t.contains(f));
  CHECK(t.contains(poly_pow(f, 2)));
}

TEST_CASE("colengths match truncated linear algebra") {
  const std::vector<std::pair<const char*, int>> germs = {
      {"x^6+y^5+x^3*y^3", 2}, {"x^7+y^6+x^5*y^2", 2}, {"x^5+y^4+x^2*y^2", 2}, {"x^6+y^6+x^4*y^3", 2},
      {"x^3+y^4+z^3", 3},     {"x^5+y^5+z^5+x^2*y^2*z^2", 3}, {"x^4+y^4+x*y*z+z^3", 3}};
  for (const auto& [text, n] : germs) {
    CAPTURE(text);
    Polynomial f = P(text, n);
    for (const auto& gens : {jac_and(f), jac_and(f, {f}), jac_and(f, {poly_pow(f, 2)})}) {
      auto sb = standard_basis(gens, MonomialOrder(n));
      auto want = oracle::colength(gens, n);
      REQUIRE(want);
      CHECK(colength(sb).value == *want);
      CHECK(verify_spair_criterion(sb));
    }
  }
}

TEST_CASE("membership matches the oracle on random polynomials") {
  Polynomial f = P("x^7+y^6+x^5*y^2");
  auto gens = jacobian(f);
  auto sb = sb_of(gens);
  oracle::TruncatedIdeal t(gens, 2, *oracle::find_corner(gens, 2, 20));
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> deg(0, 9), coef(-3, 3);
  for (int trial = 0; trial < 60; ++trial) {
    Polynomial g(2);
    for (int k = 0; k < 3; ++k) g.add_term(ExponentVector{deg(rng), deg(rng)}, Rational(coef(rng)));
    // half the trials land in the ideal by construction
    if (trial % 2) g = g * gens[0] + P("x*y") * gens[1];
    CAPTURE(g.render());
    CHECK(ideal_contains(sb, g) == t.contains(g));
  }
}

TEST_CASE("Brieskorn-Pham Milnor numbers are products") {
  for (int a = 2; a <= 6; ++a)
    for (int b = 2; b <= 6; ++b) {
      Polynomial f(2);
      f.add_term(ExponentVector{a, 0}, 1);
      f.add_term(ExponentVector{0, b}, 1);
      CHECK(colength(sb_of(jacobian(f))).value == (a - 1) * (b - 1));
    }
  CHECK(colength(sb_of(jacobian(P("x^3+y^4+z^5", 3)))).value == 24);
}

TEST_CASE("colength does not depend on the presentation") {
  Polynomial f = P("x^6+y^5+x^3*y^3");
  auto j = jacobian(f);
  long c = colength(sb_of(j)).value;
  CHECK(colength(sb_of({j[1], j[0]})).value == c);
  CHECK(colength(sb_of({j[0] + P("x^2+3") * j[1], j[1], j[0] * P("y")})).value == c);
  CHECK(colength(standard_basis(j, MonomialOrder(2), 12)).value == c);
}

TEST_CASE("cache returns shared bases") {
  StandardBasisCache cache;
  auto j = jacobian(P("x^5+y^4"));
  auto a = cache.get(j, MonomialOrder(2));
  auto b = cache.get(j, MonomialOrder(2));
  CHECK(a == b);
  CHECK(cache.hits() == 1);
  CHECK(cache.size() == 1);
}
