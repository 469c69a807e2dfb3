#include "doctest.h"
#include "oracle.hpp"
#include "singspec/graded.hpp"
#include "singspec/parser.hpp"

using namespace singspec;

namespace {

Polynomial P(const char* s, int n = 2) { return parse_poly(s, default_variable_names(n)); }

FiltrationLadder auto_ladder(const Polynomial& f, int e = 1) {
  ModeChoice m = detect_mode(f);
  return FiltrationLadder::build(f, e, m.mode, m.weights, false);
}

Spectrum missing_of(const FiltrationLadder& L) { return missing_spectrum(steenbrink_spectrum(L), tjurina_spectrum(L)); }

std::map<Rational, std::vector<Rational>> expanded_blocks(const BigradedTable& t) {
  std::map<Rational, std::vector<Rational>> out;
  for (const auto& [g, es] : t.blocks())
    for (const auto& e : es)
      for (long k = 0; k < e.mult; ++k) out[g].push_back(e.alpha);
  return out;
}

}  // namespace

TEST_CASE("intersection dimensions: filtered basis against colengths") {
  for (const char* text : {"x^6+y^5+x^3*y^3", "x^5+y^5+x^3*y^3", "x^7+y^6+x^5*y^2"}) {
    CAPTURE(text);
    auto L = auto_ladder(P(text));
    const auto& g = L.grid().values;
    for (std::size_t i = 0; i < g.size(); i += 3)
      for (std::size_t j = 0; j < g.size(); j += 2) CHECK(subspace_dim_X(L, g[i], g[j]) == subspace_dim_X_colength(L, g[i], g[j]));
    CHECK(subspace_dim_X(L, g.front(), g.front()) == L.mu() - L.tau());
  }
}

TEST_CASE("bigraded dimensions of x^5+y^5+x^3y^3") {
  auto L = auto_ladder(P("x^5+y^5+x^3*y^3"));
  CHECK(subspace_dim_X(L, Rational(2, 5), Rational(8, 5)) == 1);
  CHECK(subspace_dim_X(L, Rational(2, 5), Rational(2)) == 0);
  long total = 0;
  for (const auto& a : L.grid().values)
    for (const auto& b : L.grid().values) {
      long d = bigraded_dimension(L, a, b);
      total += d;
      if (d) {
        CHECK(a == Rational(8, 5));
        CHECK(b == Rational(2, 5));
      }
    }
  CHECK(total == 1);
  auto t = bigraded_table(L, missing_of(L));
  REQUIRE(t.entries().size() == 1);
  CHECK(t.entries()[0] == BigradedEntry{Rational(8, 5), Rational(6, 5), 1});
}

TEST_CASE("bigraded tables of the two-number examples") {
  auto L = auto_ladder(P("x^6+y^5+x^3*y^3"));
  auto t = bigraded_table(L, missing_of(L));
  auto b = expanded_blocks(t);
  REQUIRE(b.size() == 1);
  CHECK(b.begin()->first == Rational(11, 10));
  CHECK(b.begin()->second == std::vector<Rational>{Rational(44, 30), Rational(49, 30)});
  CHECK(check_graded_symmetry(t, L.alpha_1()).overall.status == Status::pass);
  CHECK(bigraded_table_codemode(L, missing_of(L)) == t);
}

TEST_CASE("f_{n,a} tables against the explicit monomial description") {
  for (auto [n, a] : {std::pair{2, 3}, {2, 4}, {2, 5}, {3, 2}, {3, 3}}) {
    CAPTURE(n);
    CAPTURE(a);
    Polynomial f(n);
    ExponentVector all(n);
    for (int i = 0; i < n; ++i) {
      f.add_term(ExponentVector::unit(n, i, a * n - 1), 1);
      all[i] = a;
    }
    f.add_term(all, 1);
    auto L = auto_ladder(f);
    auto t = bigraded_table(L, missing_of(L));
    CHECK(expanded_blocks(t) == oracle::fna_blocks(n, a));
    CHECK(check_graded_symmetry(t, L.alpha_1()).overall.status == Status::pass);
    long count = 0;
    for (const auto& [g, xs] : oracle::fna_blocks(n, a)) count += static_cast<long>(xs.size());
    CHECK(L.mu() - L.tau() == count);
  }
}

TEST_CASE("row sums equal missing multiplicities") {
  for (const char* text : {"x^7+y^6+x^5*y^2", "x^6+y^6+x^4*y^3", "x^9+y^7+x^4*y^4", "x^8+y^8+x^5*y^4"}) {
    auto L = auto_ladder(P(text));
    auto ms = missing_of(L);
    auto t = bigraded_table(L, ms);
    for (const auto& e : ms.poly.entries()) CHECK(t.row_sum(e.alpha) == e.mult);
    for (const auto& e : t.entries()) CHECK(e.gamma >= Rational(1));
  }
}

TEST_CASE("weighted homogeneous germs have empty tables") {
  auto L = auto_ladder(P("x^3+y^4"));
  auto ms = missing_of(L);
  CHECK(ms.poly.empty());
  CHECK(bigraded_table(L, ms).empty());
  CHECK(bigraded_table_codemode(L, ms).empty());
  CHECK(check_graded_symmetry(BigradedTable(2, 1), Rational(7, 12)).overall.status == Status::pass);
}

TEST_CASE("graded symmetry rejects a constructed violation") {
  BigradedTable t(2, 1);
  t.add(Rational(1, 2), Rational(1), 1);
  t.add(Rational(1), Rational(1), 1);
  auto v = check_graded_symmetry(t, Rational(1, 4));
  CHECK(v.overall.status == Status::fail);
  CHECK(!v.block_symmetric.at(Rational(1)));
}

TEST_CASE("class levels agree with coordinates in the filtered basis") {
  auto L = auto_ladder(P("x^7+y^6+x^5*y^2"));
  for (const auto& m : L.algebra().monomials()) {
    Polynomial g = Polynomial::monomial(m);
    auto a = class_level(L, g);
    auto b = L.vbasis().level_of(L.algebra().class_of(g));
    CHECK(a == b);
  }
  for (const Polynomial& g : {L.f(), L.f() * P("x"), L.f() * P("y")})
    CHECK(class_level(L, g) == L.vbasis().level_of(L.algebra().class_of(g)));
  CHECK(class_level(L, L.f() * P("x")) == Rational(65, 42));
  CHECK(class_level(L, L.f() * P("y")) == Rational(64, 42));
}

TEST_CASE("sigma and Briancon-Skoda") {
  auto L = auto_ladder(P("x^5+y^5+x^3*y^3"));
  auto s = sigma_and_bs(L, bigraded_table(L, missing_of(L)));
  REQUIRE(s);
  CHECK(s->sigma_f == Rational(6, 5));
  CHECK(s->sigma_pp == Rational(6, 5));
  CHECK(s->bs_bound == 2);
  CHECK(s->bs_actual == 2);
  for (const char* text : {"x^6+y^5+x^3*y^3", "x^7+y^6+x^5*y^2", "x^7+y^7+x^4*y^4"}) {
    CAPTURE(text);
    auto M = auto_ladder(P(text));
    auto r = sigma_and_bs(M, bigraded_table(M, missing_of(M)));
    REQUIRE(r);
    CHECK(r->bs_actual <= r->bs_bound);
    auto gens = jacobian(M.f());
    oracle::TruncatedIdeal t(gens, 2, *oracle::find_corner(gens, 2, 30));
    CHECK(t.contains(poly_pow(M.f(), static_cast<int>(r->bs_actual))));
    if (r->bs_actual > 1) CHECK(!t.contains(poly_pow(M.f(), static_cast<int>(r->bs_actual - 1))));
    CHECK(r->sigma_f <= r->sigma_pp);
  }
  // swh: σ_f is at least the first weight above one
  auto W = auto_ladder(P("x^7+y^6+x^5*y^2"));
  CHECK(sigma_and_bs(W, bigraded_table(W, missing_of(W)))->sigma_f >= Rational(22, 21));
}
