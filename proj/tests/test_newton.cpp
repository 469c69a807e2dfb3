#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "singspec/newton.hpp"
#include "singspec/parser.hpp"
#include "singspec/standard_basis.hpp"

using namespace singspec;

namespace {

using Pts = std::vector<ExponentVector>;

std::vector<std::vector<Rational>> forms(const NewtonPolytope& np) {
  std::vector<std::vector<Rational>> out;
  for (const auto& f : np.facets()) out.push_back(f.form);
  std::sort(out.begin(), out.end());
  return out;
}

/// Area under the lower hull of a convenient plane support, by shoelace
/// over the hull chain from the y-axis point to the x-axis point.
Rational shoelace_area(Pts pts) {
  std::sort(pts.begin(), pts.end());
  Pts hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      long cross = long(b[0] - a[0]) * (p[1] - a[1]) - long(b[1] - a[1]) * (p[0] - a[0]);
      if (cross <= 0) hull.pop_back();
      else break;
    }
    hull.push_back(p);
  }
  auto s = std::find_if(hull.begin(), hull.end(), [](const auto& p) { return p[0] == 0; });
  auto e = std::find_if(hull.begin(), hull.end(), [](const auto& p) { return p[1] == 0; });
  long twice = 0;
  for (auto it = s; it != e; ++it) twice += long((it + 1)[0][0]) * (*it)[1] - long((*it)[0]) * (it + 1)[0][1];
  return Rational(twice, 2);
}

}  // namespace

TEST_CASE("facets of small supports") {
  NewtonPolytope a(Pts{{5, 0}, {0, 5}, {3, 3}});
  REQUIRE(a.facets().size() == 1);
  CHECK(a.facets()[0].form == std::vector<Rational>{Rational(1, 5), Rational(1, 5)});
  CHECK(a.facets()[0].on_face.size() == 2);
  CHECK(a.level(ExponentVector{3, 3}, false) == Rational(6, 5));

  NewtonPolytope b(Pts{{2, 0}, {0, 3}});
  REQUIRE(b.facets().size() == 1);
  CHECK(b.facets()[0].form == std::vector<Rational>{Rational(1, 2), Rational(1, 3)});

  NewtonPolytope c(Pts{{3, 3, 3}, {12, 0, 0}, {0, 12, 0}, {0, 0, 12}});
  auto expect = std::vector<std::vector<Rational>>{{Rational(1, 12), Rational(1, 12), Rational(1, 6)},
                                                   {Rational(1, 12), Rational(1, 6), Rational(1, 12)},
                                                   {Rational(1, 6), Rational(1, 12), Rational(1, 12)}};
  std::sort(expect.begin(), expect.end());
  CHECK(forms(c) == expect);
  CHECK(c.level(ExponentVector{0, 0, 0}, true) == Rational(1, 3));
  CHECK(c.common_denominator() == 12);
}

TEST_CASE("facets do not depend on the order of the support") {
  Pts pts{{11, 0, 0}, {0, 10, 0}, {0, 0, 9}, {9, 2, 0}, {4, 4, 3}};
  auto ref = forms(NewtonPolytope(pts));
  std::mt19937 rng(3);
  for (int i = 0; i < 10; ++i) {
    std::shuffle(pts.begin(), pts.end(), rng);
    CHECK(forms(NewtonPolytope(pts)) == ref);
  }
}

TEST_CASE("convenience") {
  CHECK(is_convenient(Pts{{5, 0}, {0, 5}, {3, 3}}, 2));
  CHECK(!is_convenient(Pts{{2, 1}}, 2));
  CHECK(is_convenient(Pts{{11, 0, 0}, {0, 10, 0}, {0, 0, 9}, {9, 2, 0}, {4, 4, 3}}, 3));
  CHECK(!NewtonPolytope(Pts{{3, 0}, {1, 2}}).convenient());
}

TEST_CASE("levels are monotone and one on faces") {
  NewtonPolytope np(Pts{{7, 0}, {0, 6}, {5, 2}});
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) {
      ExponentVector v{i, j};
      CHECK(np.level(v + ExponentVector{1, 0}, false) >= np.level(v, false));
      CHECK(np.level(v + ExponentVector{0, 1}, false) >= np.level(v, false));
      CHECK(np.level(v, true) == np.level(v + ExponentVector{1, 1}, false));
    }
  for (const auto& p : np.points()) CHECK(np.level(p, false) >= Rational(1));
  CHECK(np.level(ExponentVector{7, 0}, false) == Rational(1));
  CHECK(np.level(ExponentVector{5, 2}, false) == Rational(22, 21));
  NewtonPolytope five(Pts{{5, 0}, {0, 5}});
  CHECK(five.level(ExponentVector{0, 0}, true) == Rational(2, 5));
}

TEST_CASE("level grids") {
  NewtonPolytope np(Pts{{2, 0}, {0, 3}});
  auto g = level_grid(np, 2);
  REQUIRE(g.values.size() == 12);
  CHECK(g.values.front() == Rational(1, 6));
  CHECK(g.values.back() == Rational(2));
  CHECK(g.lower_index(Rational(1, 2)) == 2);
  CHECK(g.lower_index(Rational(3)) == 12);
  NewtonPolytope c(Pts{{3, 3, 3}, {12, 0, 0}, {0, 12, 0}, {0, 0, 12}});
  CHECK(level_grid(c, 3).values.size() == 36);
}

TEST_CASE("filtration generators are minimal and at the level") {
  NewtonPolytope np(Pts{{5, 0}, {0, 5}});
  auto g = filtration_generators(np, Rational(8, 5), np.box_bound());
  std::sort(g.begin(), g.end());
  Pts expect;
  for (int i = 0; i <= 6; ++i) expect.push_back(ExponentVector{i, 6 - i});
  CHECK(g == expect);
  auto unit = filtration_generators(np, Rational(2, 5), np.box_bound());
  CHECK(unit == Pts{ExponentVector{0, 0}});

  NewtonPolytope h(Pts{{11, 0, 0}, {0, 10, 0}, {0, 0, 9}, {9, 2, 0}, {4, 4, 3}});
  Rational alpha(1000, 990);
  for (const auto& m : filtration_generators(h, alpha, h.box_bound())) {
    CHECK(h.level(m, true) >= alpha);
    for (int i = 0; i < 3; ++i)
      if (m[i] > 0) CHECK(h.level(m - ExponentVector::unit(3, i), true) < alpha);
  }
}

TEST_CASE("diagram volumes against shoelace and simplex formulas") {
  for (const Pts& pts : {Pts{{5, 0}, {0, 5}}, Pts{{7, 0}, {0, 6}, {5, 2}}, Pts{{6, 0}, {0, 5}, {3, 3}},
                         Pts{{9, 0}, {0, 7}, {4, 4}}, Pts{{8, 0}, {0, 8}, {5, 4}}, Pts{{5, 0}, {0, 4}, {2, 2}},
                         Pts{{6, 0}, {0, 6}, {4, 3}, {2, 5}}}) {
    NewtonPolytope np(pts);
    CHECK(under_diagram_volume(np) == shoelace_area(pts));
  }
  for (int a = 2; a <= 5; ++a)
    for (int c = 2; c <= 5; ++c) {
      NewtonPolytope np(Pts{{a, 0, 0}, {0, 3, 0}, {0, 0, c}});
      CHECK(under_diagram_volume(np) == Rational(a * 3 * c, 6));
    }
}

TEST_CASE("Kouchnirenko numbers") {
  CHECK(kouchnirenko_mu(NewtonPolytope(Pts{{5, 0}, {0, 5}})) == 16);
  CHECK(kouchnirenko_mu(NewtonPolytope(Pts{{2, 0}, {0, 3}})) == 2);
  CHECK(kouchnirenko_mu(NewtonPolytope(Pts{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}})) == 1);
  // equals the Jacobian colength on non-degenerate germs
  for (const char* text : {"x^6+y^5+x^3*y^3", "x^7+y^6+x^5*y^2", "x^6+y^6+x^4*y^3", "x^5+y^4+x^2*y^2",
                           "x^3+y^4+z^5", "x^5+y^5+z^5+x^2*y^2*z^2"}) {
    CAPTURE(text);
    int n = std::string(text).find('z') != std::string::npos ? 3 : 2;
    Polynomial f = parse_poly(text, default_variable_names(n));
    auto mu = oracle::colength(jacobian(f), n);
    REQUIRE(mu);
    CHECK(kouchnirenko_mu(NewtonPolytope(f.support())) == *mu);
  }
  // and differs on a degenerate one
  Polynomial g = parse_poly("x^2*y*z+x*y^2*z+x*y*z^2+x^5+y^5+z^5", default_variable_names(3));
  CHECK(kouchnirenko_mu(NewtonPolytope(g.support())) != colength(standard_basis(jacobian(g), MonomialOrder(3))).value);
}

TEST_CASE("exact solver") {
  std::vector<Rational> x;
  CHECK(solve_exact({{2, 1}, {1, 3}}, {3, 5}, x));
  CHECK(x == std::vector<Rational>{Rational(4, 5), Rational(7, 5)});
  CHECK(!solve_exact({{1, 2}, {2, 4}}, {1, 2}, x));
}
