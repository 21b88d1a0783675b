#include <random>

#include "core/genus.hpp"
#include "core/manifold.hpp"
#include "doctest.h"

using namespace genus_forge;

namespace {

Rational chern_entry(const ChernTable& t, const std::string& key) {
  for (const auto& [mu, v] : t.entries)
    if (chern_key(mu) == key) return v;
  FAIL("missing Chern number " << key);
  return Rational(0);
}

// O(1) on each CP^{i_j} factor plus a trivial summand, total rank m - n + 1.
Bundle hyperplane_family(int m, const std::vector<int>& dims) {
  std::vector<ManifoldPtr> f;
  int n = 0;
  for (int d : dims) {
    f.push_back(projective_space(d));
    n += d;
  }
  ManifoldPtr base = product(f);
  std::vector<Bundle> parts;
  for (std::size_t j = 0; j < dims.size(); ++j) parts.push_back(hyperplane_bundle(base, static_cast<int>(j) + 1));
  Bundle e = whitney_sum(parts);
  return add_trivial(e, m - n + 1 - static_cast<int>(dims.size()));
}

}  // namespace

TEST_CASE("projective space integrals") {
  for (int n = 0; n <= 5; ++n) {
    auto cp = projective_space(n);
    CHECK(cp->dim == n);
    MultiPoly x = n ? cp->cohomology.generator(0) : cp->cohomology.one();
    CHECK(integrate(*cp, x.pow(n)) == Rational(1));
    if (n) CHECK(integrate(*cp, x.pow(n + 1)) == Rational(0));
    // c_n(CP^n) = n + 1
    CHECK(integrate(*cp, cp->chern_class(n)) == Rational(n + 1));
  }
}

TEST_CASE("chern numbers of small spaces") {
  auto t = chern_numbers(*projective_space(2));
  CHECK(chern_entry(t, "c1^2") == Rational(9));
  CHECK(chern_entry(t, "c2") == Rational(3));

  auto e = chern_numbers(*elliptic_cube_base());
  for (const auto& [mu, v] : e.entries) CHECK(v.is_zero());

  auto p11 = chern_numbers(*product(projective_space(1), projective_space(1)));
  CHECK(chern_entry(p11, "c1^2") == Rational(8));
  CHECK(chern_entry(p11, "c2") == Rational(4));
}

TEST_CASE("Chern numbers of P(TCP^3) and P(T*CP^3)") {
  auto tcp3 = tangent_bundle(projective_space(3));
  auto a = chern_numbers(*projectivize(tcp3));
  auto b = chern_numbers(*projectivize(dual(tcp3)));
  const std::vector<std::pair<std::string, std::pair<long, long>>> rows = {
      {"c1^5", {4500, 4860}}, {"c1^3c2", {2148, 2268}}, {"c1c2^2", {1028, 1068}}, {"c1^2c3", {612, 612}},
      {"c2c3", {292, 292}},   {"c1c4", {108, 108}},     {"c5", {12, 12}}};
  for (const auto& [key, v] : rows) {
    CAPTURE(key);
    CHECK(chern_entry(a, key) == Rational(v.first));
    CHECK(chern_entry(b, key) == Rational(v.second));
  }
  CHECK(milnor_number(*projectivize(tcp3)) == Rational(20));
  CHECK(milnor_number(*projectivize(dual(tcp3))) == Rational(-20));
}

TEST_CASE("milnor numbers of projective spaces") {
  for (int m = 1; m <= 6; ++m) CHECK(milnor_number(*projective_space(m)) == Rational(m + 1));
}

TEST_CASE("projectivization of a trivial bundle is a product") {
  auto b = projective_space(2);
  auto p = projectivize(trivial_bundle(3, b));
  auto q = product(b, projective_space(2));
  auto tp = chern_numbers(*p), tq = chern_numbers(*q);
  REQUIRE(tp.entries.size() == tq.entries.size());
  for (std::size_t i = 0; i < tp.entries.size(); ++i) CHECK(tp.entries[i].second == tq.entries[i].second);
}

TEST_CASE("closed form for s_m(P(E))") {
  // displayed example values
  CHECK(milnor_closed_form(hyperplane_family(5, {1, 1})) == Rational(-6));
  CHECK(milnor_number(*projectivize(hyperplane_family(5, {1, 1}))) == Rational(-6));
  CHECK(milnor_closed_form(hyperplane_family(5, {1, 1, 1})) == Rational(12));
  CHECK(milnor_number(*projectivize(hyperplane_family(5, {1, 1, 1}))) == Rational(12));

  std::vector<Bundle> cases = {hyperplane_family(4, {1, 2}), hyperplane_family(6, {2, 1}),
                               hyperplane_family(5, {3}),    hyperplane_family(6, {1, 2, 1}),
                               tangent_bundle(projective_space(2)), tangent_bundle(projective_space(3))};
  for (int m = 5; m <= 7; ++m) {
    Bundle l = elliptic_cube_line();
    cases.push_back(add_trivial(l, m - 3));
  }
  for (const Bundle& e : cases) {
    CAPTURE(e.label);
    Rational direct = milnor_number(*projectivize(e));
    CHECK(milnor_closed_form(e) == direct);
    CHECK(milnor_closed_form_symmetric(e) == direct);
    // s_m(P(E)) = (-1)^n s_m(P(E*))
    Rational d = milnor_number(*projectivize(dual(e)));
    CHECK((e.base->dim % 2 ? -d : d) == direct);
  }
  for (int m = 5; m <= 8; ++m) {
    Bundle e = add_trivial(elliptic_cube_line(), m - 3);
    CHECK(milnor_number(*projectivize(e)) == Rational((m - 4) * (m - 3) * (m + 1)));
  }
  CHECK_THROWS_AS(milnor_closed_form(elliptic_cube_line()), DomainError);
}

TEST_CASE("segre integration agrees with normal-form reduction") {
  Bundle e = hyperplane_family(5, {1, 1});
  auto pe = projectivize(e);
  const CohomModel& base = e.base->cohomology;
  const CohomModel& top = pe->cohomology;
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int trial = 0; trial < 20; ++trial) {
    int j = 3 + trial % 4;
    int deg = pe->dim - j;
    if (deg < 0 || deg > e.base->dim) continue;
    MultiPoly omega(base.ring());
    for (int a = 0; a <= deg; ++a) {
      Exponents ex{a, deg - a};
      omega += MultiPoly::monomial(base.ring(), ex, Rational(coef(rng)));
    }
    // the same class on P(E): base generators are the leading generators
    Exponents shift(top.num_generators(), 0);
    MultiPoly lifted(top.ring());
    for (const auto& [ex, c] : omega.terms()) {
      Exponents full(top.num_generators(), 0);
      for (std::size_t i = 0; i < ex.size(); ++i) full[i] = ex[i];
      lifted += MultiPoly::monomial(top.ring(), full, c);
    }
    MultiPoly y = top.generator(top.num_generators() - 1);
    CHECK(segre_integral(e, omega, j) == integrate(*pe, top.mul(lifted, y.pow(j))));
  }
}

TEST_CASE("whitney sum and duals") {
  auto b = projective_space(2);
  Bundle t = tangent_bundle(b);
  Bundle d = dual(dual(t));
  CHECK(d.chern == t.chern);
  CHECK_THROWS_AS(whitney_sum(t, tangent_bundle(projective_space(3))), StructuralError);
  CHECK_THROWS_AS(hyperplane_bundle(product(b, elliptic_cube_base()), 2), DomainError);
}
