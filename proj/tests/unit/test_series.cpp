#include <random>

#include "core/poly.hpp"
#include "core/series.hpp"
#include "doctest.h"

using namespace genus_forge;

namespace {

using S = Series<Rational>;
using PS = Series<MultiPoly>;

PolyRingPtr q_ring() { return make_ring({{"q1", 2}, {"q2", 4}, {"q3", 6}, {"q4", 8}}); }

S poly(std::vector<Rational> c, int order) { return S(std::move(c), order); }

PS psi_log_derivative(const PolyRingPtr& R, int order) {
  std::vector<MultiPoly> c{MultiPoly(1)};
  for (int i = 0; i < 4; ++i) c.push_back(MultiPoly::variable(R, i));
  return PS(c, order).sqrt().inverse();
}

}  // namespace

TEST_CASE("sqrt") {
  S a = poly({1, 1}, 6).sqrt();
  CHECK(a.coeff(0) == Rational(1));
  CHECK(a.coeff(1) == Rational(1, 2));
  CHECK(a.coeff(2) == Rational(-1, 8));
  CHECK(a.coeff(3) == Rational(1, 16));
  CHECK((a * a).agrees_with(poly({1, 1}, 6)));
  CHECK(poly({1}, 5).sqrt().agrees_with(poly({1}, 5)));
  CHECK_THROWS_AS(poly({2, 1}, 5).sqrt(), DomainError);

  auto R = q_ring();
  PS g = psi_log_derivative(R, 4);
  MultiPoly q1 = MultiPoly::variable(R, 0), q2 = MultiPoly::variable(R, 1);
  CHECK(g.coeff(1) == MultiPoly(Rational(-1, 2)) * q1);
  CHECK(g.coeff(2) == MultiPoly(Rational(3, 8)) * q1 * q1 - MultiPoly(Rational(1, 2)) * q2);
}

TEST_CASE("exp and log") {
  S l = poly({1, 1}, 8).log();
  for (int n = 1; n <= 8; ++n) CHECK(l.coeff(n) == Rational(n % 2 ? 1 : -1, n));
  CHECK(l.exp().agrees_with(poly({1, 1}, 8)));
  auto R = q_ring();
  MultiPoly q1 = MultiPoly::variable(R, 0);
  PS e = PS({MultiPoly(0), q1}, 2).exp();
  CHECK(e.coeff(1) == q1);
  CHECK(e.coeff(2) == MultiPoly(Rational(1, 2)) * q1 * q1);
  CHECK_THROWS_AS(poly({1, 1}, 4).exp(), DomainError);
  CHECK_THROWS_AS(poly({2, 1}, 4).log(), DomainError);
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-6, 6);
  for (int it = 0; it < 10; ++it) {
    std::vector<Rational> c{0};
    for (int i = 1; i <= 9; ++i) c.push_back(Rational(d(rng), 1 + (i % 3)));
    S a(c, 9);
    CHECK(a.exp().log().agrees_with(a));
    c[0] = 1;
    S b(c, 9);
    CHECK(b.log().exp().agrees_with(b));
    CHECK((b.sqrt() * b.sqrt()).agrees_with(b));
    CHECK((b * b.inverse()).agrees_with(S(Rational(1)), 9));
  }
}

TEST_CASE("integrate and derive") {
  auto R = q_ring();
  PS g = psi_log_derivative(R, 6).integrate();
  MultiPoly q1 = MultiPoly::variable(R, 0);
  CHECK(g.coeff(0).is_zero());
  CHECK(g.coeff(1) == MultiPoly(1));
  CHECK(g.coeff(2) == MultiPoly(Rational(-1, 4)) * q1);
  CHECK(S::monomial(3, 1, 5).derive().agrees_with(S::monomial(2, 3, 4)));
  CHECK(S({}, 6).integrate().is_zero_series());
  S z({0, 3, -1, Rational(2, 7)}, 7);
  CHECK(z.integrate().derive().agrees_with(z));
  CHECK(z.derive().integrate().agrees_with(z));
}

TEST_CASE("reversion") {
  S f = poly({0, 1, -1}, 8).reversion();
  const int catalan[] = {0, 1, 1, 2, 5, 14, 42, 132, 429};
  for (int n = 0; n <= 8; ++n) CHECK(f.coeff(n) == Rational(catalan[n]));
  CHECK(S::variable(6).reversion().agrees_with(S::variable(6)));
  CHECK_THROWS_AS(poly({0, 2}, 5).reversion(), DomainError);
  CHECK_THROWS_AS(poly({1, 1}, 5).reversion(), DomainError);

  std::mt19937 rng(9);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int it = 0; it < 10; ++it) {
    std::vector<Rational> c{0, 1};
    for (int i = 2; i <= 10; ++i) c.push_back(Rational(d(rng), 1 + (i % 4)));
    S g(c, 10);
    S r = g.reversion();
    CHECK(g.compose(r).agrees_with(S::variable(10)));
    CHECK(r.compose(g).agrees_with(S::variable(10)));
  }

  auto R = q_ring();
  PS gpsi = psi_log_derivative(R, 6).integrate();
  PS fpsi = gpsi.reversion();
  CHECK(fpsi.coeff(2) == MultiPoly(Rational(1, 4)) * MultiPoly::variable(R, 0));
  PS Q = fpsi.shift_down(1).inverse();
  CHECK(Q.coeff(1) == MultiPoly(Rational(-1, 4)) * MultiPoly::variable(R, 0));
}

TEST_CASE("truncation discipline") {
  S a = poly({1, 2, 3}, 2);
  CHECK_THROWS_AS(a.coeff(3), DomainError);
  CHECK((a + poly({1, 1, 1, 1}, 5)).order() == 2);
  CHECK_THROWS_AS(S(Rational(1)).exp(), DomainError);
  CHECK(S({0, 1, 1}, 4).valuation() == 1);
}

TEST_CASE("h ode") {
  std::array<Rational, 4> zero{0, 0, 0, 0};
  CHECK(solve_h_ode(zero, 8).agrees_with(S(Rational(1))));

  auto R = q_ring();
  std::array<MultiPoly, 4> q;
  for (int i = 0; i < 4; ++i) q[i] = MultiPoly::variable(R, i);
  PS u = solve_h_ode(q, 12);
  CHECK(u.coeff(1) == MultiPoly(Rational(-1, 4)) * q[0]);

  std::mt19937 rng(1);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int it = 0; it < 5; ++it) {
    std::array<Rational, 4> qr;
    for (auto& v : qr) v = Rational(d(rng), 1 + it);
    S w = solve_h_ode(qr, 10);
    S x = S::variable(10);
    S lhs = x * w.derive() - w;
    lhs = lhs * lhs;
    S rhs = w.pow(4) + (w.pow(3) * x).scaled(qr[0]) + (w * w * x * x).scaled(qr[1]) + (w * x.pow(3)).scaled(qr[2]) +
            x.pow(4).scaled(qr[3]);
    CHECK((lhs - rhs).agrees_with(S({}, 10), 9));
  }
}
