#include "core/genus.hpp"
#include "core/named_genera.hpp"
#include "doctest.h"

using namespace genus_forge;

namespace {

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
  return add_trivial(whitney_sum(parts), m - n + 1 - static_cast<int>(dims.size()));
}

std::vector<Bundle> small_catalog() {
  return {hyperplane_family(4, {1, 1}), hyperplane_family(5, {1, 1}), hyperplane_family(5, {1, 1, 1}),
          hyperplane_family(4, {2, 1}), tangent_bundle(projective_space(2)),
          tangent_bundle(projective_space(3)), add_trivial(elliptic_cube_line(), 2)};
}

}  // namespace

TEST_CASE("psi on projective spaces") {
  auto psi = build_psi(8);
  const char* expected[] = {"-1/2*q1", "3/8*q1^2 - 1/2*q2", "-5/16*q1^3 + 3/4*q1*q2 - 1/2*q3",
                            "35/128*q1^4 - 15/16*q1^2*q2 + 3/4*q1*q3 + 3/8*q2^2 - 1/2*q4"};
  for (int m = 1; m <= 4; ++m) CHECK(to_string(evaluate(psi, *projective_space(m))) == expected[m - 1]);
  CHECK(to_string(evaluate(psi, *projective_space(0))) == "1");
}

TEST_CASE("psi characteristic series two ways") {
  const int order = 12;
  auto psi = build_psi(order);
  std::array<MultiPoly, 4> q;
  for (int i = 0; i < 4; ++i) q[i] = MultiPoly::variable(psi_ring(), i);
  Series<MultiPoly> h = solve_h_ode(q, order);
  CHECK(h.order() == order);
  CHECK(psi.char_series.order() == order);
  for (int k = 0; k <= order; ++k) CHECK(h.coeff(k) == psi.char_series.coeff(k));
}

TEST_CASE("multiplicativity on products") {
  auto psi = build_psi(6);
  auto a = projective_space(1), b = projective_space(2), c = projective_space(3);
  CHECK(evaluate(psi, *product(a, b)) == evaluate(psi, *a) * evaluate(psi, *b));
  CHECK(evaluate(psi, *product(b, c)) == evaluate(psi, *b) * evaluate(psi, *c));
  auto chi = build_chi_y(6);
  CHECK(evaluate(chi, *product(a, c)) == evaluate(chi, *a) * evaluate(chi, *c));
}

TEST_CASE("H formula paths agree") {
  auto psi = build_psi(7);
  for (const Bundle& e : small_catalog()) {
    CAPTURE(e.label);
    if (!e.roots) {
      CHECK_THROWS_AS(evaluate_projectivization_via_H(psi, e), DomainError);
      continue;
    }
    MultiPoly direct = evaluate(psi, *projectivize(e));
    CHECK(evaluate_projectivization_via_H(psi, e) == direct);
    if (e.rank <= 3) CHECK(evaluate_projectivization_via_H_formal(psi, e) == direct);
  }
}

TEST_CASE("H is symmetric for k = 2, 3") {
  auto psi = build_psi(14);
  for (int k = 2; k <= 3; ++k) {
    Poly<MultiPoly> h = H_formal(psi.char_series, k, 8);
    const auto& ring = h.ring();
    // swap x1 and x2
    std::vector<Poly<MultiPoly>> swapped;
    for (int i = 0; i < k; ++i) swapped.push_back(Poly<MultiPoly>::variable(ring, i == 0 ? 1 : i == 1 ? 0 : i));
    CHECK(h.substitute(swapped) == h);
    if (k == 3) {
      std::vector<Poly<MultiPoly>> cyc;
      for (int i = 0; i < k; ++i) cyc.push_back(Poly<MultiPoly>::variable(ring, (i + 1) % k));
      CHECK(h.substitute(cyc) == h);
    }
    CHECK(h.constant_term() == evaluate(psi, *projective_space(k - 1)));
  }
}

TEST_CASE("psi is dualization invariant") {
  auto psi = build_psi(7);
  for (const Bundle& e : small_catalog()) {
    CAPTURE(e.label);
    CHECK(evaluate(psi, *projectivize(e)) == evaluate(psi, *projectivize(dual(e))));
  }
}

TEST_CASE("psi vanishes on the elliptic cube family") {
  auto psi = build_psi(8);
  for (int m = 5; m <= 7; ++m) {
    Bundle e = add_trivial(elliptic_cube_line(), m - 3);
    CHECK(evaluate(psi, *projectivize(e)).is_zero());
  }
}

TEST_CASE("Krichever-Hoehn genus") {
  auto kh = build_kh(6);
  const char* expected[] = {"1/2*p1", "3/16*p1^2 + 1/4*p2", "1/16*p1^3 + 1/4*p1*p2 + 1/6*p3",
                            "5/256*p1^4 + 5/32*p1^2*p2 + 11/48*p1*p3 + 1/16*p2^2 + 1/8*p4"};
  for (int m = 1; m <= 4; ++m) CHECK(to_string(evaluate(kh, *projective_space(m))) == expected[m - 1]);
  // b coefficients of log Q via power sums
  const auto& p = kh_ring();
  auto P = [&](int i) { return MultiPoly::variable(p, i); };
  CHECK(kh.char_series.coeff(1) == P(0) * MultiPoly(Rational(1, 4)));
  CHECK(kh.char_series.coeff(2) == P(1) * MultiPoly(Rational(1, 12)));
  CHECK(kh.char_series.coeff(3) == P(2) * MultiPoly(Rational(1, 24)));
  CHECK(kh.char_series.coeff(4) ==
        (MultiPoly(-1) * P(1).pow(2) + MultiPoly(3) * P(0) * P(2) + MultiPoly(18) * P(3)) * MultiPoly(Rational(1, 720)));
  auto solved = solve_q_in_p();
  auto expected_q = expected_q_in_p();
  for (int i = 0; i < 4; ++i) CHECK(solved[i] == expected_q[i]);
}

TEST_CASE("Ochanine logarithm is odd") {
  auto och = build_ochanine(11);
  for (int k = 0; k <= och.log_series.order(); k += 2) CHECK(och.log_series.coeff(k).is_zero());
  for (int k = 1; k <= och.char_series.order(); k += 2) CHECK(och.char_series.coeff(k).is_zero());
  // odd-dimensional spaces vanish
  CHECK(evaluate(och, *projective_space(3)).is_zero());
}

TEST_CASE("chi_y on projective spaces and bundles") {
  auto chi = build_chi_y(8);
  const auto& R = chi_y_ring();
  MultiPoly y = symbol(R, "y"), t = symbol(R, "t");
  for (int n = 0; n <= 5; ++n) {
    MultiPoly expect(R);
    for (int i = 0; i <= n; ++i) expect += (MultiPoly(-1) * y).pow(i);
    expect = expect * t.pow(n);
    CHECK(evaluate(chi, *projective_space(n)) == expect);
  }
  for (const Bundle& e : small_catalog()) {
    CAPTURE(e.label);
    MultiPoly lhs = evaluate(chi, *projectivize(e));
    MultiPoly rhs = evaluate(chi, *projective_space(e.rank - 1)) * evaluate(chi, *e.base);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("degenerate psi factors through chi_y") {
  auto deg = build_psi_deg(5);
  auto chi = build_chi_y(5);
  const auto& R = degenerate_ring();
  RatFrac y(symbol(R, "y")), t(symbol(R, "t"));
  for (int n = 1; n <= 4; ++n) {
    RatFrac v = evaluate(deg, *projective_space(n));
    RatFrac eta = substitute(v, {{"s", RatFrac(MultiPoly(R))}, {"t", (RatFrac(1) + y) * t}});
    MultiPoly c = evaluate(chi, *projective_space(n));
    MultiPoly embedded = c.embed(R, {1, 2});
    CHECK(eta == RatFrac(embedded));
  }
  RatFrac pole = RatFrac(1) / (RatFrac(1) + y);
  CHECK_THROWS_AS(substitute(pole, {{"y", RatFrac(MultiPoly(-1))}}), DomainError);
}

TEST_CASE("A-hat from the degenerate genus and at the Ochanine cusp") {
  auto ahat = build_ahat(8);
  CHECK(evaluate(ahat, *projective_space(2)) == Rational(-1, 8));
  CHECK(evaluate(ahat, *projective_space(4)) == Rational(3, 128));
  CHECK(evaluate(ahat, *projective_space(1)) == Rational(0));

  // psi at q = (0, 1/4, 0, 0) is A-hat
  auto psi = build_psi(8);
  auto point_ring = make_ring({});
  std::map<std::string, MultiPoly> at{{"q1", MultiPoly(0)}, {"q2", MultiPoly(Rational(1, 4))},
                                      {"q3", MultiPoly(0)}, {"q4", MultiPoly(0)}};
  auto at_ahat = specialize(psi, at, point_ring);
  for (int n = 1; n <= 4; ++n)
    CHECK(evaluate(at_ahat, *projective_space(n)).constant_term() == evaluate(ahat, *projective_space(n)));

  // Ochanine at the cusp delta = -1/8, epsilon = 0 is A-hat
  auto och = build_ochanine(8);
  std::map<std::string, MultiPoly> cusp{{"delta", MultiPoly(Rational(-1, 8))}, {"epsilon", MultiPoly(0)}};
  auto oc = specialize(och, cusp, point_ring);
  for (int n = 2; n <= 4; n += 2)
    CHECK(evaluate(oc, *projective_space(n)).constant_term() == evaluate(ahat, *projective_space(n)));

  // degenerate psi: s -> -1, y -> 0, then t -> 1/2
  auto deg = build_psi_deg(8);
  const auto& R = degenerate_ring();
  for (int n = 1; n <= 4; ++n) {
    RatFrac v = evaluate(deg, *projective_space(n));
    RatFrac a = substitute(v, {{"s", RatFrac(MultiPoly(-1))}, {"y", RatFrac(MultiPoly(0))}, {"t", RatFrac(MultiPoly(Rational(1, 2)))}});
    CHECK(a == RatFrac(MultiPoly::constant(R, evaluate(ahat, *projective_space(n)))));
  }
}

TEST_CASE("specialization checks weights") {
  auto psi = build_psi(4);
  const auto& R = chi_y_ring();
  std::map<std::string, MultiPoly> bad{{"q1", symbol(R, "t").pow(2)}};
  CHECK_THROWS_AS(specialize(psi, bad, R), DomainError);
}

TEST_CASE("q-expansion") {
  const int qmax = 2;
  for (int n = 1; n <= 2; ++n) {
    CAPTURE(n);
    auto cp = projective_space(n);
    auto qe = build_q_expansion(qmax, 2 * n + 2);
    CHECK(qe.coeff(0, 0) == RatFrac(1));
    for (int l = 1; l <= qmax; ++l) CHECK(qe.coeff(l, 0).is_zero());
    // q^0 layer is the degenerate psi
    auto deg = build_psi_deg(2 * n + 2);
    const auto& R = degenerate_ring();
    for (int k = 0; k <= 2 * n + 2; ++k) {
      RatFrac d = substitute(deg.char_series.coeff(k), {{"t", RatFrac(MultiPoly::constant(R, Rational(1)))}});
      CHECK(qe.coeff(0, k) == d);
    }
    auto lhs = q_expanded_psi(qe, *cp);
    auto rhs = theta_identity_rhs(*cp, qmax);
    for (int l = 0; l <= qmax; ++l) CHECK(lhs.coeff(l) == rhs.coeff(l));
    CHECK(degenerate_bundle_side(*cp) == lhs.coeff(0));
  }
  CHECK(todd_genus(*projective_space(1)) == Rational(1));
  CHECK(todd_genus(*projective_space(3)) == Rational(1));
}
