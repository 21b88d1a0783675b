#include "core/named_genera.hpp"

namespace genus_forge {

using RQ = Series<RatFrac>;   // power series in q
using XQ = Series<RQ>;        // power series in x over RQ

const PolyRingPtr& psi_ring() {
  static const PolyRingPtr r = make_ring({{"q1", 2}, {"q2", 4}, {"q3", 6}, {"q4", 8}});
  return r;
}
const PolyRingPtr& kh_ring() {
  static const PolyRingPtr r = make_ring({{"p1", 2}, {"p2", 4}, {"p3", 6}, {"p4", 8}});
  return r;
}
const PolyRingPtr& chi_y_ring() {
  static const PolyRingPtr r = make_ring({{"y", 0}, {"t", 2}});
  return r;
}
const PolyRingPtr& ochanine_ring() {
  static const PolyRingPtr r = make_ring({{"delta", 4}, {"epsilon", 8}});
  return r;
}
const PolyRingPtr& degenerate_ring() {
  static const PolyRingPtr r = make_ring({{"s", 0}, {"y", 0}, {"t", 2}});
  return r;
}

MultiPoly symbol(const PolyRingPtr& ring, const std::string& name) { return MultiPoly::variable(ring, name); }

namespace {

std::array<MultiPoly, 4> variables4(const PolyRingPtr& ring) {
  return {MultiPoly::variable(ring, 0), MultiPoly::variable(ring, 1), MultiPoly::variable(ring, 2),
          MultiPoly::variable(ring, 3)};
}

// x / (1 - e^{-x}) through x^order.
Series<Rational> todd_series(int order) {
  std::vector<Rational> c;
  Rational f(1);
  for (int k = 0; k <= order; ++k) {
    // (1 - e^{-x}) / x = sum_k (-1)^k x^k / (k+1)!
    f = factorial(k + 1).inverse();
    c.push_back(k % 2 ? -f : f);
  }
  return Series<Rational>(c, order).inverse();
}

// e^{sign x} through x^order with coefficients scaled by a.
template <class R>
Series<R> scaled_exp(const R& a, int sign, int order) {
  std::vector<R> c;
  for (int k = 0; k <= order; ++k) {
    Rational f = factorial(k).inverse();
    if (sign < 0 && k % 2) f = -f;
    c.push_back(a * R(f));
  }
  return Series<R>(c, order);
}

template <class R>
Series<R> lift_series(const Series<Rational>& s) {
  return s.map_coefficients([](const Rational& c) { return R(c); });
}

RatFrac frac(const MultiPoly& p) { return RatFrac(p); }

}  // namespace

Series<MultiPoly> psi_logarithm(const std::array<MultiPoly, 4>& q, int order) {
  if (order < 1) throw DomainError("logarithm order must be at least 1");
  std::vector<MultiPoly> c{MultiPoly(1), q[0], q[1], q[2], q[3]};
  Series<MultiPoly> integrand = Series<MultiPoly>(c, order - 1).sqrt().inverse();
  return integrand.integrate();
}

Genus<MultiPoly> build_psi(int order) {
  if (order < 1) throw DomainError("order must be at least 1");
  return genus_from_log("psi", psi_logarithm(variables4(psi_ring()), order + 1));
}

Genus<MultiPoly> build_ochanine(int order) {
  const auto& R = ochanine_ring();
  MultiPoly delta = symbol(R, "delta"), eps = symbol(R, "epsilon");
  std::array<MultiPoly, 4> q{MultiPoly(R), delta * MultiPoly(-2), MultiPoly(R), eps};
  return genus_from_log("ochanine", psi_logarithm(q, order + 1));
}

Genus<MultiPoly> build_chi_y(int order) {
  const auto& R = chi_y_ring();
  MultiPoly y = symbol(R, "y"), t = symbol(R, "t"), one = MultiPoly::constant(R, Rational(1));
  Series<Rational> td = todd_series(order);
  // x(1 + y e^{-x})/(1 - e^{-x}) = td(x) + y td(-x); rescaled by (1+y) and graded by t
  std::vector<MultiPoly> c{one};
  MultiPoly scale = one;
  for (int k = 1; k <= order; ++k) {
    MultiPoly ck = (one + (k % 2 ? -y : y)) * MultiPoly(td.coeff(k));
    c.push_back(ck * scale * t.pow(k));
    scale = scale * (one + y);
  }
  return genus_from_char("chi_y", Series<MultiPoly>(c, order));
}

Genus<MultiPoly> build_kh(int order) {
  return genus_from_char("kh", solve_r_ode_to_char(variables4(kh_ring()), order));
}

Genus<Rational> build_ahat(int order) {
  // sinh(x/2)/(x/2) = sum_j (x/2)^{2j} / (2j+1)!
  std::vector<Rational> c(order + 1, Rational(0));
  for (int j = 0; 2 * j <= order; ++j) c[2 * j] = Rational(1, 2).pow(2 * j) * factorial(2 * j + 1).inverse();
  return genus_from_char("ahat", Series<Rational>(c, order).inverse());
}

Genus<RatFrac> build_psi_deg(int order) {
  const auto& R = degenerate_ring();
  RatFrac s = frac(symbol(R, "s")), y = frac(symbol(R, "y")), t = frac(symbol(R, "t")), one(1);
  using S = Series<RatFrac>;
  S em = scaled_exp(one, -1, order);
  S num = (S(one) + em.scaled(y)) * (S(one) + em.scaled(s / y));
  S den = S(one) - em.scaled(s);
  RatFrac c = (one - s) / ((one + s / y) * (one + y));
  S q = lift_series<RatFrac>(todd_series(order)) * num * den.inverse();
  q = q.scaled(c);
  std::vector<RatFrac> graded;
  RatFrac tk(1);
  for (int k = 0; k <= order; ++k) {
    graded.push_back(q.coeff(k) * tk);
    tk = tk * t;
  }
  return genus_from_char("psi_deg", S(graded, order));
}

MultiPoly specialize(const MultiPoly& p, const std::map<std::string, MultiPoly>& images, const PolyRingPtr& target) {
  if (!p.ring()) return MultiPoly::constant(target, p.constant_term());
  const PolyRing& src = *p.ring();
  std::vector<MultiPoly> imgs;
  for (std::size_t i = 0; i < src.size(); ++i) {
    auto it = images.find(src.name(i));
    MultiPoly img;
    if (it != images.end()) {
      img = it->second;
    } else if (auto j = target->index_of(src.name(i)); j && target->weight(*j) == src.weight(i)) {
      img = MultiPoly::variable(target, *j);
    } else {
      throw DomainError("no image given for symbol '" + src.name(i) + "'");
    }
    if (img.ring() && !detail::same_ring(img.ring(), target)) throw StructuralError("image of '" + src.name(i) + "' lives in another ring");
    if (!img.is_constant()) {
      if (!img.is_homogeneous() || *img.max_weighted_degree() != src.weight(i))
        throw DomainError("image of '" + src.name(i) + "' does not have weight " + std::to_string(src.weight(i)));
    }
    imgs.push_back(MultiPoly(target) + img);
  }
  return MultiPoly(target) + p.substitute(imgs);
}

Genus<MultiPoly> specialize(const Genus<MultiPoly>& phi, const std::map<std::string, MultiPoly>& images,
                            const PolyRingPtr& target) {
  auto map = [&](const Series<MultiPoly>& s) {
    return s.map_coefficients([&](const MultiPoly& c) { return specialize(c, images, target); });
  };
  return Genus<MultiPoly>{phi.name + "|specialized", map(phi.log_series), map(phi.char_series), map(phi.log_char)};
}

RatFrac substitute(const RatFrac& f, const std::vector<std::pair<std::string, RatFrac>>& steps) {
  RatFrac r = f;
  for (const auto& [name, img] : steps) {
    PolyRingPtr ring = r.ring() ? r.ring() : img.ring();
    if (!ring) continue;
    auto idx = ring->index_of(name);
    if (!idx) throw DomainError("unknown symbol '" + name + "'");
    std::vector<RatFrac> imgs;
    for (std::size_t i = 0; i < ring->size(); ++i) imgs.push_back(i == *idx ? img : RatFrac(MultiPoly::variable(ring, i)));
    try {
      r = r.substitute(imgs);
    } catch (const DomainError&) {
      throw DomainError("substitution " + name + " -> " + img.to_string() + " hits a pole of " + r.to_string());
    }
  }
  return r;
}

Genus<RatFrac> substitute(const Genus<RatFrac>& phi, const std::vector<std::pair<std::string, RatFrac>>& steps) {
  auto map = [&](const Series<RatFrac>& s) {
    return s.map_coefficients([&](const RatFrac& c) { return substitute(c, steps); });
  };
  return Genus<RatFrac>{phi.name + "|sub", map(phi.log_series), map(phi.char_series), map(phi.log_char)};
}

std::array<MultiPoly, 4> expected_q_in_p() {
  auto p = variables4(kh_ring());
  auto c = [](long a, long b) { return MultiPoly(Rational(a, b)); };
  MultiPoly q1 = -p[0];
  MultiPoly q2 = c(3, 8) * p[0].pow(2) - c(1, 2) * p[1];
  MultiPoly q3 = c(-3, 48) * p[0].pow(3) + c(12, 48) * p[0] * p[1] - c(16, 48) * p[2];
  MultiPoly q4 = c(3, 768) * p[0].pow(4) - c(24, 768) * p[0].pow(2) * p[1] + c(32, 768) * p[0] * p[2] +
                 c(48, 768) * p[1].pow(2) - c(192, 768) * p[3];
  return {q1, q2, q3, q4};
}

std::array<MultiPoly, 4> solve_q_in_p() {
  Genus<MultiPoly> psi = build_psi(5);
  Genus<MultiPoly> kh = build_kh(5);
  const auto& Rq = psi_ring();
  const auto& Rp = kh_ring();
  auto q = variables4(Rq);
  std::array<MultiPoly, 4> solved;
  for (int m = 1; m <= 4; ++m) {
    ManifoldPtr cp = projective_space(m);
    MultiPoly v = evaluate(psi, *cp);
    Exponents e(4, 0);
    e[m - 1] = 1;
    Rational a = v.coefficient(e);
    if (!(a == Rational(-1, 2))) throw InvariantError("psi(CP^m) has q_m coefficient " + a.to_string());
    MultiPoly rest = v + MultiPoly(Rational(1, 2)) * q[m - 1];
    std::map<std::string, MultiPoly> images;
    for (int j = 0; j < 4; ++j) images[Rq->name(j)] = j < m - 1 ? solved[j] : MultiPoly(Rp);
    MultiPoly rest_p = specialize(rest, images, Rp);
    MultiPoly k = evaluate(kh, *cp);
    solved[m - 1] = (k - rest_p) * MultiPoly(-2);
  }
  return solved;
}

// ---------------------------------------------------------------------------

namespace {

RQ q_monomial(int l, const RatFrac& c, int q_max) { return RQ::monomial(l, c, q_max); }

// 1 + a e^{sign x} as a series in x over RQ.
XQ exp_factor(const RQ& a, int sign, int x_order, int q_max) {
  XQ e = scaled_exp(a, sign, x_order);
  return XQ(RQ(std::vector<RatFrac>{RatFrac(1)}, q_max)) + e;
}

struct ThetaFactor {
  RatFrac coeff;  // a = coeff * q^l
  int l;
  int sign;       // +1: TM, -1: T*M
  bool exterior;  // Lambda (true) or S (false)
};

std::vector<ThetaFactor> theta_factors(int q_max) {
  const auto& R = degenerate_ring();
  RatFrac s = frac(symbol(R, "s")), y = frac(symbol(R, "y")), one(1);
  std::vector<ThetaFactor> out;
  for (int l = 1; l <= q_max + 1; ++l) {
    out.push_back({one / y, l, +1, true});
    out.push_back({y, l - 1, -1, true});
    out.push_back({y / s, l, +1, true});
    out.push_back({s / y, l - 1, -1, true});
    out.push_back({one, l, +1, false});
    out.push_back({one, l, -1, false});
    out.push_back({one / s, l, +1, false});
    out.push_back({s, l - 1, -1, false});
  }
  std::vector<ThetaFactor> kept;
  for (const auto& f : out)
    if (f.l <= q_max) kept.push_back(f);
  return kept;
}

RQ mu_series(int q_max) {
  const auto& R = degenerate_ring();
  RatFrac s = frac(symbol(R, "s")), y = frac(symbol(R, "y")), one(1);
  RQ unit(std::vector<RatFrac>{one}, q_max);
  RQ num = unit, den = unit;
  auto lin = [&](const RatFrac& c, int l) { return unit + q_monomial(l, c, q_max); };
  for (int l = 1; l <= q_max + 1; ++l) {
    if (l <= q_max) num = num * lin(-(one / s), l) * lin(RatFrac(-1), l) * lin(RatFrac(-1), l);
    num = num * lin(-s, l - 1);
    if (l <= q_max) den = den * lin(y / s, l) * lin(one / y, l);
    den = den * lin(s / y, l - 1) * lin(y, l - 1);
  }
  return num * den.inverse();
}

}  // namespace

QExpandedPsi build_q_expansion(int q_max, int x_order) {
  if (q_max < 0) throw DomainError("Q_max must be nonnegative");
  const auto& R = degenerate_ring();
  RatFrac s = frac(symbol(R, "s")), y = frac(symbol(R, "y")), one(1);
  QExpandedPsi out;
  out.q_max = q_max;
  out.x_order = x_order;
  out.mu = mu_series(q_max);

  auto a = [&](const RatFrac& c, int l) { return q_monomial(l, c, q_max); };
  XQ num = lift_series<RQ>(todd_series(x_order)).map_coefficients([&](const RQ& c) { return c.at_most(q_max); });
  XQ den(RQ(std::vector<RatFrac>{one}, q_max));
  for (int l = 1; l <= q_max + 1; ++l) {
    if (l <= q_max) {
      num = num * exp_factor(a(one / y, l), +1, x_order, q_max) * exp_factor(a(y / s, l), +1, x_order, q_max);
      den = den * exp_factor(a(RatFrac(-1), l), +1, x_order, q_max) *
            exp_factor(a(-(one / s), l), +1, x_order, q_max);
    }
    num = num * exp_factor(a(y, l - 1), -1, x_order, q_max) * exp_factor(a(s / y, l - 1), -1, x_order, q_max);
    // the l = 1 factor 1 - e^{-x} sits in the Todd series together with x
    if (l >= 2) den = den * exp_factor(a(RatFrac(-1), l - 1), -1, x_order, q_max);
    den = den * exp_factor(a(-s, l - 1), -1, x_order, q_max);
  }
  out.char_series = (num * den.inverse()).scaled(out.mu);
  return out;
}

Series<RatFrac> q_expanded_psi(const QExpandedPsi& qe, const Manifold& m) {
  return evaluate_power_sums(qe.char_series.log(), power_sum_integrals(m));
}

Series<RatFrac> theta_euler_characteristic(const Manifold& m, int q_max) {
  const int n = m.dim;
  const int order = std::max(n, 1);
  RQ unit(std::vector<RatFrac>{RatFrac(1)}, q_max);
  XQ total = lift_series<RQ>(todd_series(order).log()).map_coefficients([&](const RQ& c) { return c.at_most(q_max); });
  RQ constant = unit;
  for (const auto& f : theta_factors(q_max)) {
    RQ a = q_monomial(f.l, f.coeff, q_max);
    // ch(Lambda_a E) = prod (1 + a e^{x_i}), ch(S_a E) = prod 1/(1 - a e^{x_i})
    RQ sa = f.exterior ? a : -a;
    RQ c0 = unit + sa;
    XQ lg = (exp_factor(sa, f.sign, order, q_max).scaled(c0.inverse())).log();
    if (f.exterior) {
      total += lg;
      constant = constant * c0;
    } else {
      total -= lg;
      constant = constant * c0.inverse();
    }
  }
  RQ value = evaluate_power_sums(total, power_sum_integrals(m));
  return constant.pow(n) * value;
}

Series<RatFrac> theta_identity_rhs(const Manifold& m, int q_max) {
  return mu_series(q_max).pow(m.dim) * theta_euler_characteristic(m, q_max);
}

RatFrac degenerate_bundle_side(const Manifold& m) {
  const auto& R = degenerate_ring();
  RatFrac s = frac(symbol(R, "s")), y = frac(symbol(R, "y")), one(1);
  const int n = m.dim;
  const int order = std::max(n, 1);
  using S = Series<RatFrac>;
  S total = lift_series<RatFrac>(todd_series(order).log());
  RatFrac constant(1);
  struct F {
    RatFrac a;
    bool exterior;
  };
  for (const F& f : {F{y, true}, F{s / y, true}, F{s, false}}) {
    RatFrac sa = f.exterior ? f.a : -f.a;
    RatFrac c0 = one + sa;
    S lg = (S(one) + scaled_exp(sa, -1, order)).scaled(c0.inverse()).log();
    if (f.exterior) {
      total += lg;
      constant *= c0;
    } else {
      total -= lg;
      constant *= c0.inverse();
    }
  }
  RatFrac mu0 = (one - s) / ((one + s / y) * (one + y));
  RatFrac v = evaluate_power_sums(total, power_sum_integrals(m));
  RatFrac scale(1);
  for (int i = 0; i < n; ++i) scale *= constant * mu0;
  return scale * v;
}

Rational todd_genus(const Manifold& m) {
  Series<Rational> td = todd_series(std::max(m.dim, 1));
  return evaluate_power_sums(td.log(), power_sum_integrals(m));
}

}  // namespace genus_forge
