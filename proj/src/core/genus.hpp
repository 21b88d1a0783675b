#pragma once

// Genera given by a characteristic power series Q(x) = x / f(x), f the
// compositional inverse of the logarithm g, and their evaluation on
// cohomology models via power sums of Chern roots.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "core/manifold.hpp"
#include "core/partitions.hpp"
#include "core/series.hpp"

namespace genus_forge {

template <class R>
struct Genus {
  std::string name;
  Series<R> log_series;   // g(y) = y + O(y^2)
  Series<R> char_series;  // Q(x) = 1 + O(x)
  Series<R> log_char;     // log Q(x)

  int order() const { return char_series.order(); }
};

// Q is known to one order less than g.
template <class R>
Genus<R> genus_from_log(std::string name, const Series<R>& g) {
  if (!is_zero(g.coeff(0)) || !(g.coeff(1) == R(1))) throw DomainError("logarithm must have the form y + O(y^2)");
  Series<R> f = g.reversion();
  Series<R> q = f.shift_down(1).inverse();
  return Genus<R>{std::move(name), g, q, q.log()};
}

template <class R>
Genus<R> genus_from_char(std::string name, const Series<R>& q) {
  if (!(q.coeff(0) == R(1))) throw DomainError("characteristic series must have constant term 1");
  Series<R> f = q.inverse().shift_up(1);
  return Genus<R>{std::move(name), f.reversion(), q, q.log()};
}

// Integrals of products of tangent power sums, keyed by partitions of dim.
struct PowerSumIntegrals {
  int dim = 0;
  std::map<Partition, Rational> values;
};

PowerSumIntegrals power_sum_integrals(const Manifold& m);

// Power sums p_1..p_n of the tangent bundle (index 0 unused).
std::vector<MultiPoly> tangent_power_sums(const Manifold& m);

template <class R>
R partition_weight(const Series<R>& log_char, const Partition& mu, int n) {
  std::vector<int> k = multiplicities(mu, n);
  R w(1);
  for (int m = 1; m <= n; ++m) {
    if (k[m] == 0) continue;
    R lam = log_char.coeff(m);
    R pw(1);
    for (int j = 0; j < k[m]; ++j) pw = pw * lam;
    w = w * pw * R(factorial(k[m]).inverse());
  }
  return w;
}

template <class R>
R evaluate_power_sums(const Series<R>& log_char, const PowerSumIntegrals& data) {
  if (data.dim == 0) return R(1);
  if (log_char.order() < data.dim)
    throw DomainError("truncation order " + std::to_string(log_char.order()) + " is below dimension " +
                      std::to_string(data.dim));
  R total(0);
  for (const auto& [mu, integral] : data.values) {
    if (integral.is_zero()) continue;
    total += partition_weight(log_char, mu, data.dim) * R(integral);
  }
  return total;
}

template <class R>
R evaluate(const Genus<R>& phi, const Manifold& m) {
  return evaluate_power_sums(phi.log_char, power_sum_integrals(m));
}

// The class prod_i Q(w_i) of B, all degrees up to dim B.
template <class R>
Poly<R> genus_class(const Series<R>& log_char, const Manifold& b) {
  const CohomModel& coh = b.cohomology;
  if (log_char.order() < b.dim) throw DomainError("truncation order is below the base dimension");
  std::vector<MultiPoly> p = tangent_power_sums(b);
  Poly<R> total = coh.lift<R>(coh.one());
  for (int d = 1; d <= b.dim; ++d) {
    for (const Partition& mu : partitions(d)) {
      MultiPoly prod = coh.one();
      for (int part : mu) prod = coh.mul(prod, p[part]);
      if (prod.is_zero()) continue;
      total += coh.lift<R>(prod) * Poly<R>(partition_weight(log_char, mu, d));
    }
  }
  return total;
}

struct ChernTable {
  int dim = 0;
  std::vector<std::pair<Partition, Rational>> entries;  // fixed partition order
};

ChernTable chern_numbers(const Manifold& m);

// s_n(M) = integral of the n-th tangent power sum.
Rational milnor_number(const Manifold& m);

// Closed form for s_m(P(E)) over the base (rank >= 2). Uses the split roots
// when present, otherwise the equivalent symmetric-function form.
Rational milnor_closed_form(const Bundle& e);
Rational milnor_closed_form_from_roots(const Bundle& e);
Rational milnor_closed_form_symmetric(const Bundle& e);

// phi(P(E)) as the base integral of prod Q(w_i) times
// H(x_1..x_k) = sum_i prod_{j != i} h(x_j - x_i), with h = Q / x. H is
// obtained as the y^{-1} coefficient of prod_j h(y + x_j) expanded for large y.
template <class R>
R evaluate_projectivization_via_H(const Genus<R>& phi, const Bundle& e);

// H in formal variables x_1..x_k through total degree `degree`, computed as
// a numerator over the Vandermonde determinant followed by exact division.
template <class R>
Poly<R> H_formal(const Series<R>& q, int k, int degree);

// Same value as evaluate_projectivization_via_H, through H_formal.
template <class R>
R evaluate_projectivization_via_H_formal(const Genus<R>& phi, const Bundle& e);

// ---------------------------------------------------------------------------

template <class R>
R evaluate_projectivization_via_H(const Genus<R>& phi, const Bundle& e) {
  if (!e.roots) throw DomainError("the H formula needs split Chern roots; " + e.label + " has none");
  const Manifold& b = *e.base;
  const CohomModel& coh = b.cohomology;
  const int k = e.rank;
  const int db = b.dim;
  const int n = db + k - 1;
  if (k < 1) throw DomainError("rank-0 bundle");
  if (phi.order() < n) throw DomainError("truncation order is below dim P(E)");
  const Series<R>& q = phi.char_series;

  using Laurent = std::map<int, Poly<R>>;  // y exponent -> class
  Laurent acc;
  acc.emplace(0, coh.lift<R>(coh.one()));
  for (int j = 0; j < k; ++j) {
    const MultiPoly& x = (*e.roots)[j];
    // powers (-x)^m and x^m, reduced
    std::vector<MultiPoly> xp(db + 1, coh.one());
    for (int m = 1; m <= db; ++m) xp[m] = coh.mul(xp[m - 1], x);
    Laurent factor;
    auto add = [&](int ye, const Poly<R>& cls) {
      if (cls.is_zero()) return;
      auto it = factor.try_emplace(ye, Poly<R>(coh.ring())).first;
      it->second += cls;
    };
    for (int m = 0; m <= db; ++m) {
      if (xp[m].is_zero()) break;
      MultiPoly t = m % 2 ? -xp[m] : xp[m];
      add(-m - 1, coh.lift<R>(t) * Poly<R>(q.coeff(0)));
    }
    for (int a = 1; a <= n; ++a) {
      const R qa = q.coeff(a);
      if (is_zero(qa)) continue;
      for (int bb = 0; bb <= std::min(a - 1, db); ++bb) {
        if (xp[bb].is_zero()) break;
        add(a - 1 - bb, coh.lift<R>(xp[bb] * MultiPoly(binomial(a - 1, bb))) * Poly<R>(qa));
      }
    }
    const int remaining = k - j - 1;
    Laurent next;
    for (const auto& [ea, ca] : acc)
      for (const auto& [eb, cb] : factor) {
        const int ye = ea + eb;
        if (ye > -1 + remaining * (db + 1)) continue;
        if (ye < -1 - remaining * (n - 1)) continue;
        Poly<R> prod = coh.mul(ca, cb);
        if (prod.is_zero()) continue;
        auto it = next.try_emplace(ye, Poly<R>(coh.ring())).first;
        it->second += prod;
      }
    acc = std::move(next);
  }
  auto it = acc.find(-1);
  if (it == acc.end()) return R(0);
  return coh.integrate(coh.mul(genus_class(phi.log_char, b), it->second));
}

template <class R>
Poly<R> H_formal(const Series<R>& q, int k, int degree) {
  if (k < 1) throw DomainError("H needs at least one variable");
  const int dv = k * (k - 1) / 2;
  const int top = degree + dv;
  if (q.order() < top) throw DomainError("characteristic series too short for the requested H degree");
  std::vector<std::pair<std::string, int>> vars;
  for (int i = 1; i <= k; ++i) vars.push_back({"x" + std::to_string(i), 2});
  auto ring = make_ring(vars);
  auto var = [&](int i) { return Poly<R>::variable(ring, i); };
  auto vandermonde = [&](const std::vector<int>& idx) {
    Poly<R> v = Poly<R>::constant(ring, R(1));
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = a + 1; b < idx.size(); ++b) v = v * (var(idx[b]) - var(idx[a]));
    return v;
  };
  auto q_at = [&](const Poly<R>& z) {
    Poly<R> r(ring);
    for (int a = top; a >= 0; --a) {
      r = Poly<R>::multiply(r, z, 2 * top);
      r += Poly<R>::constant(ring, q.coeff(a));
    }
    return r;
  };
  std::vector<int> all(k);
  for (int i = 0; i < k; ++i) all[i] = i;
  Poly<R> num(ring);
  for (int i = 0; i < k; ++i) {
    std::vector<int> rest;
    for (int j = 0; j < k; ++j)
      if (j != i) rest.push_back(j);
    Poly<R> term = vandermonde(rest);
    for (int j : rest) term = Poly<R>::multiply(term, q_at(var(j) - var(i)), 2 * top);
    num += i % 2 ? -term : term;
  }
  const Poly<R> v = vandermonde(all);
  Poly<R> h(ring);
  for (int d = 0; d <= top; ++d) {
    Poly<R> part = num.homogeneous_component(2 * d);
    if (part.is_zero()) continue;
    if (d < dv) throw InvariantError("H has a pole: numerator component of degree " + std::to_string(d));
    auto quo = divide_exact(part, v);
    if (!quo) throw InvariantError("H numerator is not divisible by the Vandermonde determinant in degree " + std::to_string(d));
    if (d - dv <= degree) h += *quo;
  }
  return h;
}

template <class R>
R evaluate_projectivization_via_H_formal(const Genus<R>& phi, const Bundle& e) {
  if (!e.roots) throw DomainError("the H formula needs split Chern roots; " + e.label + " has none");
  const Manifold& b = *e.base;
  const CohomModel& coh = b.cohomology;
  Poly<R> h = H_formal(phi.char_series, e.rank, b.dim);
  Poly<R> cls(coh.ring());
  for (const auto& [ex, c] : h.terms()) {
    MultiPoly mono = coh.one();
    for (std::size_t j = 0; j < ex.size(); ++j)
      for (int t = 0; t < ex[j]; ++t) mono = coh.mul(mono, (*e.roots)[j]);
    if (mono.is_zero()) continue;
    cls += coh.lift<R>(mono) * Poly<R>(c);
  }
  return coh.integrate(coh.mul(genus_class(phi.log_char, b), cls));
}

}  // namespace genus_forge
