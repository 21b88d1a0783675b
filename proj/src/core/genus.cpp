#include "core/genus.hpp"

namespace genus_forge {

std::vector<MultiPoly> tangent_power_sums(const Manifold& m) {
  const CohomModel& coh = m.cohomology;
  auto e = elementary_from_chern(coh, m.tangent_chern, m.dim);
  return newton_power_sums(coh, e, m.dim);
}

PowerSumIntegrals power_sum_integrals(const Manifold& m) {
  PowerSumIntegrals out;
  out.dim = m.dim;
  if (m.dim == 0) {
    out.values[{}] = Rational(1);
    return out;
  }
  const CohomModel& coh = m.cohomology;
  std::vector<MultiPoly> p = tangent_power_sums(m);
  // products of parts are shared between partitions with a common prefix
  std::map<Partition, MultiPoly> prefix;
  for (const Partition& mu : partitions(m.dim)) {
    Partition pre;
    MultiPoly prod = coh.one();
    for (int part : mu) {
      pre.push_back(part);
      auto it = prefix.find(pre);
      if (it != prefix.end()) {
        prod = it->second;
      } else {
        prod = coh.mul(prod, p[part]);
        prefix.emplace(pre, prod);
      }
    }
    out.values[mu] = coh.integrate(prod);
  }
  return out;
}

ChernTable chern_numbers(const Manifold& m) {
  ChernTable t;
  t.dim = m.dim;
  const CohomModel& coh = m.cohomology;
  std::vector<MultiPoly> c(m.dim + 1);
  for (int i = 0; i <= m.dim; ++i) c[i] = m.chern_class(i);
  for (const Partition& mu : partitions(m.dim)) {
    MultiPoly prod = coh.one();
    for (int part : mu) prod = coh.mul(prod, c[part]);
    t.entries.emplace_back(mu, coh.integrate(prod));
  }
  return t;
}

Rational milnor_number(const Manifold& m) {
  if (m.dim == 0) return Rational(0);
  return m.cohomology.integrate(tangent_power_sums(m)[m.dim]);
}

Rational milnor_closed_form(const Bundle& e) {
  return e.roots ? milnor_closed_form_from_roots(e) : milnor_closed_form_symmetric(e);
}

namespace {

void require_rank(const Bundle& e) {
  if (e.rank < 2) throw DomainError("the closed form needs rank >= 2, got rank " + std::to_string(e.rank));
}

}  // namespace

Rational milnor_closed_form_from_roots(const Bundle& e) {
  require_rank(e);
  if (!e.roots) throw DomainError("bundle " + e.label + " has no split roots");
  const CohomModel& coh = e.base->cohomology;
  const int n = e.base->dim;
  const int k = e.rank;
  const int m = n + k - 1;
  std::vector<std::size_t> live;
  for (int j = 0; j < k; ++j)
    if (!(*e.roots)[j].is_zero()) live.push_back(j);
  // zero roots always carry r = 0 and contribute binom(m-1, 0) = 1 each
  const Rational zero_weight(static_cast<long>(k - live.size()));
  Rational total(0);
  if (live.empty()) return n == 0 ? zero_weight : Rational(0);
  for (const auto& r : weak_compositions(n, static_cast<int>(live.size()))) {
    MultiPoly mono = coh.one();
    for (std::size_t l = 0; l < live.size() && !mono.is_zero(); ++l)
      for (int t = 0; t < r[l]; ++t) mono = coh.mul(mono, (*e.roots)[live[l]]);
    if (mono.is_zero()) continue;
    Rational integral = coh.integrate(mono);
    if (integral.is_zero()) continue;
    Rational w = zero_weight;
    for (int rl : r) w += (rl % 2 ? -binomial(m - 1, rl) : binomial(m - 1, rl));
    total += w * integral;
  }
  return n % 2 ? -total : total;
}

Rational milnor_closed_form_symmetric(const Bundle& e) {
  require_rank(e);
  const CohomModel& coh = e.base->cohomology;
  const int n = e.base->dim;
  const int k = e.rank;
  const int m = n + k - 1;
  auto el = elementary_from_chern(coh, e.chern, n);
  auto p = newton_power_sums(coh, el, n);
  // sum_a (-1)^a binom(m, a) p_a(E), with p_0 = k
  MultiPoly s = coh.one() * MultiPoly(Rational(k));
  for (int a = 1; a <= n; ++a) {
    MultiPoly t = p[a] * MultiPoly(binomial(m, a));
    s += a % 2 ? -t : t;
  }
  // prod 1/(1 - x_j) = c(E*)^{-1}
  MultiPoly cdual(coh.ring());
  for (int i = 0; i <= n; ++i) {
    MultiPoly ci = e.chern_class(i);
    cdual += i % 2 ? -ci : ci;
  }
  Rational v = coh.integrate(coh.mul(s, coh.inverse_unit(cdual)));
  return n % 2 ? -v : v;
}

}  // namespace genus_forge
