#include "core/poly.hpp"

#include <map>

#include "core/poly_gcd.hpp"

namespace genus_forge {

PolyRing::PolyRing(std::vector<std::string> names, std::vector<int> weights)
    : names_(std::move(names)), weights_(std::move(weights)) {
  if (names_.size() != weights_.size()) throw StructuralError("variable names and weights differ in length");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (weights_[i] < 0) throw DomainError("variable '" + names_[i] + "' needs a nonnegative weight");
    for (std::size_t j = 0; j < i; ++j)
      if (names_[i] == names_[j]) throw StructuralError("duplicate variable '" + names_[i] + "'");
  }
}

std::optional<std::size_t> PolyRing::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

PolyRingPtr make_ring(std::vector<std::pair<std::string, int>> variables) {
  std::vector<std::string> names;
  std::vector<int> weights;
  for (auto& [n, w] : variables) {
    names.push_back(std::move(n));
    weights.push_back(w);
  }
  return std::make_shared<const PolyRing>(std::move(names), std::move(weights));
}

namespace {

using Univariate = std::map<int, MultiPoly>;  // degree in the main variable -> coefficient

Univariate split(const MultiPoly& p, std::size_t var) {
  Univariate u;
  for (const auto& [e, c] : p.terms()) {
    Exponents rest = e;
    int d = rest.at(var);
    rest[var] = 0;
    auto it = u.find(d);
    if (it == u.end()) it = u.emplace(d, MultiPoly(p.ring())).first;
    it->second.add_term(rest, c);
  }
  return u;
}

MultiPoly join(const Univariate& u, const PolyRingPtr& ring, std::size_t var) {
  MultiPoly p(ring);
  for (const auto& [d, c] : u)
    for (const auto& [e, v] : c.terms()) {
      Exponents x = e;
      x.at(var) += d;
      p.add_term(x, v);
    }
  return p;
}

std::optional<std::size_t> main_variable(const MultiPoly& a, const MultiPoly& b) {
  std::optional<std::size_t> best;
  for (const MultiPoly* p : {&a, &b})
    if (p->ring())
      for (std::size_t i = 0; i < p->ring()->size(); ++i)
        if (p->degree_in(i) > 0 && (!best || i > *best)) best = i;
  return best;
}

Univariate scale(const Univariate& u, const MultiPoly& s) {
  Univariate r;
  for (const auto& [d, c] : u) {
    MultiPoly v = c * s;
    if (!v.is_zero()) r.emplace(d, std::move(v));
  }
  return r;
}

Univariate divide_coefficients(const Univariate& u, const MultiPoly& s) {
  Univariate r;
  for (const auto& [d, c] : u) {
    auto q = divide_exact(c, s);
    if (!q) throw InvariantError("content does not divide coefficient");
    r.emplace(d, std::move(*q));
  }
  return r;
}

MultiPoly content(const Univariate& u) {
  MultiPoly g;
  bool first = true;
  for (const auto& [d, c] : u) {
    g = first ? c : poly_gcd(g, c);
    first = false;
    if (g.is_constant()) break;
  }
  return normalize_integral(g);
}

Univariate pseudo_remainder(Univariate a, const Univariate& b) {
  const int db = b.rbegin()->first;
  const MultiPoly& lb = b.rbegin()->second;
  while (!a.empty() && a.rbegin()->first >= db) {
    const int da = a.rbegin()->first;
    const MultiPoly la = a.rbegin()->second;
    Univariate next = scale(a, lb);
    for (const auto& [d, c] : b) {
      MultiPoly& slot = next.try_emplace(d + da - db, MultiPoly(lb.ring())).first->second;
      slot -= la * c;
    }
    for (auto it = next.begin(); it != next.end();) it = it->second.is_zero() ? next.erase(it) : std::next(it);
    a = std::move(next);
  }
  return a;
}

Univariate primitive(const Univariate& u) {
  MultiPoly c = content(u);
  return c.is_constant() ? u : divide_coefficients(u, c);
}

}  // namespace

MultiPoly normalize_integral(const MultiPoly& p, Rational* factor) {
  if (p.is_zero()) {
    if (factor) *factor = Rational(1);
    return p;
  }
  mpz_class lcm_den = 1, gcd_num = 0;
  for (const auto& [e, c] : p.terms()) {
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.raw().get_den_mpz_t());
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), c.raw().get_num_mpz_t());
  }
  Rational f(mpq_class(lcm_den, gcd_num));
  if (p.leading_term().second.sign() < 0) f = -f;
  if (factor) *factor = f;
  return p * MultiPoly(f);
}

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return normalize_integral(b);
  if (b.is_zero()) return normalize_integral(a);
  if (a.is_constant() || b.is_constant()) return MultiPoly::constant(a.ring() ? a.ring() : b.ring(), Rational(1));
  auto var = main_variable(a, b);
  if (!var) return MultiPoly::constant(a.ring(), Rational(1));
  const PolyRingPtr ring = a.ring() ? a.ring() : b.ring();

  Univariate ua = split(a, *var), ub = split(b, *var);
  MultiPoly ca = content(ua), cb = content(ub);
  MultiPoly c = poly_gcd(ca, cb);
  ua = ca.is_constant() ? ua : divide_coefficients(ua, ca);
  ub = cb.is_constant() ? ub : divide_coefficients(ub, cb);
  if (ua.rbegin()->first < ub.rbegin()->first) std::swap(ua, ub);
  while (!ub.empty() && ub.rbegin()->first > 0) {
    Univariate r = pseudo_remainder(ua, ub);
    ua = std::move(ub);
    ub = r.empty() ? r : split(normalize_integral(join(primitive(r), ring, *var)), *var);
  }
  // A nonzero constant remainder means the primitive parts are coprime.
  MultiPoly g = ub.empty() ? join(primitive(ua), ring, *var) : MultiPoly::constant(ring, Rational(1));
  return normalize_integral(g * c);
}

}  // namespace genus_forge
