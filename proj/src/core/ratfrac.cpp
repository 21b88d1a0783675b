#include "core/ratfrac.hpp"

#include <algorithm>

namespace genus_forge {

namespace {

// Cheap necessary condition for b | a.
bool may_divide(const MultiPoly& a, const MultiPoly& b) {
  if (!a.ring() || !b.ring()) return b.is_constant();
  for (std::size_t i = 0; i < b.ring()->size(); ++i)
    if (b.degree_in(i) > a.degree_in(i)) return false;
  return true;
}

std::optional<MultiPoly> try_divide(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || !may_divide(a, b)) return std::nullopt;
  return divide_exact(a, b);
}

}  // namespace

RatFrac::RatFrac(const MultiPoly& num, const MultiPoly& den) : poly_(num) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  multiply_factor(den, -1);
  cancel();
}

PolyRingPtr RatFrac::ring() const {
  if (poly_.ring()) return poly_.ring();
  return atoms_.empty() ? PolyRingPtr() : atoms_.front().first.ring();
}

void RatFrac::bump(const MultiPoly& atom, int e) {
  if (e == 0) return;
  for (auto it = atoms_.begin(); it != atoms_.end(); ++it) {
    if (it->first == atom) {
      it->second += e;
      if (it->second == 0) atoms_.erase(it);
      return;
    }
  }
  atoms_.emplace_back(atom, e);
}

void RatFrac::drop_if_zero() {
  if (poly_.is_zero()) {
    PolyRingPtr r = ring();
    atoms_.clear();
    poly_ = MultiPoly(r);
  }
}

void RatFrac::multiply_factor(MultiPoly p, int e) {
  if (e == 0) return;
  if (p.is_zero()) {
    if (e < 0) throw DomainError("division by zero rational function");
    poly_ = MultiPoly(poly_.ring() ? poly_.ring() : p.ring());
    atoms_.clear();
    return;
  }
  std::vector<std::pair<MultiPoly, int>> found;
  for (const auto& [a, k] : atoms_) {
    int c = 0;
    while (auto q = try_divide(p, a)) {
      p = std::move(*q);
      ++c;
    }
    if (c) found.emplace_back(a, c * e);
  }
  for (const auto& [a, k] : found) bump(a, k);
  if (p.is_constant()) {
    Rational c = p.constant_term();
    poly_ = poly_ * MultiPoly(e > 0 ? c.pow(e) : c.inverse().pow(-e));
    return;
  }
  Rational f;
  MultiPoly atom = normalize_integral(p, &f);
  // p = atom / f
  Rational g = f.inverse();
  poly_ = poly_ * MultiPoly(e > 0 ? g.pow(e) : g.inverse().pow(-e));
  bump(atom, e);
}

void RatFrac::cancel() {
  if (poly_.is_zero()) {
    drop_if_zero();
    return;
  }
  for (auto& [a, k] : atoms_) {
    while (k < 0) {
      auto q = try_divide(poly_, a);
      if (!q) break;
      poly_ = std::move(*q);
      ++k;
    }
  }
  atoms_.erase(std::remove_if(atoms_.begin(), atoms_.end(), [](const Factor& f) { return f.second == 0; }),
               atoms_.end());
}

RatFrac RatFrac::inverse() const {
  if (poly_.is_zero()) throw DomainError("inverse of zero rational function");
  RatFrac r;
  r.poly_ = MultiPoly::constant(ring(), Rational(1));
  for (const auto& [a, k] : atoms_) r.atoms_.emplace_back(a, -k);
  r.multiply_factor(poly_, -1);
  return r;
}

RatFrac& RatFrac::operator+=(const RatFrac& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (atoms_.empty() && o.atoms_.empty()) {
    poly_ += o.poly_;
    return *this;
  }
  // common factor: minimum exponent of every atom, absent atoms counting as 0
  std::vector<Factor> all = atoms_;
  for (const auto& f : o.atoms_)
    if (std::none_of(all.begin(), all.end(), [&](const Factor& g) { return g.first == f.first; }))
      all.emplace_back(f.first, 0);
  auto exp_in = [](const std::vector<Factor>& v, const MultiPoly& a) {
    for (const auto& [b, k] : v)
      if (b == a) return k;
    return 0;
  };
  MultiPoly pa = poly_, pb = o.poly_;
  std::vector<Factor> common;
  for (const auto& [a, unused] : all) {
    const int ea = exp_in(atoms_, a), eb = exp_in(o.atoms_, a);
    const int m = std::min(ea, eb);
    if (ea > m) pa = pa * a.pow(ea - m);
    if (eb > m) pb = pb * a.pow(eb - m);
    if (m != 0) common.emplace_back(a, m);
  }
  poly_ = pa + pb;
  atoms_ = std::move(common);
  cancel();
  return *this;
}

RatFrac& RatFrac::operator*=(const RatFrac& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) {
    poly_ = MultiPoly(ring() ? ring() : o.ring());
    atoms_.clear();
    return *this;
  }
  // cross-cancel so that the polynomial parts stay small
  MultiPoly other = o.poly_;
  std::vector<Factor> incoming = o.atoms_;
  for (auto& [a, k] : atoms_) {
    while (k < 0) {
      auto q = try_divide(other, a);
      if (!q) break;
      other = std::move(*q);
      ++k;
    }
  }
  for (auto& [a, k] : incoming) {
    while (k < 0) {
      auto q = try_divide(poly_, a);
      if (!q) break;
      poly_ = std::move(*q);
      ++k;
    }
  }
  poly_ = poly_ * other;
  for (const auto& [a, k] : incoming) bump(a, k);
  atoms_.erase(std::remove_if(atoms_.begin(), atoms_.end(), [](const Factor& f) { return f.second == 0; }),
               atoms_.end());
  cancel();
  return *this;
}

std::pair<MultiPoly, MultiPoly> RatFrac::canonical() const {
  PolyRingPtr r = ring();
  MultiPoly num = poly_;
  std::vector<Factor> den;
  for (const auto& [a, k] : atoms_) {
    if (k > 0) num = num * a.pow(k);
    else den.emplace_back(a, -k);
  }
  if (num.is_zero()) return {MultiPoly(r), MultiPoly::constant(r, Rational(1))};
  // split denominator atoms against the numerator until they are coprime
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < den.size(); ++i) {
      if (den[i].second == 0 || den[i].first.is_constant()) continue;
      MultiPoly g = poly_gcd(num, den[i].first);
      if (g.is_constant()) continue;
      num = *divide_exact(num, g);
      MultiPoly rest = *divide_exact(den[i].first, g);
      const int k = den[i].second;
      den[i] = {rest, k};
      if (k > 1) den.emplace_back(g, k - 1);
      changed = true;
    }
  }
  MultiPoly d = MultiPoly::constant(r, Rational(1));
  for (const auto& [a, k] : den)
    if (k > 0) d = d * a.pow(k);
  Rational f;
  d = normalize_integral(d, &f);
  num = num * MultiPoly(f);
  if (!num.ring()) num = MultiPoly(r) + num;
  if (!d.ring()) d = MultiPoly(r) + d;
  return {num, d};
}

RatFrac RatFrac::substitute(const std::vector<RatFrac>& images) const {
  auto eval = [&](const MultiPoly& p) {
    RatFrac acc;
    if (!p.ring()) return RatFrac(p.constant_term());
    for (const auto& [e, c] : p.terms()) {
      RatFrac t(c);
      for (std::size_t i = 0; i < e.size(); ++i)
        for (int k = 0; k < e[i]; ++k) t *= images.at(i);
      acc += t;
    }
    return acc;
  };
  PolyRingPtr r = ring();
  if (r && images.size() != r->size()) throw StructuralError("substitution arity mismatch");
  RatFrac out = eval(poly_);
  for (const auto& [a, k] : atoms_) {
    RatFrac v = eval(a);
    if (k < 0) {
      // a removable zero of the factored form; the reduced form decides
      if (v.is_zero()) {
        auto [n, d] = canonical();
        return eval(n) / eval(d);
      }
      v = v.inverse();
    }
    for (int j = 0; j < std::abs(k); ++j) out *= v;
  }
  return out;
}

std::string RatFrac::to_string() const {
  auto [n, d] = canonical();
  if (d.is_constant() && d.constant_term().is_one()) return n.to_string();
  std::string ns = n.num_terms() > 1 ? "(" + n.to_string() + ")" : n.to_string();
  return ns + "/(" + d.to_string() + ")";
}

}  // namespace genus_forge
