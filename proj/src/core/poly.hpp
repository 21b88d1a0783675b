#pragma once

// Sparse multivariate polynomials over an arbitrary commutative coefficient
// ring, with named weighted variables.

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "core/error.hpp"
#include "core/rational.hpp"

namespace genus_forge {

class PolyRing {
 public:
  PolyRing(std::vector<std::string> names, std::vector<int> weights);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  int weight(std::size_t i) const { return weights_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<int>& weights() const noexcept { return weights_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.names_ == b.names_ && a.weights_ == b.weights_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<int> weights_;
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

PolyRingPtr make_ring(std::vector<std::pair<std::string, int>> variables);

using Exponents = std::vector<int>;

// Graded lexicographic: total degree first, then lexicographic.
struct MonomialOrder {
  bool operator()(const Exponents& a, const Exponents& b) const {
    int da = 0, db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da < db;
    return a < b;
  }
};

namespace detail {

template <class C>
struct is_rational : std::is_same<C, Rational> {};

template <class C>
bool coeff_is_zero(const C& c) {
  return is_zero(c);
}

inline bool same_ring(const PolyRingPtr& a, const PolyRingPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace detail

template <class C>
class Poly {
 public:
  using Coeff = C;
  using TermMap = std::map<Exponents, C, MonomialOrder>;

  Poly() = default;
  Poly(const C& c) {  // NOLINT(implicit): constants embed into every ring
    if (!detail::coeff_is_zero(c)) terms_.emplace(Exponents{}, c);
  }
  Poly(int c) : Poly(C(c)) {}  // NOLINT(implicit)
  explicit Poly(PolyRingPtr ring) : ring_(std::move(ring)) {}

  static Poly constant(PolyRingPtr ring, const C& c) {
    Poly p(ring);
    if (!detail::coeff_is_zero(c)) p.terms_.emplace(Exponents(ring ? ring->size() : 0, 0), c);
    return p;
  }
  static Poly variable(PolyRingPtr ring, std::size_t index) {
    Exponents e(ring->size(), 0);
    e.at(index) = 1;
    return monomial(ring, std::move(e), C(1));
  }
  static Poly variable(PolyRingPtr ring, const std::string& name) {
    auto idx = ring->index_of(name);
    if (!idx) throw StructuralError("unknown variable '" + name + "'");
    return variable(ring, *idx);
  }
  static Poly monomial(PolyRingPtr ring, Exponents e, const C& c) {
    if (!ring || e.size() != ring->size())
      throw StructuralError("exponent vector arity does not match the variable list");
    Poly p(ring);
    if (!detail::coeff_is_zero(c)) p.terms_.emplace(std::move(e), c);
    return p;
  }

  const PolyRingPtr& ring() const noexcept { return ring_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t num_terms() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    for (int e : terms_.begin()->first)
      if (e != 0) return false;
    return true;
  }
  C constant_term() const {
    if (terms_.empty()) return C(0);
    const auto& [e, c] = *terms_.begin();
    for (int x : e)
      if (x != 0) return C(0);
    return c;
  }
  C coefficient(const Exponents& e) const {
    auto it = terms_.find(aligned_key(e));
    return it == terms_.end() ? C(0) : it->second;
  }

  int weighted_degree(const Exponents& e) const {
    int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * ring_->weight(i);
    return d;
  }
  std::optional<int> max_weighted_degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = weight_of(terms_.begin()->first);
    for (const auto& [e, c] : terms_) d = std::max(d, weight_of(e));
    return d;
  }
  std::optional<int> min_weighted_degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = weight_of(terms_.begin()->first);
    for (const auto& [e, c] : terms_) d = std::min(d, weight_of(e));
    return d;
  }
  bool is_homogeneous() const {
    return terms_.empty() || *max_weighted_degree() == *min_weighted_degree();
  }
  int degree_in(std::size_t var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.empty() ? 0 : e.at(var));
    return d;
  }
  // Upper bound on plain (unweighted) total degree.
  int total_degree() const { return terms_.empty() ? -1 : sum(terms_.rbegin()->first); }

  const std::pair<const Exponents, C>& leading_term() const {
    if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
    return *terms_.rbegin();
  }

  // Drops every term whose weighted degree exceeds max_weight.
  Poly truncate_weighted(int max_weight) const {
    if (max_weight < 0) throw DomainError("negative truncation weight");
    Poly r(ring_);
    for (const auto& [e, c] : terms_)
      if (weight_of(e) <= max_weight) r.terms_.emplace_hint(r.terms_.end(), e, c);
    return r;
  }
  Poly homogeneous_component(int weight) const {
    Poly r(ring_);
    for (const auto& [e, c] : terms_)
      if (weight_of(e) == weight) r.terms_.emplace_hint(r.terms_.end(), e, c);
    return r;
  }

  template <class F>
  auto map_coefficients(F&& f) const -> Poly<std::decay_t<decltype(f(std::declval<const C&>()))>> {
    using D = std::decay_t<decltype(f(std::declval<const C&>()))>;
    Poly<D> r(ring_);
    for (const auto& [e, c] : terms_) r.add_term(e, f(c));
    return r;
  }

  // Adds c * x^e in place (e must match the ring arity).
  void add_term(const Exponents& e, const C& c) {
    if (is_zero_coeff(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (is_zero_coeff(it->second)) terms_.erase(it);
    }
  }

  // Moves the polynomial into a larger ring: variable i goes to index_map[i].
  Poly embed(PolyRingPtr target, const std::vector<std::size_t>& index_map) const {
    Poly r(target);
    for (const auto& [e, c] : terms_) {
      Exponents ne(target->size(), 0);
      for (std::size_t i = 0; i < e.size(); ++i) ne.at(index_map.at(i)) += e[i];
      r.add_term(ne, c);
    }
    return r;
  }

  Poly& operator+=(const Poly& o) {
    adopt(o);
    for (const auto& [e, c] : o.terms_) add_term(o.ring_ ? e : aligned_key(e), c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    adopt(o);
    for (const auto& [e, c] : o.terms_) add_term(o.ring_ ? e : aligned_key(e), -c);
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) {
    Poly r(a.ring_);
    for (const auto& [e, c] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), e, -c);
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) { return multiply(a, b, -1); }

  // Product with every term of weighted degree > max_weight dropped
  // (max_weight < 0 means no truncation).
  static Poly multiply(const Poly& a, const Poly& b, int max_weight) {
    PolyRingPtr ring = common_ring(a.ring_, b.ring_);
    if (a.is_zero() || b.is_zero()) return Poly(ring);
    if (a.is_constant() && max_weight < 0) return b.scaled(a.constant_term(), ring);
    if (b.is_constant() && max_weight < 0) return a.scaled(b.constant_term(), ring);
    Poly r(ring);
    const std::size_t n = ring ? ring->size() : 0;
    Exponents e(n);
    for (const auto& [ea, ca] : a.terms_) {
      const Exponents& xa = ea.size() == n ? ea : zeros(n);
      int wa = max_weight >= 0 ? weight_in(ring, xa) : 0;
      for (const auto& [eb, cb] : b.terms_) {
        const Exponents& xb = eb.size() == n ? eb : zeros(n);
        if (max_weight >= 0 && wa + weight_in(ring, xb) > max_weight) continue;
        for (std::size_t i = 0; i < n; ++i) e[i] = xa[i] + xb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }

  Poly pow(int k) const {
    if (k < 0) throw DomainError("negative polynomial power");
    Poly result(C(1)), base = *this;
    result.adopt(*this);
    while (k > 0) {
      if (k & 1) result = result * base;
      k >>= 1;
      if (k) base = base * base;
    }
    return result;
  }

  // Replaces variable i by images[i]; images share the target ring.
  Poly substitute(const std::vector<Poly>& images) const {
    if (!ring_) return *this;
    if (images.size() != ring_->size()) throw StructuralError("substitution arity mismatch");
    Poly r;
    for (const auto& [e, c] : terms_) {
      Poly t(c);
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0) t = t * images[i].pow(e[i]);
      r += t;
    }
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.ring_ && b.ring_ && !detail::same_ring(a.ring_, b.ring_)) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ib = b.terms_.begin();
    for (auto ia = a.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib) {
      if (!keys_equal(ia->first, ib->first)) return false;
      if (!(ia->second == ib->second)) return false;
    }
    return true;
  }

  std::string to_string() const;

 private:
  static Exponents zeros(std::size_t n) { return Exponents(n, 0); }
  static int sum(const Exponents& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
  }
  static bool keys_equal(const Exponents& a, const Exponents& b) {
    if (a.size() == b.size()) return a == b;
    return sum(a) == 0 && sum(b) == 0;
  }
  static bool is_zero_coeff(const C& c) { return detail::coeff_is_zero(c); }
  static int weight_in(const PolyRingPtr& ring, const Exponents& e) {
    int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * ring->weight(i);
    return d;
  }
  int weight_of(const Exponents& e) const { return ring_ ? weight_in(ring_, e) : 0; }

  static PolyRingPtr common_ring(const PolyRingPtr& a, const PolyRingPtr& b) {
    if (!a) return b;
    if (!b) return a;
    if (!detail::same_ring(a, b)) throw StructuralError("polynomials over different variable lists");
    return a;
  }
  Exponents aligned_key(const Exponents& e) const {
    if (!ring_ || e.size() == ring_->size()) return e;
    return zeros(ring_->size());
  }
  // Brings this polynomial onto the ring of o when this one is a bare constant.
  void adopt(const Poly& o) {
    PolyRingPtr ring = common_ring(ring_, o.ring_);
    if (ring && !ring_) {
      TermMap t;
      for (auto& [e, c] : terms_) t.emplace(zeros(ring->size()), c);
      terms_ = std::move(t);
      ring_ = ring;
    }
  }
  Poly scaled(const C& s, const PolyRingPtr& ring) const {
    Poly r(ring);
    r.adopt(*this);
    if (is_zero_coeff(s)) return r;
    for (const auto& [e, c] : terms_) {
      C v = c * s;
      if (!is_zero_coeff(v)) r.terms_.emplace_hint(r.terms_.end(), ring && e.empty() ? zeros(ring->size()) : e, std::move(v));
    }
    return r;
  }

  template <class D>
  friend class Poly;

  PolyRingPtr ring_;
  TermMap terms_;
};

template <class C>
bool is_zero(const Poly<C>& p) {
  return p.is_zero();
}

template <class C>
std::string to_string(const Poly<C>& p) {
  return p.to_string();
}

// Inverse of a constant polynomial; anything else is not a unit.
template <class C>
Poly<C> inv(const Poly<C>& p) {
  if (!p.is_constant() || p.is_zero()) throw DomainError("polynomial " + p.to_string() + " is not invertible");
  return Poly<C>::constant(p.ring(), inv(p.constant_term()));
}

namespace detail {

inline void append_coefficient(std::string& out, const Rational& c, bool first, bool has_monomial) {
  Rational a = c.abs();
  if (first)
    out += c.sign() < 0 ? "-" : "";
  else
    out += c.sign() < 0 ? " - " : " + ";
  if (!has_monomial || !a.is_one()) {
    out += a.to_string();
    if (has_monomial) out += "*";
  }
}

template <class C>
void append_coefficient(std::string& out, const C& c, bool first, bool has_monomial) {
  if (!first) out += " + ";
  out += "(" + to_string(c) + ")";
  if (has_monomial) out += "*";
}

}  // namespace detail

template <class C>
std::string Poly<C>::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->name(i);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    detail::append_coefficient(out, c, first, !mono.empty());
    out += mono;
    first = false;
  }
  return out;
}

using MultiPoly = Poly<Rational>;

// Exact division a / b when b's leading coefficient is a unit; nullopt when
// b does not divide a.
template <class C>
std::optional<Poly<C>> divide_exact(const Poly<C>& a, const Poly<C>& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.is_zero()) return Poly<C>(a.ring() ? a.ring() : b.ring());
  if (b.is_constant()) return a * Poly<C>(inv(b.constant_term()));
  const auto& [lb_e, lb_c] = b.leading_term();
  const C lb_inv = inv(lb_c);
  PolyRingPtr ring = a.ring() ? a.ring() : b.ring();
  Poly<C> q(ring), r = a;
  while (!r.is_zero()) {
    const auto& [lr_e, lr_c] = r.leading_term();
    if (lr_e.size() != lb_e.size()) return std::nullopt;
    Exponents e(lr_e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      e[i] = lr_e[i] - lb_e[i];
      if (e[i] < 0) return std::nullopt;
    }
    Poly<C> t = Poly<C>::monomial(ring, e, lr_c * lb_inv);
    q += t;
    r -= t * b;
  }
  return q;
}

}  // namespace genus_forge
