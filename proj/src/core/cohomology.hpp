#pragma once

// Finite models of even-degree cohomology rings: a tower of degree-2
// generators, each with one monic relation g^k = tail(g, lower generators),
// and an integration functional on normal-form monomials.

#include <map>
#include <string>
#include <vector>

#include "core/poly.hpp"

namespace genus_forge {

struct Relation {
  int bound = 1;   // g^bound is rewritten
  MultiPoly tail;  // in g (degree < bound) and lower generators; zero for nilpotent generators
};

// A group of nilpotent generators with the integrals of its top monomials.
struct IntegrationBlock {
  std::vector<std::size_t> gens;
  std::map<Exponents, Rational> top;  // exponents restricted to gens
};

// A projective-bundle generator: the fiber integral of y^(rank-1) is 1.
struct FiberStage {
  std::size_t gen = 0;
  int rank = 1;
};

class CohomModel {
 public:
  CohomModel() = default;
  CohomModel(PolyRingPtr ring, int dim, std::vector<Relation> relations, std::vector<IntegrationBlock> blocks,
             std::vector<FiberStage> fibers);

  const PolyRingPtr& ring() const noexcept { return ring_; }
  int dim() const noexcept { return dim_; }
  std::size_t num_generators() const { return ring_ ? ring_->size() : 0; }
  const std::vector<Relation>& relations() const noexcept { return relations_; }
  const std::vector<IntegrationBlock>& blocks() const noexcept { return blocks_; }
  const std::vector<FiberStage>& fibers() const noexcept { return fibers_; }

  MultiPoly generator(std::size_t i) const { return MultiPoly::variable(ring_, i); }
  MultiPoly one() const { return MultiPoly::constant(ring_, Rational(1)); }
  MultiPoly zero() const { return MultiPoly(ring_); }

  template <class R>
  Poly<R> lift(const MultiPoly& p) const {
    Poly<R> r = p.map_coefficients([](const Rational& c) { return R(c); });
    return r.ring() ? r : Poly<R>(ring_) + r;
  }

  // Unique normal form: exponents below the relation bounds, degree <= dim.
  template <class R>
  Poly<R> reduce(const Poly<R>& p) const;

  template <class R>
  Poly<R> mul(const Poly<R>& a, const Poly<R>& b) const {
    return reduce(Poly<R>::multiply(align(a), align(b), 2 * dim_));
  }
  MultiPoly mul(const MultiPoly& a, const MultiPoly& b) const { return mul<Rational>(a, b); }
  MultiPoly power(const MultiPoly& a, int k) const;

  // Top-degree component integrated; lower degrees contribute nothing.
  template <class R>
  R integrate(const Poly<R>& p) const;
  Rational integrate(const MultiPoly& p) const { return integrate<Rational>(p); }

  // Integral of a single normal-form monomial.
  Rational integrate_monomial(const Exponents& e) const;

  // Total Chern class style inverse 1/(1 + a) for a without constant term.
  MultiPoly inverse_unit(const MultiPoly& unit) const;

 private:
  template <class R>
  Poly<R> align(const Poly<R>& p) const {
    return p.ring() ? p : Poly<R>(ring_) + p;
  }

  PolyRingPtr ring_;
  int dim_ = 0;
  std::vector<Relation> relations_;
  std::vector<IntegrationBlock> blocks_;
  std::vector<FiberStage> fibers_;
};

template <class R>
Poly<R> CohomModel::reduce(const Poly<R>& input) const {
  Poly<R> p = align(input).truncate_weighted(2 * dim_);
  const std::size_t n = num_generators();
  for (std::size_t jj = n; jj-- > 0;) {
    const Relation& rel = relations_[jj];
    Poly<R> tail;
    bool tail_lifted = false;
    for (;;) {
      Poly<R> keep(ring_), rewrite(ring_);
      bool any = false;
      for (const auto& [e, c] : p.terms()) {
        if (e[jj] >= rel.bound) {
          any = true;
          if (rel.tail.is_zero()) continue;
          Exponents rest = e;
          rest[jj] -= rel.bound;
          rewrite.add_term(rest, c);
        } else {
          keep.add_term(e, c);
        }
      }
      if (!any) break;
      if (!rewrite.is_zero()) {
        if (!tail_lifted) {
          tail = lift<R>(rel.tail);
          tail_lifted = true;
        }
        keep += Poly<R>::multiply(rewrite, tail, 2 * dim_);
      }
      p = std::move(keep);
    }
  }
  return p;
}

template <class R>
R CohomModel::integrate(const Poly<R>& input) const {
  Poly<R> p = reduce(input);
  R total(0);
  for (const auto& [e, c] : p.terms()) {
    if (p.weighted_degree(e) != 2 * dim_) continue;
    Rational v = integrate_monomial(e);
    if (!v.is_zero()) total += c * R(v);
  }
  return total;
}

}  // namespace genus_forge
