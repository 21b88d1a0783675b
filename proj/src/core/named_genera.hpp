#pragma once

#include <map>
#include <string>
#include <vector>

#include "core/genus.hpp"
#include "core/ratfrac.hpp"

namespace genus_forge {

// Shared coefficient rings.
const PolyRingPtr& psi_ring();       // q1..q4, weights 2,4,6,8
const PolyRingPtr& kh_ring();        // p1..p4, weights 2,4,6,8
const PolyRingPtr& chi_y_ring();     // y (weight 0), t (weight 2)
const PolyRingPtr& ochanine_ring();  // delta (4), epsilon (8)
const PolyRingPtr& degenerate_ring();  // s, y (weight 0), t (weight 2)

MultiPoly symbol(const PolyRingPtr& ring, const std::string& name);

// Characteristic series are known through x^order.
Genus<MultiPoly> build_psi(int order);
Genus<MultiPoly> build_chi_y(int order);
Genus<MultiPoly> build_kh(int order);
Genus<MultiPoly> build_ochanine(int order);
Genus<Rational> build_ahat(int order);
// Degenerate psi: x^k coefficients carry t^k, so values come out as value * t^n.
Genus<RatFrac> build_psi_deg(int order);

// Logarithm of psi, g(y) = int_0^y (1 + q1 t + ... + q4 t^4)^(-1/2) dt, through y^order.
Series<MultiPoly> psi_logarithm(const std::array<MultiPoly, 4>& q, int order);

// Ring homomorphism applied coefficientwise. Each image must be homogeneous
// of the symbol's weight, or a constant (evaluation at a number drops the
// grading, as for the A-hat specialization).
Genus<MultiPoly> specialize(const Genus<MultiPoly>& phi, const std::map<std::string, MultiPoly>& images,
                            const PolyRingPtr& target);
MultiPoly specialize(const MultiPoly& p, const std::map<std::string, MultiPoly>& images, const PolyRingPtr& target);

// Substitutions in rational functions, applied one after another with
// reduction in between. A vanishing denominator is a domain error.
RatFrac substitute(const RatFrac& f, const std::vector<std::pair<std::string, RatFrac>>& steps);
Genus<RatFrac> substitute(const Genus<RatFrac>& phi, const std::vector<std::pair<std::string, RatFrac>>& steps);

// q_i in terms of p_j obtained by matching psi(CP^m) = phi_KH(CP^m), m = 1..4.
std::array<MultiPoly, 4> solve_q_in_p();
// The four displayed relations.
std::array<MultiPoly, 4> expected_q_in_p();

// q-expansion of the characteristic series of psi as an infinite product.
struct QExpandedPsi {
  int q_max = 0;
  int x_order = 0;
  Series<Series<RatFrac>> char_series;  // series in x over series in q
  Series<RatFrac> mu;                   // series in q

  // Coefficient of q^l x^k.
  RatFrac coeff(int l, int k) const { return char_series.coeff(k).coeff(l); }
};

QExpandedPsi build_q_expansion(int q_max, int x_order);

// Value of the q-expanded psi on M as a q-series (path through the product).
Series<RatFrac> q_expanded_psi(const QExpandedPsi& qe, const Manifold& m);

// chi(M, Theta(M)) by Hirzebruch-Riemann-Roch, and mu^n times it.
Series<RatFrac> theta_euler_characteristic(const Manifold& m, int q_max);
Series<RatFrac> theta_identity_rhs(const Manifold& m, int q_max);

// chi(M, Lambda_y T* (x) Lambda_{s/y} T* (x) S_s T*) times mu_0^n.
RatFrac degenerate_bundle_side(const Manifold& m);

// Todd genus integral of M.
Rational todd_genus(const Manifold& m);

}  // namespace genus_forge
