#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core/cohomology.hpp"

namespace genus_forge {

struct Manifold;
using ManifoldPtr = std::shared_ptr<const Manifold>;

// A Cartesian factor of a product, with the first generator it owns.
struct FactorRef {
  ManifoldPtr manifold;
  std::size_t offset = 0;
};

struct Manifold {
  std::string label;
  CohomModel cohomology;
  int dim = 0;
  MultiPoly tangent_chern;  // total Chern class of the stable tangent bundle
  int tangent_rank = 0;
  std::vector<FactorRef> factors;  // flattened Cartesian factors; empty when not a product

  // The c_i component of the tangent class.
  MultiPoly chern_class(int i) const { return tangent_chern.homogeneous_component(2 * i); }
};

struct Bundle {
  std::string label;
  ManifoldPtr base;
  int rank = 0;
  MultiPoly chern;                                // 1 + c_1 + ... + c_rank
  std::optional<std::vector<MultiPoly>> roots;    // present for sums of line bundles
  MultiPoly chern_class(int i) const { return chern.homogeneous_component(2 * i); }
};

ManifoldPtr point();
ManifoldPtr projective_space(int n);
ManifoldPtr product(const ManifoldPtr& a, const ManifoldPtr& b);
ManifoldPtr product(const std::vector<ManifoldPtr>& factors);

// Model of C^3 = E x E x E restricted to the subring generated by
// u = c_1(L), together with L itself.
ManifoldPtr elliptic_cube_base();
Bundle elliptic_cube_line();

Bundle trivial_bundle(int rank, const ManifoldPtr& base);
// Pullback of O(1) from Cartesian factor `factor` (1-based) of base, which must be a CP^n.
Bundle hyperplane_bundle(const ManifoldPtr& base, int factor);
Bundle tangent_bundle(const ManifoldPtr& m);
Bundle whitney_sum(const Bundle& a, const Bundle& b);
Bundle whitney_sum(const std::vector<Bundle>& parts);
Bundle dual(const Bundle& e);
Bundle add_trivial(const Bundle& e, int k);
// Reinterprets a bundle over Cartesian factor `factor` (1-based) of `product_base`.
Bundle pullback_to_factor(const Bundle& e, const ManifoldPtr& product_base, int factor);
// Pullback along the map to a point: trivial of the same rank over `base`.
Bundle pullback_from_point(const Bundle& e, const ManifoldPtr& base);

ManifoldPtr projectivize(const Bundle& e);

Rational integrate(const Manifold& m, const MultiPoly& cls);

// Leray-Hirsch integration through the Segre class: the integral of
// omega * y^j over P(E), computed on the base.
Rational segre_integral(const Bundle& e, const MultiPoly& omega_on_base, int j);

// Elementary symmetric functions e_1..e_n of the given classes.
std::vector<MultiPoly> elementary_from_chern(const CohomModel& coh, const MultiPoly& total, int n);
// Power sums p_1..p_n from e_1..e_n by Newton's identities (index 0 unused).
std::vector<MultiPoly> newton_power_sums(const CohomModel& coh, const std::vector<MultiPoly>& e, int n);

}  // namespace genus_forge
