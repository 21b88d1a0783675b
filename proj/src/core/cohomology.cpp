#include "core/cohomology.hpp"

namespace genus_forge {

CohomModel::CohomModel(PolyRingPtr ring, int dim, std::vector<Relation> relations,
                       std::vector<IntegrationBlock> blocks, std::vector<FiberStage> fibers)
    : ring_(std::move(ring)),
      dim_(dim),
      relations_(std::move(relations)),
      blocks_(std::move(blocks)),
      fibers_(std::move(fibers)) {
  if (dim_ < 0) throw DomainError("negative dimension");
  if (relations_.size() != num_generators()) throw StructuralError("one relation per generator is required");
  std::vector<int> seen(num_generators(), 0);
  for (const auto& b : blocks_)
    for (auto g : b.gens) ++seen.at(g);
  for (const auto& f : fibers_) ++seen.at(f.gen);
  for (int s : seen)
    if (s != 1) throw StructuralError("every generator must belong to exactly one integration stage");
}

MultiPoly CohomModel::power(const MultiPoly& a, int k) const {
  MultiPoly r = one();
  for (int i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

Rational CohomModel::integrate_monomial(const Exponents& e) const {
  Rational v(1);
  for (const auto& f : fibers_)
    if (e.at(f.gen) != f.rank - 1) return Rational(0);
  for (const auto& b : blocks_) {
    Exponents sub;
    sub.reserve(b.gens.size());
    for (auto g : b.gens) sub.push_back(e.at(g));
    auto it = b.top.find(sub);
    if (it == b.top.end()) return Rational(0);
    v *= it->second;
  }
  return v;
}

MultiPoly CohomModel::inverse_unit(const MultiPoly& unit) const {
  MultiPoly u = align(unit);
  if (!(u.constant_term() == Rational(1))) throw DomainError("class is not of the form 1 + nilpotent");
  MultiPoly a = u - one();
  // 1/(1+a) = sum (-a)^j, finite since a is nilpotent
  MultiPoly r = one(), term = one();
  for (int j = 1; j <= dim_; ++j) {
    term = mul(term, -a);
    if (term.is_zero()) break;
    r += term;
  }
  return r;
}

}  // namespace genus_forge
