#include "core/manifold.hpp"

#include <numeric>

namespace genus_forge {

namespace {

std::vector<FactorRef> factor_list(const ManifoldPtr& m) {
  if (!m->factors.empty()) return m->factors;
  return {FactorRef{m, 0}};
}

std::string generator_name(const std::string& base, const PolyRing& taken) {
  if (!taken.index_of(base)) return base;
  for (int i = 2;; ++i) {
    std::string n = base + std::to_string(i);
    if (!taken.index_of(n)) return n;
  }
}

bool is_projective_space(const Manifold& m) { return m.label.rfind("cp(", 0) == 0; }

MultiPoly binomial_power(const CohomModel& coh, const MultiPoly& a, int k) {
  // (1 + a)^k in the ring
  return coh.power(coh.one() + a, k);
}

}  // namespace

ManifoldPtr point() { return projective_space(0); }

ManifoldPtr projective_space(int n) {
  if (n < 0) throw DomainError("projective space of negative dimension");
  auto ring = make_ring({{"x", 2}});
  MultiPoly x = MultiPoly::variable(ring, 0);
  Relation rel{n + 1, MultiPoly(ring)};
  IntegrationBlock block{{0}, {{Exponents{n}, Rational(1)}}};
  auto m = std::make_shared<Manifold>();
  m->label = "cp(" + std::to_string(n) + ")";
  m->cohomology = CohomModel(ring, n, {rel}, {block}, {});
  m->dim = n;
  m->tangent_chern = binomial_power(m->cohomology, x, n + 1);
  m->tangent_rank = n;
  return m;
}

ManifoldPtr product(const ManifoldPtr& a, const ManifoldPtr& b) {
  const CohomModel& ca = a->cohomology;
  const CohomModel& cb = b->cohomology;
  const std::size_t na = ca.num_generators(), nb = cb.num_generators();

  std::vector<std::string> names;
  std::vector<int> weights;
  auto fa = factor_list(a), fb = factor_list(b);
  // rename generators by their factor index so that names stay unique
  auto factor_of = [](const std::vector<FactorRef>& fl, std::size_t gen) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < fl.size(); ++i)
      if (fl[i].offset <= gen) idx = i;
    return idx;
  };
  for (std::size_t i = 0; i < na; ++i) {
    const auto& f = fa[factor_of(fa, i)];
    names.push_back(f.manifold->cohomology.ring()->name(i - f.offset) + std::to_string(factor_of(fa, i) + 1));
    weights.push_back(2);
  }
  for (std::size_t i = 0; i < nb; ++i) {
    const auto& f = fb[factor_of(fb, i)];
    names.push_back(f.manifold->cohomology.ring()->name(i - f.offset) +
                    std::to_string(fa.size() + factor_of(fb, i) + 1));
    weights.push_back(2);
  }
  auto ring = std::make_shared<const PolyRing>(names, weights);

  std::vector<std::size_t> map_a(na), map_b(nb);
  std::iota(map_a.begin(), map_a.end(), 0);
  std::iota(map_b.begin(), map_b.end(), na);

  std::vector<Relation> rels;
  for (const auto& r : ca.relations()) rels.push_back({r.bound, r.tail.embed(ring, map_a)});
  for (const auto& r : cb.relations()) rels.push_back({r.bound, r.tail.embed(ring, map_b)});
  std::vector<IntegrationBlock> blocks;
  for (const auto& bl : ca.blocks()) blocks.push_back(bl);
  for (const auto& bl : cb.blocks()) {
    IntegrationBlock nbk = bl;
    for (auto& g : nbk.gens) g += na;
    blocks.push_back(std::move(nbk));
  }
  std::vector<FiberStage> fibers = ca.fibers();
  for (auto f : cb.fibers()) fibers.push_back({f.gen + na, f.rank});

  auto m = std::make_shared<Manifold>();
  m->label = "prod(" + a->label + "," + b->label + ")";
  m->dim = a->dim + b->dim;
  m->cohomology = CohomModel(ring, m->dim, std::move(rels), std::move(blocks), std::move(fibers));
  m->tangent_chern = m->cohomology.mul(a->tangent_chern.embed(ring, map_a), b->tangent_chern.embed(ring, map_b));
  m->tangent_rank = a->tangent_rank + b->tangent_rank;
  m->factors = fa;
  for (auto f : fb) m->factors.push_back({f.manifold, f.offset + na});
  return m;
}

ManifoldPtr product(const std::vector<ManifoldPtr>& factors) {
  if (factors.empty()) return point();
  ManifoldPtr r = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) r = product(r, factors[i]);
  return r;
}

ManifoldPtr elliptic_cube_base() {
  auto ring = make_ring({{"u", 2}});
  Relation rel{4, MultiPoly(ring)};
  IntegrationBlock block{{0}, {{Exponents{3}, Rational(6)}}};
  auto m = std::make_shared<Manifold>();
  m->label = "ecube()";
  m->cohomology = CohomModel(ring, 3, {rel}, {block}, {});
  m->dim = 3;
  m->tangent_chern = m->cohomology.one();
  m->tangent_rank = 3;
  return m;
}

Bundle elliptic_cube_line() {
  static const ManifoldPtr base = elliptic_cube_base();
  Bundle e;
  e.label = "ecube_line()";
  e.base = base;
  e.rank = 1;
  MultiPoly u = base->cohomology.generator(0);
  e.chern = base->cohomology.one() + u;
  e.roots = std::vector<MultiPoly>{u};
  return e;
}

Bundle trivial_bundle(int rank, const ManifoldPtr& base) {
  if (rank < 0) throw DomainError("negative rank");
  Bundle e;
  e.label = "triv(" + std::to_string(rank) + (base->dim > 0 ? "," + base->label : "") + ")";
  e.base = base;
  e.rank = rank;
  e.chern = base->cohomology.one();
  e.roots = std::vector<MultiPoly>(rank, base->cohomology.zero());
  return e;
}

Bundle hyperplane_bundle(const ManifoldPtr& base, int factor) {
  auto fl = factor_list(base);
  if (factor < 1 || factor > static_cast<int>(fl.size()))
    throw DomainError("factor index " + std::to_string(factor) + " out of range for " + base->label);
  const FactorRef& f = fl[factor - 1];
  if (!is_projective_space(*f.manifold)) throw DomainError("O(1) needs a projective space factor, got " + f.manifold->label);
  const CohomModel& coh = base->cohomology;
  MultiPoly x = coh.reduce(coh.generator(f.offset));
  Bundle e;
  e.label = fl.size() == 1 && base->factors.empty() ? "o1(" + base->label + ")"
                                                     : "o1(" + std::to_string(factor) + "," + base->label + ")";
  e.base = base;
  e.rank = 1;
  e.chern = coh.one() + x;
  e.roots = std::vector<MultiPoly>{x};
  return e;
}

Bundle tangent_bundle(const ManifoldPtr& m) {
  Bundle e;
  e.label = "tangent(" + m->label + ")";
  e.base = m;
  e.rank = m->tangent_rank;
  e.chern = m->tangent_chern;
  return e;
}

Bundle whitney_sum(const Bundle& a0, const Bundle& b0) {
  Bundle a = a0, b = b0;
  if (a.base->dim == 0 && b.base->dim > 0) a = pullback_from_point(a, b.base);
  if (b.base->dim == 0 && a.base->dim > 0) b = pullback_from_point(b, a.base);
  if (a.base->label != b.base->label)
    throw StructuralError("Whitney sum of bundles over different bases: " + a.base->label + " and " + b.base->label);
  Bundle e;
  e.label = "sum(" + a0.label + "," + b0.label + ")";
  e.base = a.base;
  e.rank = a.rank + b.rank;
  const CohomModel& coh = a.base->cohomology;
  e.chern = coh.mul(a.chern, b.base == a.base ? b.chern : b.chern);
  if (a.roots && b.roots) {
    std::vector<MultiPoly> r = *a.roots;
    r.insert(r.end(), b.roots->begin(), b.roots->end());
    e.roots = std::move(r);
  }
  return e;
}

Bundle whitney_sum(const std::vector<Bundle>& parts) {
  if (parts.empty()) throw DomainError("empty Whitney sum");
  Bundle r = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) r = whitney_sum(r, parts[i]);
  if (parts.size() > 1) {
    std::string label = "sum(";
    for (std::size_t i = 0; i < parts.size(); ++i) label += (i ? "," : "") + parts[i].label;
    r.label = label + ")";
  }
  return r;
}

Bundle dual(const Bundle& e) {
  Bundle d = e;
  d.label = "dual(" + e.label + ")";
  MultiPoly c(e.chern.ring());
  for (int i = 0; i <= e.base->dim; ++i) {
    MultiPoly ci = e.chern_class(i);
    c += i % 2 ? -ci : ci;
  }
  d.chern = c;
  if (e.roots) {
    std::vector<MultiPoly> r;
    for (const auto& x : *e.roots) r.push_back(-x);
    d.roots = std::move(r);
  }
  return d;
}

Bundle add_trivial(const Bundle& e, int k) { return whitney_sum(e, trivial_bundle(k, e.base)); }

Bundle pullback_to_factor(const Bundle& e, const ManifoldPtr& product_base, int factor) {
  auto fl = factor_list(product_base);
  if (factor < 1 || factor > static_cast<int>(fl.size())) throw DomainError("factor index out of range");
  const FactorRef& f = fl[factor - 1];
  if (f.manifold->label != e.base->label)
    throw StructuralError("bundle lives over " + e.base->label + ", factor is " + f.manifold->label);
  const auto& target = product_base->cohomology.ring();
  std::vector<std::size_t> map(e.base->cohomology.num_generators());
  std::iota(map.begin(), map.end(), f.offset);
  Bundle r;
  r.label = "pullback(" + std::to_string(factor) + "," + e.label + "," + product_base->label + ")";
  r.base = product_base;
  r.rank = e.rank;
  r.chern = product_base->cohomology.reduce(e.chern.embed(target, map));
  if (e.roots) {
    std::vector<MultiPoly> roots;
    for (const auto& x : *e.roots) roots.push_back(product_base->cohomology.reduce(x.embed(target, map)));
    r.roots = std::move(roots);
  }
  return r;
}

Bundle pullback_from_point(const Bundle& e, const ManifoldPtr& base) {
  if (e.base->dim != 0) throw StructuralError("bundle is not over a point");
  Bundle r = trivial_bundle(e.rank, base);
  r.label = e.label;
  return r;
}

ManifoldPtr projectivize(const Bundle& e) {
  const int k = e.rank;
  if (k < 1) throw DomainError("projectivization of a rank-0 bundle");
  const Manifold& b = *e.base;
  const CohomModel& cb = b.cohomology;
  const std::size_t nb = cb.num_generators();

  std::vector<std::string> names = cb.ring()->names();
  std::vector<int> weights = cb.ring()->weights();
  names.push_back(generator_name("y", *cb.ring()));
  weights.push_back(2);
  auto ring = std::make_shared<const PolyRing>(names, weights);
  std::vector<std::size_t> map(nb);
  std::iota(map.begin(), map.end(), 0);

  MultiPoly y = MultiPoly::variable(ring, nb);
  std::vector<Relation> rels;
  for (const auto& r : cb.relations()) rels.push_back({r.bound, r.tail.embed(ring, map)});
  // y^k = -(c_1 y^{k-1} + ... + c_k)
  MultiPoly tail(ring);
  for (int i = 1; i <= k; ++i) tail -= e.chern_class(i).embed(ring, map) * y.pow(k - i);
  rels.push_back({k, tail});
  std::vector<FiberStage> fibers = cb.fibers();
  fibers.push_back({nb, k});

  auto m = std::make_shared<Manifold>();
  m->label = "proj(" + e.label + ")";
  m->dim = b.dim + k - 1;
  m->cohomology = CohomModel(ring, m->dim, std::move(rels), cb.blocks(), std::move(fibers));
  const CohomModel& c = m->cohomology;
  MultiPoly vertical(ring);
  for (int j = 0; j <= k; ++j) {
    MultiPoly cj = e.chern_class(j).embed(ring, map);
    if (cj.is_zero()) continue;
    vertical += c.mul(cj, binomial_power(c, y, k - j));
  }
  m->tangent_chern = c.mul(b.tangent_chern.embed(ring, map), vertical);
  m->tangent_rank = b.tangent_rank + k - 1;
  return m;
}

Rational integrate(const Manifold& m, const MultiPoly& cls) { return m.cohomology.integrate(cls); }

Rational segre_integral(const Bundle& e, const MultiPoly& omega, int j) {
  const CohomModel& cb = e.base->cohomology;
  const int s = j - (e.rank - 1);
  if (s < 0) return Rational(0);
  MultiPoly segre = cb.inverse_unit(e.chern).homogeneous_component(2 * s);
  return cb.integrate(cb.mul(omega, segre));
}

std::vector<MultiPoly> elementary_from_chern(const CohomModel& coh, const MultiPoly& total, int n) {
  std::vector<MultiPoly> e(n + 1, coh.zero());
  for (int i = 0; i <= n; ++i) e[i] = total.homogeneous_component(2 * i);
  return e;
}

std::vector<MultiPoly> newton_power_sums(const CohomModel& coh, const std::vector<MultiPoly>& e, int n) {
  std::vector<MultiPoly> p(n + 1, coh.zero());
  for (int k = 1; k <= n; ++k) {
    MultiPoly acc = coh.zero();
    for (int i = 1; i < k; ++i) {
      MultiPoly t = coh.mul(e.at(i), p[k - i]);
      acc += (i % 2 == 1) ? t : -t;
    }
    MultiPoly last = e.at(k) * MultiPoly(Rational(k));
    acc += (k % 2 == 1) ? last : -last;
    p[k] = coh.reduce(acc);
  }
  return p;
}

}  // namespace genus_forge
