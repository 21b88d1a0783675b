#include "core/structure_checks.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <thread>

#include "core/named_genera.hpp"

namespace genus_forge {

using nlohmann::json;

namespace {

CheckItem make_item(std::string check, json params, std::string expected, std::string got, bool ok) {
  return CheckItem{std::move(check), std::move(params), std::move(expected), std::move(got), ok ? "pass" : "fail"};
}

template <class T>
CheckItem compare(std::string check, json params, const T& expected, const T& got) {
  using genus_forge::to_string;
  return make_item(std::move(check), std::move(params), to_string(expected), to_string(got), expected == got);
}

CheckItem error_item(std::string check, json params, const std::exception& e) {
  return CheckItem{std::move(check), std::move(params), "", std::string("error: ") + e.what(), "fail"};
}

std::string kind_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::Ex24:
      return "ex24";
    case FamilyKind::Ex25:
      return "ex25";
    case FamilyKind::Cy3:
      return "cy3";
  }
  return "?";
}

Rational sign_pow(int n) { return n % 2 ? Rational(-1) : Rational(1); }

long to_long(const Rational& r) {
  if (!r.is_integer()) throw InvariantError("expected an integer, got " + r.to_string());
  return r.raw().get_num().get_si();
}

std::string partition_key(std::vector<int> parts) {
  parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
  std::sort(parts.rbegin(), parts.rend());
  return chern_key(parts);
}

}  // namespace

// ---------------------------------------------------------------------------
// families

int ExampleFamily::base_dim() const {
  if (kind == FamilyKind::Cy3) return 3;
  return std::accumulate(parts.begin(), parts.end(), 0);
}

std::string ExampleFamily::label() const {
  std::string s = kind_name(kind) + "(" + std::to_string(m);
  for (int p : parts) s += "," + std::to_string(p);
  return s + ")";
}

json ExampleFamily::params() const {
  json j;
  j["family"] = kind_name(kind);
  j["m"] = m;
  if (kind != FamilyKind::Cy3) j["parts"] = parts;
  return j;
}

ExampleFamily ex24(int m, int i1, int i2) {
  if (i1 < 0 || i2 < 0) throw DomainError("ex24 parts must be nonnegative");
  if (m < i1 + i2 + 1) throw DomainError("ex24 needs m >= n + 1");
  return {FamilyKind::Ex24, m, {i1, i2}};
}

ExampleFamily ex25(int m, int i1, int i2, int i3) {
  if (i1 < 0 || i2 < 0 || i3 < 0) throw DomainError("ex25 parts must be nonnegative");
  if (m < i1 + i2 + i3 + 2) throw DomainError("ex25 needs m >= n + 2");
  return {FamilyKind::Ex25, m, {i1, i2, i3}};
}

ExampleFamily cy3(int m) {
  if (m < 5) throw DomainError("cy3 needs m >= 5");
  return {FamilyKind::Cy3, m, {}};
}

Rational family_formula(const ExampleFamily& fam) {
  const int m = fam.m;
  if (fam.kind == FamilyKind::Cy3) return Rational(static_cast<long>(m - 4) * (m - 3) * (m + 1));
  const int n = fam.base_dim();
  Rational s(0);
  for (int i : fam.parts) s += sign_pow(i) * binomial(m - 1, i);
  s += Rational(m - n + 1 - static_cast<int>(fam.parts.size()));
  return sign_pow(n) * s;
}

namespace {

Bundle build_family_bundle(const ExampleFamily& fam) {
  if (fam.kind == FamilyKind::Cy3) {
    cy3(fam.m);
    return add_trivial(elliptic_cube_line(), fam.m - 3);
  }
  // re-run the parameter checks
  if (fam.kind == FamilyKind::Ex24) {
    if (fam.parts.size() != 2) throw DomainError("ex24 takes two parts");
    ex24(fam.m, fam.parts[0], fam.parts[1]);
  } else {
    if (fam.parts.size() != 3) throw DomainError("ex25 takes three parts");
    ex25(fam.m, fam.parts[0], fam.parts[1], fam.parts[2]);
  }
  std::vector<ManifoldPtr> factors;
  for (int i : fam.parts) factors.push_back(projective_space(i));
  ManifoldPtr base = product(factors);
  std::vector<Bundle> lines;
  for (std::size_t j = 0; j < fam.parts.size(); ++j) lines.push_back(hyperplane_bundle(base, static_cast<int>(j) + 1));
  Bundle e = whitney_sum(lines);
  int extra = fam.m - fam.base_dim() + 1 - static_cast<int>(fam.parts.size());
  if (extra > 0) e = add_trivial(e, extra);
  e.label = fam.label();
  return e;
}

}  // namespace

Materialized materialize(const ExampleFamily& fam) {
  Materialized out{build_family_bundle(fam), family_formula(fam)};
  Rational closed = milnor_closed_form(out.bundle);
  if (!(closed == out.expected_milnor))
    throw InvariantError(fam.label() + ": closed form gives " + closed.to_string() + ", formula gives " +
                         out.expected_milnor.to_string());
  return out;
}

// ---------------------------------------------------------------------------
// reports and threads

bool Report::ok() const {
  return std::all_of(items.begin(), items.end(), [](const CheckItem& c) { return c.verdict == "pass" || c.verdict == "info"; });
}

std::size_t Report::failures() const {
  return std::count_if(items.begin(), items.end(), [](const CheckItem& c) { return c.verdict == "fail"; });
}

json Report::to_json() const {
  json arr = json::array();
  for (const auto& c : items) {
    json j;
    j["check"] = c.check;
    j["params"] = c.params.is_null() ? json::object() : c.params;
    j["expected"] = c.expected;
    j["got"] = c.got;
    j["verdict"] = c.verdict;
    arr.push_back(std::move(j));
  }
  return arr;
}

int worker_count() {
  if (const char* env = std::getenv("GENUS_FORGE_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

void detail::run_indexed(std::size_t n, int workers, const std::function<void(std::size_t)>& body) {
  const std::size_t w = std::min<std::size_t>(n, std::max(1, workers));
  if (w <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < w; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < n;) body(i);
    });
  for (auto& th : pool) th.join();
}

// ---------------------------------------------------------------------------
// gcd scans

long odd_part(long v) {
  v = std::labs(v);
  if (v == 0) return 0;
  while (v % 2 == 0) v /= 2;
  return v;
}

long prime_power_base(long n) {
  if (n < 2) return 1;
  long p = 2;
  while (p * p <= n && n % p != 0) ++p;
  if (n % p != 0) p = n;  // n is prime
  while (n % p == 0) n /= p;
  return n == 1 ? p : 1;
}

long odd_prime_power_base(long n) {
  long p = prime_power_base(n);
  return p == 2 ? 1 : p;
}

CheckItem GcdReport::item() const {
  json params{{"m", m}, {"scan", scan}, {"witnesses", witnesses.size()}};
  CheckItem c{"gcd-" + scan, params, std::to_string(expected), std::to_string(gcd), verdict};
  if (!note.empty()) c.got += " (" + note + ")";
  return c;
}

namespace {

GcdReport run_scan(int m, const std::string& scan, const std::vector<ExampleFamily>& fams, bool odd_parts,
                   long expected) {
  GcdReport r;
  r.m = m;
  r.scan = scan;
  r.expected = expected;
  auto values = parallel_map<Rational>(fams.size(), [&](std::size_t i) { return materialize(fams[i]).expected_milnor; });
  long g = 0;
  for (std::size_t i = 0; i < fams.size(); ++i) {
    r.witnesses.push_back({fams[i], values[i]});
    long v = to_long(values[i]);
    g = std::gcd(g, odd_parts ? odd_part(v) : std::labs(v));
  }
  r.gcd = g;
  if (g == 0) {
    r.verdict = "inconclusive";
    r.note = "no nonzero witness";
  } else if (g == expected) {
    r.verdict = "pass";
  } else {
    r.verdict = "fail";
    r.note = g < expected && expected % g == 0 ? "gcd smaller than pattern: model bug" : "gcd differs from pattern";
  }
  return r;
}

}  // namespace

GcdReport gcd_scan_odd(int m) {
  if (m < 5) throw DomainError("odd scan needs m >= 5");
  std::vector<ExampleFamily> fams;
  for (int n = 1; n <= m - 1; n += 2)
    for (int a = 0; 2 * a <= n; ++a) fams.push_back(ex24(m, a, n - a));
  for (int n = 1; n <= m - 2; n += 2)
    for (int a = 0; 3 * a <= n; ++a)
      for (int b = a; a + 2 * b <= n; ++b) fams.push_back(ex25(m, a, b, n - a - b));
  return run_scan(m, "odd", fams, true, odd_prime_power_base(m + 1));
}

GcdReport gcd_scan_even_base(int m) {
  if (m < 3) throw DomainError("even scan needs m >= 3");
  std::vector<ExampleFamily> fams;
  for (int n = 0; n <= m - 1; n += 2)
    for (int a = 0; 2 * a <= n; ++a) fams.push_back(ex24(m, a, n - a));
  return run_scan(m, "even", fams, false, prime_power_base(m + 1));
}

Report gcd_suite(const std::string& scan, int from, int to) {
  Report r;
  for (int m = from; m <= to; ++m) {
    try {
      r.items.push_back((scan == "odd" ? gcd_scan_odd(m) : gcd_scan_even_base(m)).item());
    } catch (const std::exception& e) {
      r.items.push_back(error_item("gcd-" + scan, json{{"m", m}}, e));
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// basis certification

BasisEntry basis_entry(const Manifold& m) { return {m.label, m.dim, milnor_number(m)}; }

BasisEntry basis_entry(const std::string& label, const std::vector<std::pair<Rational, ManifoldPtr>>& combination) {
  BasisEntry e{label, -1, Rational(0)};
  for (const auto& [c, m] : combination) {
    if (e.dim >= 0 && m->dim != e.dim) throw DomainError("linear combination mixes dimensions");
    e.dim = m->dim;
    e.s += c * milnor_number(*m);
  }
  if (e.dim < 0) throw DomainError("empty combination");
  return e;
}

bool is_generator(const BasisEntry& e, BasisMode mode) {
  if (e.s.is_zero()) return false;
  if (mode == BasisMode::Q) return true;
  const long n = e.dim + 1;
  if (mode == BasisMode::Z) {
    if (!e.s.is_integer()) return false;
    long s = std::labs(to_long(e.s));
    long p = prime_power_base(n);
    return s == p;  // p = 1 when m+1 is not a prime power
  }
  // Z[1/2]: strip powers of two from numerator and denominator
  mpz_class num = e.s.raw().get_num(), den = e.s.raw().get_den();
  if (num < 0) num = -num;
  while (num % 2 == 0) num /= 2;
  while (den % 2 == 0) den /= 2;
  if (den != 1) return false;
  return num == odd_prime_power_base(n);
}

std::string basis_verdict(const BasisEntry& e) {
  if (is_generator(e, BasisMode::Z)) return "generator over Z";
  if (is_generator(e, BasisMode::ZHalf)) return "generator over Z[1/2]";
  if (is_generator(e, BasisMode::Q)) return "rational generator only";
  return "not a generator";
}

Report basis_certificate(const std::vector<BasisEntry>& seq, BasisMode mode) {
  const char* mode_name = mode == BasisMode::Z ? "Z" : mode == BasisMode::ZHalf ? "Z[1/2]" : "Q";
  Report r;
  for (const auto& e : seq) {
    bool ok = is_generator(e, mode);
    r.items.push_back(make_item("basis", json{{"label", e.label}, {"dim", e.dim}, {"mode", mode_name}},
                                std::string("generator over ") + mode_name,
                                "s=" + e.s.to_string() + "; " + basis_verdict(e), ok));
  }
  return r;
}

// ---------------------------------------------------------------------------
// catalog suites

std::vector<CatalogEntry> catalog(int max_m) {
  std::vector<CatalogEntry> out;
  auto add_family = [&](const ExampleFamily& f) {
    out.push_back({f.label(), f.params(), build_family_bundle(f), f});
  };
  for (int m = 3; m <= max_m; ++m)
    for (int n = 2; n <= m - 1; ++n)
      for (int a = 1; 2 * a <= n; ++a) add_family(ex24(m, a, n - a));
  for (int m = 5; m <= max_m; ++m)
    for (int n = 3; n <= m - 2; ++n)
      for (int a = 1; 3 * a <= n; ++a)
        for (int b = a; a + 2 * b <= n; ++b) add_family(ex25(m, a, b, n - a - b));
  for (int m = 5; m <= max_m; ++m) add_family(cy3(m));
  for (int n = 2; n <= 3 && 2 * n - 1 <= max_m; ++n) {
    Bundle t = tangent_bundle(projective_space(n));
    out.push_back({"tangent(cp(" + std::to_string(n) + "))", json{{"family", "tangent"}, {"n", n}}, t, std::nullopt});
    out.push_back({"dual(tangent(cp(" + std::to_string(n) + ")))", json{{"family", "cotangent"}, {"n", n}}, dual(t),
                   std::nullopt});
  }
  return out;
}

namespace {

// c_n, c_1 c_{n-1}, c_1^2 c_{n-2}, c_2 c_{n-2}
std::vector<std::string> invariant_chern_keys(int n) {
  std::vector<std::string> keys;
  auto add = [&](std::vector<int> p) {
    if (std::any_of(p.begin(), p.end(), [](int x) { return x < 0; })) return;
    std::string k = partition_key(p);
    if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
  };
  add({n});
  add({1, n - 1});
  add({1, 1, n - 2});
  add({2, n - 2});
  return keys;
}

std::map<std::string, Rational> chern_map(const ChernTable& t) {
  std::map<std::string, Rational> m;
  for (const auto& [mu, v] : t.entries) m[chern_key(mu)] = v;
  return m;
}

template <class F>
Report per_entry(const std::vector<CatalogEntry>& cat, const std::string& name, F&& fn) {
  auto parts = parallel_map<Report>(cat.size(), [&](std::size_t i) {
    Report r;
    try {
      fn(cat[i], r);
    } catch (const std::exception& e) {
      r.items.push_back(error_item(name, cat[i].params, e));
    }
    return r;
  });
  Report all;
  for (const auto& p : parts) all.append(p);
  return all;
}

json with_label(json p, const std::string& label) {
  p["bundle"] = label;
  return p;
}

}  // namespace

Report dualization_suite(int max_m) {
  if (max_m > 8) throw DomainError("dualization suite is limited to dim <= 8");
  auto cat = catalog(max_m);
  auto psi = build_psi(std::max(max_m, 2));
  auto chi = build_chi_y(std::max(max_m, 2));
  return per_entry(cat, "dual", [&](const CatalogEntry& c, Report& r) {
    auto pe = projectivize(c.bundle);
    auto pd = projectivize(dual(c.bundle));
    json p = with_label(c.params, c.label);
    r.items.push_back(compare("dual/psi", p, evaluate(psi, *pe), evaluate(psi, *pd)));
    r.items.push_back(compare("dual/chi_y", p, evaluate(chi, *pe), evaluate(chi, *pd)));
    auto a = chern_map(chern_numbers(*pe)), b = chern_map(chern_numbers(*pd));
    auto keys = invariant_chern_keys(pe->dim);
    for (const auto& k : keys) {
      json pk = p;
      pk["chern"] = k;
      r.items.push_back(compare("dual/chern", pk, a[k], b[k]));
    }
    std::string differing;
    for (const auto& [k, v] : a)
      if (!(b[k] == v)) differing += (differing.empty() ? "" : ",") + k;
    if (!differing.empty())
      r.items.push_back(CheckItem{"dual/non-invariant", p, "", differing, "info"});
  });
}

Report cy3_multiplicativity_suite(int max_m) {
  Report r;
  if (max_m < 5) return r;
  auto psi = build_psi(max_m);
  auto chi = build_chi_y(max_m);
  std::vector<int> ms;
  for (int m = 5; m <= max_m; ++m) ms.push_back(m);
  auto parts = parallel_map<Report>(ms.size(), [&](std::size_t i) {
    Report out;
    const int m = ms[i];
    json p{{"family", "cy3"}, {"m", m}};
    try {
      auto mat = materialize(cy3(m));
      auto pe = projectivize(mat.bundle);
      MultiPoly v = evaluate(psi, *pe);
      out.items.push_back(make_item("cy3/psi", p, "0", to_string(v), v.is_zero()));
      MultiPoly w = evaluate(chi, *pe);
      out.items.push_back(make_item("cy3/chi_y", p, "0", to_string(w), w.is_zero()));
      out.items.push_back(compare("cy3/milnor", p, Rational(static_cast<long>(m - 4) * (m - 3) * (m + 1)), milnor_number(*pe)));
    } catch (const std::exception& e) {
      out.items.push_back(error_item("cy3", p, e));
    }
    return out;
  });
  for (const auto& x : parts) r.append(x);
  return r;
}

Report milnor_closed_form_suite(int max_m) {
  auto cat = catalog(max_m);
  return per_entry(cat, "milnor", [&](const CatalogEntry& c, Report& r) {
    json p = with_label(c.params, c.label);
    const Bundle& e = c.bundle;
    Rational direct = milnor_number(*projectivize(e));
    if (e.roots) r.items.push_back(compare("milnor/closed-roots", p, direct, milnor_closed_form_from_roots(e)));
    r.items.push_back(compare("milnor/closed-symmetric", p, direct, milnor_closed_form_symmetric(e)));
    if (c.family) r.items.push_back(compare("milnor/formula", p, direct, family_formula(*c.family)));
    Rational d = milnor_number(*projectivize(dual(e)));
    r.items.push_back(compare("milnor/dual-sign", p, direct, sign_pow(e.base->dim) * d));
  });
}

Report chi_y_multiplicativity_suite(int max_m) {
  auto cat = catalog(max_m);
  auto chi = build_chi_y(std::max(max_m, 2));
  return per_entry(cat, "chi_y", [&](const CatalogEntry& c, Report& r) {
    json p = with_label(c.params, c.label);
    MultiPoly lhs = evaluate(chi, *projectivize(c.bundle));
    MultiPoly rhs = evaluate(chi, *projective_space(c.bundle.rank - 1)) * evaluate(chi, *c.bundle.base);
    r.items.push_back(compare("chi_y/multiplicative", p, rhs, lhs));
  });
}

Report kh_psi_relation_check() {
  Report r;
  auto kh = build_kh(6);
  const auto& P = kh_ring();
  auto p = [&](int i) { return MultiPoly::variable(P, i); };
  auto c = [](long a, long b) { return MultiPoly(Rational(a, b)); };
  std::vector<MultiPoly> known = {
      c(1, 2) * p(0),
      c(3, 16) * p(0).pow(2) + c(1, 4) * p(1),
      c(1, 48) * (c(3, 1) * p(0).pow(3) + c(12, 1) * p(0) * p(1) + c(8, 1) * p(2)),
      c(1, 768) * (c(15, 1) * p(0).pow(4) + c(120, 1) * p(0).pow(2) * p(1) + c(48, 1) * p(1).pow(2) +
                   c(176, 1) * p(0) * p(2) + c(96, 1) * p(3))};
  for (int m = 1; m <= 4; ++m)
    r.items.push_back(compare("kh/value", json{{"m", m}}, known[m - 1], evaluate(kh, *projective_space(m))));
  std::vector<MultiPoly> b = {c(1, 4) * p(0), c(1, 12) * p(1), c(1, 24) * p(2),
                              c(1, 720) * (c(-1, 1) * p(1).pow(2) + c(3, 1) * p(0) * p(2) + c(18, 1) * p(3))};
  for (int i = 1; i <= 4; ++i)
    r.items.push_back(compare("kh/b", json{{"i", i}}, b[i - 1], kh.char_series.coeff(i)));
  auto solved = solve_q_in_p();
  auto expected = expected_q_in_p();
  for (int i = 0; i < 4; ++i) {
    r.items.push_back(compare("kh/q-in-p", json{{"q", i + 1}}, expected[i], solved[i]));
  }
  // p1 = p3 = 0 sends q1 and q3 to zero
  std::map<std::string, MultiPoly> oc{{"p1", MultiPoly(P)}, {"p3", MultiPoly(P)}};
  for (int i : {0, 2}) {
    MultiPoly v = specialize(solved[i], oc, P);
    r.items.push_back(make_item("kh/ochanine", json{{"q", i + 1}}, "0", to_string(v), v.is_zero()));
  }
  return r;
}

Report degenerate_suite(int max_n) {
  Report r;
  const int order = std::max(2 * max_n, 2);
  auto deg = build_psi_deg(order);
  auto chi = build_chi_y(order);
  auto ahat = build_ahat(order);
  auto psi = build_psi(order);
  auto och = build_ochanine(order);
  const auto& R = degenerate_ring();
  RatFrac y(symbol(R, "y")), t(symbol(R, "t"));
  auto point_ring = make_ring({});
  auto psi_a = specialize(psi, {{"q1", MultiPoly(0)}, {"q2", MultiPoly(Rational(1, 4))}, {"q3", MultiPoly(0)}, {"q4", MultiPoly(0)}},
                          point_ring);
  auto och_a = specialize(och, {{"delta", MultiPoly(Rational(-1, 8))}, {"epsilon", MultiPoly(0)}}, point_ring);
  for (int n = 1; n <= max_n; ++n) {
    json p{{"manifold", "cp(" + std::to_string(n) + ")"}};
    try {
      auto cp = projective_space(n);
      RatFrac v = evaluate(deg, *cp);
      RatFrac eta = substitute(v, {{"s", RatFrac(MultiPoly(R))}, {"t", (RatFrac(1) + y) * t}});
      MultiPoly c = evaluate(chi, *cp);
      r.items.push_back(compare("deg/eta", p, RatFrac(c.embed(R, {1, 2})), eta));
      Rational a = evaluate(ahat, *cp);
      RatFrac av = substitute(v, {{"s", RatFrac(-1)}, {"y", RatFrac(0)}, {"t", RatFrac(Rational(1, 2))}});
      r.items.push_back(compare("deg/ahat", p, RatFrac(MultiPoly::constant(R, a)), av));
      r.items.push_back(compare("psi/ahat", p, a, evaluate(psi_a, *cp).constant_term()));
      if (n % 2 == 0) r.items.push_back(compare("ochanine/ahat", p, a, evaluate(och_a, *cp).constant_term()));
    } catch (const std::exception& e) {
      r.items.push_back(error_item("deg", p, e));
    }
  }
  return r;
}

Report q_expansion_suite(int q_max, const std::vector<ManifoldPtr>& spaces) {
  Report r;
  const auto& R = degenerate_ring();
  RatFrac s(symbol(R, "s")), y(symbol(R, "y")), one(1);
  int x_order = 2;
  for (const auto& m : spaces) x_order = std::max(x_order, 2 * m->dim + 2);
  json p{{"qmax", q_max}, {"x_order", x_order}};
  try {
    auto qe = build_q_expansion(q_max, x_order);
    auto deg = build_psi_deg(x_order);
    RatFrac t1(MultiPoly::constant(R, Rational(1)));
    bool layer_ok = true;
    std::string bad;
    for (int k = 0; k <= x_order; ++k) {
      RatFrac d = substitute(deg.char_series.coeff(k), {{"t", t1}});
      if (!(qe.coeff(0, k) == d)) {
        layer_ok = false;
        bad = "x^" + std::to_string(k);
        break;
      }
    }
    r.items.push_back(make_item("qexp/q0-layer", p, "degenerate psi", layer_ok ? "degenerate psi" : "differs at " + bad,
                                layer_ok));
    r.items.push_back(compare("qexp/mu0", p, (one - s) / ((one + s / y) * (one + y)), qe.mu.coeff(0)));
    r.items.push_back(compare("qexp/constant", p, RatFrac(1), qe.coeff(0, 0)));
    for (int l = 1; l <= q_max; ++l) {
      json pl = p;
      pl["l"] = l;
      r.items.push_back(compare("qexp/constant", pl, RatFrac(0), qe.coeff(l, 0)));
    }
    // the x coefficient at s -> 0, y -> 0 stays finite
    RatFrac x1 = substitute(qe.coeff(0, 1), {{"s", RatFrac(0)}, {"y", RatFrac(0)}});
    r.items.push_back(make_item("qexp/finite-limit", p, "finite", to_string(x1), true));
  } catch (const std::exception& e) {
    r.items.push_back(error_item("qexp", p, e));
  }
  return r;
}

Report hrr_suite(int q_max, const std::vector<ManifoldPtr>& spaces) {
  Report r;
  r.items.push_back(compare("hrr/todd", json{{"manifold", "cp(1)"}}, Rational(1), todd_genus(*projective_space(1))));
  auto parts = parallel_map<Report>(spaces.size(), [&](std::size_t i) {
    Report out;
    const auto& m = spaces[i];
    json p{{"manifold", m->label}, {"qmax", q_max}};
    try {
      auto qe = build_q_expansion(q_max, 2 * m->dim + 2);
      auto lhs = q_expanded_psi(qe, *m);
      auto rhs = theta_identity_rhs(*m, q_max);
      for (int l = 0; l <= q_max; ++l) {
        json pl = p;
        pl["l"] = l;
        out.items.push_back(compare("hrr/layer", pl, lhs.coeff(l), rhs.coeff(l)));
      }
      out.items.push_back(compare("hrr/q0-bundle", p, lhs.coeff(0), degenerate_bundle_side(*m)));
    } catch (const std::exception& e) {
      out.items.push_back(error_item("hrr", p, e));
    }
    return out;
  });
  for (const auto& x : parts) r.append(x);
  return r;
}

}  // namespace genus_forge
