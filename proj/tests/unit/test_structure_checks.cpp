#include <cstdlib>

#include "core/named_genera.hpp"
#include "core/structure_checks.hpp"
#include "doctest.h"

using namespace genus_forge;

namespace {

// Independent of the family code: trial factorization of n.
long brute_prime_power(long n, bool odd_only) {
  for (long p = 2; p <= n; ++p) {
    bool prime = true;
    for (long d = 2; d * d <= p; ++d)
      if (p % d == 0) prime = false;
    if (!prime) continue;
    long v = 1;
    while (v < n) v *= p;
    if (v == n) return odd_only && p == 2 ? 1 : p;
  }
  return 1;
}

void require_ok(const Report& r) {
  for (const auto& c : r.items) {
    CAPTURE(c.check);
    CAPTURE(c.params.dump());
    CAPTURE(c.got);
    CHECK(c.verdict != "fail");
  }
}

}  // namespace

TEST_CASE("family materialization") {
  auto a = materialize(ex24(5, 1, 1));
  CHECK(a.expected_milnor == Rational(-6));
  CHECK(a.bundle.rank == 4);
  CHECK(milnor_number(*projectivize(a.bundle)) == Rational(-6));
  auto b = materialize(ex25(5, 1, 1, 1));
  CHECK(b.expected_milnor == Rational(12));
  CHECK(milnor_number(*projectivize(b.bundle)) == Rational(12));
  auto c = materialize(cy3(5));
  CHECK(c.expected_milnor == Rational(12));
  CHECK(milnor_number(*projectivize(c.bundle)) == Rational(12));
  CHECK(materialize(cy3(6)).expected_milnor == Rational(42));

  // zero parts: CP^0 factors
  auto z = materialize(ex24(6, 0, 4));
  CHECK(milnor_number(*projectivize(z.bundle)) == z.expected_milnor);

  CHECK_THROWS_AS(ex24(3, 1, 2), DomainError);
  CHECK_THROWS_AS(ex25(5, 1, 1, 2), DomainError);
  CHECK_THROWS_AS(cy3(4), DomainError);
}

TEST_CASE("closed form equals direct value on small families") {
  for (int m = 3; m <= 7; ++m)
    for (int n = 0; n <= m - 1; ++n)
      for (int a = 0; 2 * a <= n; ++a) {
        auto mat = materialize(ex24(m, a, n - a));
        CAPTURE(mat.bundle.label);
        CHECK(milnor_number(*projectivize(mat.bundle)) == mat.expected_milnor);
      }
}

TEST_CASE("prime power patterns") {
  for (long n = 2; n <= 200; ++n) {
    CAPTURE(n);
    CHECK(prime_power_base(n) == brute_prime_power(n, false));
    CHECK(odd_prime_power_base(n) == brute_prime_power(n, true));
  }
  CHECK(odd_part(12) == 3);
  CHECK(odd_part(-40) == 5);
  CHECK(odd_part(0) == 0);
}

TEST_CASE("gcd scans") {
  CHECK(gcd_scan_odd(5).gcd == 1);
  CHECK(gcd_scan_odd(6).gcd == 7);
  CHECK(gcd_scan_odd(8).gcd == 3);
  CHECK(gcd_scan_even_base(3).gcd == 2);
  CHECK(gcd_scan_even_base(4).gcd == 5);
  CHECK(gcd_scan_even_base(5).gcd == 1);
  for (int m = 5; m <= 12; ++m) {
    auto r = gcd_scan_odd(m);
    CHECK(r.verdict == "pass");
    CHECK(r.expected == brute_prime_power(m + 1, true));
  }
  for (int m = 3; m <= 12; ++m) {
    auto r = gcd_scan_even_base(m);
    CHECK(r.verdict == "pass");
    CHECK(r.expected == brute_prime_power(m + 1, false));
  }
  CHECK_THROWS_AS(gcd_scan_odd(4), DomainError);
}

TEST_CASE("basis certificate") {
  for (int m = 1; m <= 4; ++m) {
    auto e = basis_entry(*projective_space(m));
    CHECK(e.s == Rational(m + 1));
    CHECK(is_generator(e, BasisMode::ZHalf));
    CHECK(is_generator(e, BasisMode::Z) == (m != 3));
  }
  auto g5 = basis_entry(*projectivize(materialize(cy3(5)).bundle));
  CHECK(g5.s == Rational(12));
  CHECK(basis_verdict(g5) == "rational generator only");
  BasisEntry zero{"zero", 3, Rational(0)};
  CHECK(basis_verdict(zero) == "not a generator");
  CHECK_FALSE(is_generator(zero, BasisMode::Q));

  auto combo = basis_entry("cp3-cp1xcp2", {{Rational(1), projective_space(3)},
                                          {Rational(-1), product(projective_space(1), projective_space(2))}});
  CHECK(combo.s == Rational(4));
  CHECK_THROWS_AS(basis_entry("bad", {{Rational(1), projective_space(3)}, {Rational(1), projective_space(2)}}),
                  DomainError);

  auto rep = basis_certificate({basis_entry(*projective_space(3))}, BasisMode::Z);
  CHECK_FALSE(rep.ok());
  CHECK(basis_certificate({basis_entry(*projective_space(3))}, BasisMode::ZHalf).ok());
}

TEST_CASE("suites") {
  auto d = dualization_suite(5);
  require_ok(d);
  bool found = false;
  for (const auto& c : d.items)
    if (c.check == "dual/non-invariant" && c.params.value("bundle", "") == "tangent(cp(3))") {
      found = true;
      CHECK(c.got.find("c1^5") != std::string::npos);
    }
  CHECK(found);
  require_ok(cy3_multiplicativity_suite(6));
  require_ok(milnor_closed_form_suite(5));
  require_ok(chi_y_multiplicativity_suite(5));
  require_ok(kh_psi_relation_check());
  require_ok(degenerate_suite(4));
  require_ok(q_expansion_suite(1, {projective_space(1)}));
  require_ok(hrr_suite(1, {projective_space(1)}));
  CHECK_THROWS_AS(dualization_suite(9), DomainError);
}

TEST_CASE("reports are deterministic across thread counts") {
  setenv("GENUS_FORGE_THREADS", "1", 1);
  auto a = milnor_closed_form_suite(5).to_json().dump();
  setenv("GENUS_FORGE_THREADS", "4", 1);
  auto b = milnor_closed_form_suite(5).to_json().dump();
  unsetenv("GENUS_FORGE_THREADS");
  CHECK(a == b);
  auto j = kh_psi_relation_check().to_json();
  REQUIRE(j.is_array());
  for (const auto& item : j)
    for (const char* key : {"check", "params", "expected", "got", "verdict"}) CHECK(item.contains(key));
}
