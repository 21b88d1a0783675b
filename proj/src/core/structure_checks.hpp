#pragma once

#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "core/genus.hpp"
#include "core/manifold.hpp"
#include "json.hpp"

namespace genus_forge {

enum class FamilyKind { Ex24, Ex25, Cy3 };

// ex24: O(1) on CP^{i1} x CP^{i2} plus C^{m-n-1}; ex25: three factors plus
// C^{m-n-2}; cy3: L + C^{m-3} over the elliptic cube. Parts may be 0
// (a CP^0 factor, whose O(1) is trivial).
struct ExampleFamily {
  FamilyKind kind = FamilyKind::Ex24;
  int m = 0;
  std::vector<int> parts;

  int base_dim() const;
  std::string label() const;
  nlohmann::json params() const;
};

ExampleFamily ex24(int m, int i1, int i2);
ExampleFamily ex25(int m, int i1, int i2, int i3);
ExampleFamily cy3(int m);

struct Materialized {
  Bundle bundle;
  Rational expected_milnor;
};

// Displayed closed formula for s_m of the family.
Rational family_formula(const ExampleFamily& fam);
// Throws InvariantError when the closed form disagrees with the displayed formula.
Materialized materialize(const ExampleFamily& fam);

// One line of a JSON report.
struct CheckItem {
  std::string check;
  nlohmann::json params;
  std::string expected;
  std::string got;
  std::string verdict;  // pass | fail | inconclusive | info
};

struct Report {
  std::vector<CheckItem> items;

  bool ok() const;
  std::size_t failures() const;
  nlohmann::json to_json() const;
  void append(const Report& o) { items.insert(items.end(), o.items.begin(), o.items.end()); }
};

// Thread count from GENUS_FORGE_THREADS, else hardware concurrency.
int worker_count();

// Runs fn(0..n-1) on worker threads; results keep index order.
template <class T>
std::vector<T> parallel_map(std::size_t n, const std::function<T(std::size_t)>& fn);

// -- gcd scans

struct Witness {
  ExampleFamily family;
  Rational value;
};

struct GcdReport {
  int m = 0;
  std::string scan;  // odd | even
  std::vector<Witness> witnesses;
  long gcd = 0;
  long expected = 0;
  std::string verdict;
  std::string note;

  CheckItem item() const;
};

// p when m+1 = p^s with p an odd prime, else 1.
long odd_prime_power_base(long n);
// p when n = p^s with p prime, else 1.
long prime_power_base(long n);
long odd_part(long v);

GcdReport gcd_scan_odd(int m);
GcdReport gcd_scan_even_base(int m);
Report gcd_suite(const std::string& scan, int from, int to);

// -- basis certification

enum class BasisMode { Z, ZHalf, Q };

struct BasisEntry {
  std::string label;
  int dim = 0;
  Rational s;  // Thom-Milnor number s_dim
};

BasisEntry basis_entry(const Manifold& m);
BasisEntry basis_entry(const std::string& label, const std::vector<std::pair<Rational, ManifoldPtr>>& combination);

bool is_generator(const BasisEntry& e, BasisMode mode);
std::string basis_verdict(const BasisEntry& e);  // strongest mode that holds, or "not a generator"
Report basis_certificate(const std::vector<BasisEntry>& seq, BasisMode mode);

// -- catalog suites

// All catalog bundles with dim P(E) <= max_m: ex24 and ex25 with positive
// parts, cy3, T CP^n and T* CP^n for n = 2, 3.
struct CatalogEntry {
  std::string label;
  nlohmann::json params;
  Bundle bundle;
  std::optional<ExampleFamily> family;
};
std::vector<CatalogEntry> catalog(int max_m);

Report dualization_suite(int max_m);
Report cy3_multiplicativity_suite(int max_m);
Report milnor_closed_form_suite(int max_m);
Report chi_y_multiplicativity_suite(int max_m);
Report kh_psi_relation_check();
Report degenerate_suite(int max_n);
Report q_expansion_suite(int q_max, const std::vector<ManifoldPtr>& spaces);
Report hrr_suite(int q_max, const std::vector<ManifoldPtr>& spaces);

// ---------------------------------------------------------------------------

namespace detail {
void run_indexed(std::size_t n, int workers, const std::function<void(std::size_t)>& body);
}

template <class T>
std::vector<T> parallel_map(std::size_t n, const std::function<T(std::size_t)>& fn) {
  std::vector<std::optional<T>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  auto body = [&](std::size_t i) {
    try {
      slots[i].emplace(fn(i));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  detail::run_indexed(n, worker_count(), body);
  std::vector<T> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

}  // namespace genus_forge
