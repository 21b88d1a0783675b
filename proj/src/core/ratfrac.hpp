#pragma once

#include <string>
#include <utility>
#include <vector>

#include "core/poly.hpp"
#include "core/poly_gcd.hpp"

namespace genus_forge {

// A rational function stored as poly * prod atom_i^{e_i}, with integer
// exponents and atoms non-constant, integral-primitive, positive leading
// coefficient. Atoms with negative exponent never divide poly. The reduced
// quotient num/den is produced on demand (output, num(), den()).
class RatFrac {
 public:
  using Factor = std::pair<MultiPoly, int>;

  RatFrac() = default;
  RatFrac(const MultiPoly& p) : poly_(p) {}        // NOLINT
  RatFrac(const Rational& r) : poly_(r) {}         // NOLINT
  RatFrac(int r) : RatFrac(Rational(r)) {}         // NOLINT
  RatFrac(const MultiPoly& num, const MultiPoly& den);

  // Reduced numerator and denominator; den is integral-primitive with positive leading coefficient.
  MultiPoly num() const { return canonical().first; }
  MultiPoly den() const { return canonical().second; }
  std::pair<MultiPoly, MultiPoly> canonical() const;

  PolyRingPtr ring() const;
  const MultiPoly& poly_part() const noexcept { return poly_; }
  const std::vector<Factor>& factors() const noexcept { return atoms_; }

  bool is_zero() const noexcept { return poly_.is_zero(); }
  bool is_polynomial() const { return canonical().second.is_constant(); }
  RatFrac inverse() const;

  // Substitutes polynomial or rational-function images for the variables.
  RatFrac substitute(const std::vector<RatFrac>& images) const;

  RatFrac& operator+=(const RatFrac& o);
  RatFrac& operator-=(const RatFrac& o) { return *this += -o; }
  RatFrac& operator*=(const RatFrac& o);
  RatFrac& operator/=(const RatFrac& o) { return *this *= o.inverse(); }

  friend RatFrac operator+(RatFrac a, const RatFrac& b) { return a += b; }
  friend RatFrac operator-(RatFrac a, const RatFrac& b) { return a -= b; }
  friend RatFrac operator*(RatFrac a, const RatFrac& b) { return a *= b; }
  friend RatFrac operator/(RatFrac a, const RatFrac& b) { return a /= b; }
  friend RatFrac operator-(const RatFrac& a) {
    RatFrac r = a;
    r.poly_ = -r.poly_;
    return r;
  }
  friend bool operator==(const RatFrac& a, const RatFrac& b) { return (a - b).is_zero(); }

  std::string to_string() const;

 private:
  // Multiplies by p^e for a polynomial p, splitting off known atoms first.
  void multiply_factor(MultiPoly p, int e);
  void bump(const MultiPoly& atom, int e);
  void cancel();
  void drop_if_zero();

  MultiPoly poly_;
  std::vector<Factor> atoms_;
};

inline bool is_zero(const RatFrac& r) { return r.is_zero(); }
inline std::string to_string(const RatFrac& r) { return r.to_string(); }
inline RatFrac inv(const RatFrac& r) { return r.inverse(); }

}  // namespace genus_forge
