#include "core/rational.hpp"

#include <cassert>
#include <string>

#include "core/error.hpp"

namespace genus_forge {

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) throw DomainError("not a rational number: '" + s + "'");
  if (q.get_den() == 0) throw DomainError("rational with zero denominator: '" + s + "'");
  return Rational(q);
}

bool Rational::is_canonical() const {
  if (sgn(value_.get_den()) <= 0) return false;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return g == 1;
}

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  return Rational(mpq_class(1 / value_));
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(mpq_class(num, den));
}

std::string Rational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw DomainError("division by zero");
  value_ /= other.value_;
  return *this;
}

Rational binomial(long n, long k) {
  if (k < 0) return Rational(0);
  if (n >= 0) {
    if (k > n) return Rational(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r);
  }
  // (-1)^k C(k-n-1, k) for negative upper index
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(k - n - 1), static_cast<unsigned long>(k));
  if (k % 2 != 0) r = -r;
  return Rational(r);
}

Rational factorial(long n) {
  if (n < 0) throw DomainError("factorial of a negative number");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(r);
}

void assert_canonical([[maybe_unused]] const Rational& r) {
#ifndef NDEBUG
  if (!r.is_canonical()) throw InvariantError("non-canonical rational " + r.to_string());
#endif
}

}  // namespace genus_forge
