#pragma once

// Truncated univariate power series c_0 + c_1 x + ... + c_N x^N over a
// commutative Q-algebra R. N is the (inclusive) truncation order; kExact
// marks series that are known exactly (polynomials).

#include <algorithm>
#include <array>
#include <concepts>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "core/error.hpp"
#include "core/rational.hpp"

namespace genus_forge {

inline constexpr int kExact = std::numeric_limits<int>::max() / 4;

template <class R>
class Series {
 public:
  using Coeff = R;

  Series() : order_(kExact) {}
  Series(const R& c) : coeffs_{c}, order_(kExact) { trim(); }  // NOLINT(implicit)
  template <class T>
    requires(std::constructible_from<R, const T&> && !std::same_as<T, R> && !std::same_as<T, Series>)
  explicit Series(const T& c) : Series(R(c)) {}
  Series(std::vector<R> coeffs, int order) : coeffs_(std::move(coeffs)), order_(order) {
    if (order_ < 0) throw DomainError("negative truncation order");
    if (static_cast<long>(coeffs_.size()) > static_cast<long>(order_) + 1) coeffs_.resize(order_ + 1);
    trim();
  }

  static Series variable(int order = kExact) { return monomial(1, R(1), order); }
  static Series monomial(int k, const R& c, int order = kExact) {
    if (k > order) return Series({}, order);
    std::vector<R> v(k + 1, R(0));
    v[k] = c;
    return Series(std::move(v), order);
  }

  int order() const noexcept { return order_; }
  bool is_exact() const noexcept { return order_ == kExact; }
  // Highest index that is stored (may sit below the order).
  int stored_degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  R coeff(int n) const {
    if (n < 0) return R(0);
    if (n > order_) throw DomainError("coefficient x^" + std::to_string(n) + " lies beyond truncation order " + std::to_string(order_));
    return n < static_cast<int>(coeffs_.size()) ? coeffs_[n] : R(0);
  }
  R operator[](int n) const { return coeff(n); }

  // Index of the first nonzero coefficient; -1 for a series that is zero to its order.
  int valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!is_zero(coeffs_[i])) return static_cast<int>(i);
    return -1;
  }
  bool is_zero_series() const { return coeffs_.empty(); }

  Series truncate(int order) const {
    if (order > order_) throw DomainError("cannot raise truncation order from " + std::to_string(order_) + " to " + std::to_string(order));
    return Series(coeffs_, order);
  }
  // Lowers the order to at most `order`.
  Series at_most(int order) const { return order >= order_ ? *this : Series(coeffs_, order); }

  Series& operator+=(const Series& o) {
    order_ = std::min(order_, o.order_);
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), R(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    clip();
    return *this;
  }
  Series& operator-=(const Series& o) {
    order_ = std::min(order_, o.order_);
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), R(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    clip();
    return *this;
  }
  Series& operator*=(const Series& o) { return *this = *this * o; }

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator-(const Series& a) {
    Series r = a;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  friend Series operator*(const Series& a, const Series& b) {
    // a series known to start at x^v keeps the other factor's precision shifted by v
    auto start = [](const Series& s) -> long {
      if (s.coeffs_.empty()) return s.order_ == kExact ? kExact : static_cast<long>(s.order_) + 1;
      return s.valuation();
    };
    const int order = static_cast<int>(std::min<long>(
        {static_cast<long>(a.order_) + start(b), static_cast<long>(b.order_) + start(a), kExact}));
    const long na = a.coeffs_.size(), nb = b.coeffs_.size();
    long top = na + nb - 2;
    if (top > order) top = order;
    std::vector<R> r(top < 0 ? 0 : top + 1, R(0));
    for (long i = 0; i < na && i <= top; ++i) {
      if (is_zero(a.coeffs_[i])) continue;
      for (long j = 0; j < nb && i + j <= top; ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Series(std::move(r), order);
  }
  // Equal as truncated elements: coefficients agree up to the smaller order.
  friend bool operator==(const Series& a, const Series& b) { return a.agrees_with(b); }
  // Equality of coefficients up to the smaller of the two orders.
  bool agrees_with(const Series& o, int up_to = kExact) const {
    int n = std::min({order_, o.order_, up_to});
    int top = std::min<long>(n, static_cast<long>(std::max(coeffs_.size(), o.coeffs_.size())));
    for (int i = 0; i <= top; ++i)
      if (!(get(i) == o.get(i))) return false;
    return true;
  }

  Series scaled(const R& s) const {
    Series r = *this;
    for (auto& c : r.coeffs_) c = c * s;
    r.trim();
    return r;
  }
  template <class F>
  auto map_coefficients(F&& f) const -> Series<std::decay_t<decltype(f(std::declval<const R&>()))>> {
    using D = std::decay_t<decltype(f(std::declval<const R&>()))>;
    std::vector<D> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(f(c));
    return Series<D>(std::move(v), order_);
  }

  Series derive() const {
    std::vector<R> v;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v.push_back(coeffs_[i] * R(Rational(static_cast<long>(i))));
    return Series(std::move(v), order_ == kExact ? kExact : std::max(order_ - 1, 0));
  }
  // Antiderivative with zero constant term.
  Series integrate() const {
    std::vector<R> v(coeffs_.size() + 1, R(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i + 1] = coeffs_[i] * R(Rational(1, static_cast<long>(i + 1)));
    return Series(std::move(v), order_ == kExact ? kExact : order_ + 1);
  }
  // Multiplies by x^k.
  Series shift_up(int k) const {
    std::vector<R> v(k, R(0));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Series(std::move(v), order_ == kExact ? kExact : order_ + k);
  }
  // Divides by x^k; the low coefficients must vanish.
  Series shift_down(int k) const {
    for (int i = 0; i < k && i < static_cast<int>(coeffs_.size()); ++i)
      if (!is_zero(coeffs_[i])) throw DomainError("series is not divisible by x^" + std::to_string(k));
    if (order_ != kExact && order_ < k) throw DomainError("not enough precision to divide by x^" + std::to_string(k));
    std::vector<R> v;
    if (static_cast<int>(coeffs_.size()) > k) v.assign(coeffs_.begin() + k, coeffs_.end());
    return Series(std::move(v), order_ == kExact ? kExact : order_ - k);
  }

  Series inverse() const {
    require_finite("inverse");
    const R c0 = get(0);
    if (is_zero(c0)) throw DomainError("inverse of a series with zero constant term");
    const R i0 = inv(c0);
    std::vector<R> b(order_ + 1, R(0));
    b[0] = i0;
    for (int n = 1; n <= order_; ++n) {
      R s(0);
      for (int k = 1; k <= n && k < static_cast<int>(coeffs_.size()); ++k) s += coeffs_[k] * b[n - k];
      b[n] = -(s * i0);
    }
    return Series(std::move(b), order_);
  }

  Series exp() const {
    if (!is_zero(get(0))) throw DomainError("exp needs a series with zero constant term");
    if (coeffs_.empty()) return Series(std::vector<R>{R(1)}, order_);
    require_finite("exp");
    // b' = a' b
    std::vector<R> b(order_ + 1, R(0));
    b[0] = R(1);
    for (int n = 1; n <= order_; ++n) {
      R s(0);
      for (int k = 1; k <= n && k < static_cast<int>(coeffs_.size()); ++k)
        if (!is_zero(coeffs_[k])) s += coeffs_[k] * b[n - k] * R(Rational(k));
      b[n] = s * R(Rational(1, n));
    }
    return Series(std::move(b), order_);
  }

  Series log() const {
    if (!(get(0) == R(1))) throw DomainError("log needs a series with constant term 1");
    if (coeffs_.size() <= 1) return Series({}, order_);
    require_finite("log");
    // n b_n = n a_n - sum_{k=1}^{n-1} k b_k a_{n-k}
    std::vector<R> b(order_ + 1, R(0));
    for (int n = 1; n <= order_; ++n) {
      R s = get(n) * R(Rational(n));
      for (int k = 1; k < n; ++k) {
        const R& a = get_ref(n - k);
        if (!is_zero(a)) s -= b[k] * a * R(Rational(k));
      }
      b[n] = s * R(Rational(1, n));
    }
    return Series(std::move(b), order_);
  }

  Series sqrt() const {
    if (!(get(0) == R(1))) throw DomainError("sqrt needs a series with constant term 1");
    if (coeffs_.size() <= 1) return Series(std::vector<R>{R(1)}, order_);
    require_finite("sqrt");
    // 2 b_n = a_n - sum_{k=1}^{n-1} b_k b_{n-k}
    std::vector<R> b(order_ + 1, R(0));
    b[0] = R(1);
    for (int n = 1; n <= order_; ++n) {
      R s = get(n);
      for (int k = 1; k < n; ++k) s -= b[k] * b[n - k];
      b[n] = s * R(Rational(1, 2));
    }
    return Series(std::move(b), order_);
  }

  Series pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    Series r(R(1)), base = *this;
    r.order_ = order_;
    while (k > 0) {
      if (k & 1) r = r * base;
      k >>= 1;
      if (k) base = base * base;
    }
    return r;
  }

  // this(g(x)); g must have zero constant term.
  Series compose(const Series& g) const {
    if (!is_zero(g.get(0))) throw DomainError("composition needs an inner series with zero constant term");
    // conservative: f(g) is known up to min(N_f, N_g) since g has no constant term
    const int order = std::min(order_, g.order_);
    Series r({}, order);
    for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i) {
      r = (r * g).at_most(order);
      r += Series(std::vector<R>{coeffs_[i]}, order);
    }
    return r.at_most(order);
  }

  // f with this(f(x)) = x, by Lagrange inversion: f_n = (1/n) [y^{n-1}] (y/g)^n.
  Series reversion() const {
    if (!is_zero(get(0)) || !(get(1) == R(1))) throw DomainError("reversion needs a series of the form y + O(y^2)");
    require_finite("reversion");
    const int n_max = order_;
    Series quotient = shift_down(1).inverse();  // y / g
    std::vector<R> f(n_max + 1, R(0));
    Series power = Series(std::vector<R>{R(1)}, n_max - 1 < 0 ? 0 : n_max - 1);
    const Series base = quotient.at_most(std::max(n_max - 1, 0));
    for (int n = 1; n <= n_max; ++n) {
      power = power * base;
      f[n] = power.coeff(n - 1) * R(Rational(1, n));
    }
    return Series(std::move(f), n_max);
  }

  const std::vector<R>& coefficients() const noexcept { return coeffs_; }

  // "[c_0, c_1, ..., c_N]"
  std::string to_string() const {
    std::string out = "[";
    const int top = order_ == kExact ? stored_degree() : order_;
    for (int i = 0; i <= top; ++i) {
      if (i) out += ", ";
      using genus_forge::to_string;
      out += to_string(get(i));
    }
    return out + "]";
  }

 private:
  R get(int n) const { return n >= 0 && n < static_cast<int>(coeffs_.size()) ? coeffs_[n] : R(0); }
  const R& get_ref(int n) const {
    static const R zero(0);
    return n >= 0 && n < static_cast<int>(coeffs_.size()) ? coeffs_[n] : zero;
  }
  void require_finite(const char* what) const {
    if (order_ == kExact) throw DomainError(std::string(what) + " needs a finite truncation order");
  }
  void clip() {
    if (order_ != kExact && static_cast<long>(coeffs_.size()) > static_cast<long>(order_) + 1) coeffs_.resize(order_ + 1);
    trim();
  }
  void trim() {
    while (!coeffs_.empty() && is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<R> coeffs_;
  int order_;
};

template <class R>
bool is_zero(const Series<R>& s) {
  return s.is_zero_series();
}
template <class R>
std::string to_string(const Series<R>& s) {
  return s.to_string();
}
template <class R>
Series<R> inv(const Series<R>& s) {
  return s.inverse();
}

// u = 1 + O(x) with (x u' - u)^2 = u^4 + q1 u^3 x + q2 u^2 x^2 + q3 u x^3 + q4 x^4
// modulo x^{N+1}.
template <class R>
Series<R> solve_h_ode(const std::array<R, 4>& q, int order) {
  if (order < 0) throw DomainError("negative truncation order");
  std::vector<R> a(1, R(1));
  for (int n = 1; n <= order; ++n) {
    a.push_back(R(0));
    Series<R> u(a, n);
    Series<R> x = Series<R>::variable(n);
    Series<R> d = x * u.derive().at_most(n) - u;
    Series<R> u2 = u * u;
    Series<R> rhs = u2 * u2;
    Series<R> xp = x;
    Series<R> up = u2 * u;
    // q_i u^{4-i} x^i
    std::array<Series<R>, 4> upow = {up, u2, u, Series<R>(std::vector<R>{R(1)}, n)};
    for (int i = 0; i < 4; ++i) {
      rhs += (upow[i] * xp).scaled(q[i]);
      xp = xp * x;
    }
    Series<R> resid = d * d - rhs;
    a[n] = resid.at_most(n).coeff(n) * R(Rational(1, 2 * n + 2));
  }
  return Series<R>(std::move(a), order);
}

// Krichever-Hoehn characteristic series: v = x r solves the same equation
// with p in place of q, and Q = exp(-int (v - 1)/x).
template <class R>
Series<R> solve_r_ode_to_char(const std::array<R, 4>& p, int order) {
  Series<R> v = solve_h_ode(p, order + 1);
  Series<R> w = (v - Series<R>(R(1))).shift_down(1).integrate();
  return (-w).exp().at_most(order);
}

}  // namespace genus_forge
