#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace peakon {

/// Polynomial in the spectral variable z with coefficients stored constant
/// term first. Only exact trailing zeros are trimmed automatically.
template <class T>
class BasicPolynomial {
 public:
  using value_type = T;

  BasicPolynomial() = default;
  BasicPolynomial(std::initializer_list<T> coeffs) : c_(coeffs) { trim_zeros(); }
  explicit BasicPolynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim_zeros(); }
  /// Constant polynomial.
  explicit BasicPolynomial(T constant) : c_{constant} { trim_zeros(); }

  static BasicPolynomial monomial(std::size_t degree, T coeff = T(1)) {
    std::vector<T> c(degree + 1, T(0));
    c[degree] = coeff;
    return BasicPolynomial(std::move(c));
  }

  const std::vector<T>& coefficients() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  T coeff(std::size_t k) const noexcept { return k < c_.size() ? c_[k] : T(0); }
  T leading() const noexcept { return c_.empty() ? T(0) : c_.back(); }

  template <class U>
  auto operator()(const U& z) const {
    using R = decltype(T() * z);
    R acc = R(0);
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * z + c_[k];
    return acc;
  }

  /// sum_k |c_k| |z|^k, the natural scale for judging |p(z)|.
  template <class U>
  auto abs_eval(const U& z) const {
    using std::abs;
    auto r = abs(z);
    decltype(r) acc = 0;
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * r + abs(c_[k]);
    return acc;
  }

  /// max_k |c_k| |z|^k.
  template <class U>
  auto max_term(const U& z) const {
    using std::abs;
    auto r = abs(z);
    decltype(r) best = 0, power = 1;
    for (const auto& c : c_) {
      best = std::max<decltype(r)>(best, abs(c) * power);
      power *= r;
    }
    return best;
  }

  auto max_abs_coeff() const {
    using std::abs;
    decltype(abs(T())) m = 0;
    for (const auto& c : c_) m = std::max(m, abs(c));
    return m;
  }

  BasicPolynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = T(static_cast<double>(k)) * c_[k];
    return BasicPolynomial(std::move(d));
  }

  /// Drops leading coefficients with |c| <= rel_tol * max|c|.
  BasicPolynomial trimmed(double rel_tol) const {
    using std::abs;
    BasicPolynomial out = *this;
    const auto limit = rel_tol * max_abs_coeff();
    while (!out.c_.empty() && abs(out.c_.back()) <= limit) out.c_.pop_back();
    return out;
  }

  /// Removes the leading coefficient unconditionally (used after a known cancellation).
  BasicPolynomial without_leading() const {
    BasicPolynomial out = *this;
    if (!out.c_.empty()) out.c_.pop_back();
    out.trim_zeros();
    return out;
  }

  /// Multiplication by z.
  BasicPolynomial shifted() const {
    if (c_.empty()) return {};
    std::vector<T> c(c_.size() + 1, T(0));
    std::copy(c_.begin(), c_.end(), c.begin() + 1);
    return BasicPolynomial(std::move(c));
  }

  template <class U>
  BasicPolynomial<U> cast() const {
    std::vector<U> c;
    c.reserve(c_.size());
    for (const auto& v : c_) c.push_back(static_cast<U>(v));
    return BasicPolynomial<U>(std::move(c));
  }

  BasicPolynomial& operator+=(const BasicPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim_zeros();
    return *this;
  }
  BasicPolynomial& operator-=(const BasicPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim_zeros();
    return *this;
  }
  BasicPolynomial& operator*=(const T& s) {
    for (auto& c : c_) c *= s;
    trim_zeros();
    return *this;
  }
  BasicPolynomial& operator/=(const T& s) {
    for (auto& c : c_) c /= s;
    return *this;
  }

  friend BasicPolynomial operator+(BasicPolynomial a, const BasicPolynomial& b) { return a += b; }
  friend BasicPolynomial operator-(BasicPolynomial a, const BasicPolynomial& b) { return a -= b; }
  friend BasicPolynomial operator-(BasicPolynomial a) { return a *= T(-1); }
  friend BasicPolynomial operator*(BasicPolynomial a, const T& s) { return a *= s; }
  friend BasicPolynomial operator*(const T& s, BasicPolynomial a) { return a *= s; }
  friend BasicPolynomial operator/(BasicPolynomial a, const T& s) { return a /= s; }

  friend BasicPolynomial operator*(const BasicPolynomial& a, const BasicPolynomial& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return BasicPolynomial(std::move(c));
  }

  friend bool operator==(const BasicPolynomial&, const BasicPolynomial&) = default;

 private:
  void trim_zeros() {
    while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
  }

  std::vector<T> c_;
};

using Polynomial = BasicPolynomial<double>;

}  // namespace peakon
