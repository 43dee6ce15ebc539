// Truncated formal power series over one of the coefficient domains in
// scalar.hpp.
//
// A series of order N stores c_0..c_N; coefficients of degree > N are
// unknown, not zero. Binary operations return the minimum of the operand
// orders. Operations that shift degrees document their output order.
//
// Mixing domains is a compile error: TruncatedSeries<Rational> and
// TruncatedSeries<Complex> are unrelated types. Conversion is explicit via
// series_cast<U>().
#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "balloon/scalar.hpp"

namespace balloon {

// Float-domain guards. Ignored by the exact domains, which test for exact
// zero / one.
struct SeriesTolerance {
  // |c_0| must exceed this for reciprocal().
  double reciprocal_floor = 1e-300;
  // Constant terms required to be 0 (compose inner, exp0, divide_by_z) or 1
  // (log1) may deviate by at most this much; they are then forced exact.
  double constant_term = 1e-12;
};

inline constexpr int kDefaultWorkingOrder = 12;

template <class T>
class TruncatedSeries {
 public:
  using value_type = T;

  // Order = coeffs.size() - 1.
  explicit TruncatedSeries(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("TruncatedSeries: needs at least one coefficient");
  }

  static TruncatedSeries zero(int order) { return constant(T(0), order); }

  static TruncatedSeries constant(T c, int order) {
    check_order(order);
    std::vector<T> v(static_cast<std::size_t>(order) + 1, T(0));
    v[0] = std::move(c);
    return TruncatedSeries(std::move(v));
  }

  // c * z^power, known through `order`.
  static TruncatedSeries monomial(T c, int power, int order) {
    check_order(order);
    if (power < 0) throw std::invalid_argument("TruncatedSeries: negative power");
    std::vector<T> v(static_cast<std::size_t>(order) + 1, T(0));
    if (power <= order) v[static_cast<std::size_t>(power)] = std::move(c);
    return TruncatedSeries(std::move(v));
  }

  static TruncatedSeries variable(int order) { return monomial(T(1), 1, order); }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const T> coeffs() const { return coeffs_; }

  const T& operator[](int k) const {
    if (k < 0 || k > order()) throw std::out_of_range("TruncatedSeries: coefficient index beyond order");
    return coeffs_[static_cast<std::size_t>(k)];
  }

  TruncatedSeries truncated(int new_order) const {
    check_order(new_order);
    if (new_order > order()) throw std::invalid_argument("TruncatedSeries: cannot raise truncation order");
    return TruncatedSeries(std::vector<T>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.coeffs_ == b.coeffs_; }

 private:
  static void check_order(int order) {
    if (order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
  }

  std::vector<T> coeffs_;
};

namespace detail {

inline int common_order(int a, int b) { return std::min(a, b); }

template <class T>
void require_zero_constant(const T& c, const SeriesTolerance& tol, const char* what) {
  if (!scalar_traits<T>::is_zero(c, tol.constant_term)) throw std::domain_error(std::string(what));
}

template <class T>
T inverse_of_int(long n) {
  return lift<T>(Rational(1, n));
}

}  // namespace detail

template <class U, class T>
TruncatedSeries<U> series_cast(const TruncatedSeries<T>& a) {
  std::vector<U> v;
  v.reserve(a.coeffs().size());
  for (const T& c : a.coeffs()) {
    if constexpr (std::is_same_v<U, Complex>) {
      v.push_back(to_complex(c));
    } else {
      v.push_back(U(c));
    }
  }
  return TruncatedSeries<U>(std::move(v));
}

template <class T>
TruncatedSeries<T> add(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  const int n = detail::common_order(a.order(), b.order());
  std::vector<T> v(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) v[static_cast<std::size_t>(k)] = a[k] + b[k];
  return TruncatedSeries<T>(std::move(v));
}

template <class T>
TruncatedSeries<T> negate(const TruncatedSeries<T>& a) {
  std::vector<T> v(a.coeffs().begin(), a.coeffs().end());
  for (T& c : v) c = -c;
  return TruncatedSeries<T>(std::move(v));
}

template <class T>
TruncatedSeries<T> sub(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  const int n = detail::common_order(a.order(), b.order());
  std::vector<T> v(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) v[static_cast<std::size_t>(k)] = a[k] - b[k];
  return TruncatedSeries<T>(std::move(v));
}

template <class T>
TruncatedSeries<T> scale(const TruncatedSeries<T>& a, const T& s) {
  std::vector<T> v(a.coeffs().begin(), a.coeffs().end());
  for (T& c : v) c = c * s;
  return TruncatedSeries<T>(std::move(v));
}

// Cauchy product truncated at the common order.
template <class T>
TruncatedSeries<T> mul(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  const int n = detail::common_order(a.order(), b.order());
  std::vector<T> v(static_cast<std::size_t>(n) + 1, T(0));
  for (int i = 0; i <= n; ++i) {
    if (a[i] == T(0)) continue;
    for (int j = 0; i + j <= n; ++j) v[static_cast<std::size_t>(i + j)] += a[i] * b[j];
  }
  return TruncatedSeries<T>(std::move(v));
}

// b with a*b = 1 through order(a).
template <class T>
TruncatedSeries<T> reciprocal(const TruncatedSeries<T>& a, const SeriesTolerance& tol = {}) {
  if constexpr (scalar_traits<T>::exact) {
    if (a[0] == T(0)) throw std::domain_error("reciprocal: zero constant term");
  } else {
    if (std::abs(a[0]) <= tol.reciprocal_floor) throw std::domain_error("reciprocal: constant term below floor");
  }
  const int n = a.order();
  const T inv0 = T(1) / a[0];
  std::vector<T> b(static_cast<std::size_t>(n) + 1, T(0));
  b[0] = inv0;
  for (int k = 1; k <= n; ++k) {
    T acc(0);
    for (int j = 1; j <= k; ++j) acc += a[j] * b[static_cast<std::size_t>(k - j)];
    b[static_cast<std::size_t>(k)] = -(acc * inv0);
  }
  return TruncatedSeries<T>(std::move(b));
}

// outer(inner(z)) by Horner's scheme, truncated at the common order. The
// inner constant term must vanish.
template <class T>
TruncatedSeries<T> compose(const TruncatedSeries<T>& outer, const TruncatedSeries<T>& inner,
                           const SeriesTolerance& tol = {}) {
  detail::require_zero_constant(inner[0], tol, "compose: inner series has a nonzero constant term");
  const int n = detail::common_order(outer.order(), inner.order());
  std::vector<T> w(inner.coeffs().begin(), inner.coeffs().begin() + n + 1);
  w[0] = T(0);
  const TruncatedSeries<T> u(std::move(w));
  TruncatedSeries<T> acc = TruncatedSeries<T>::constant(outer[n], n);
  for (int k = n - 1; k >= 0; --k) {
    acc = mul(acc, u);
    std::vector<T> v(acc.coeffs().begin(), acc.coeffs().end());
    v[0] += outer[k];
    acc = TruncatedSeries<T>(std::move(v));
  }
  return acc;
}

// Order rises by one; the constant of integration is zero.
template <class T>
TruncatedSeries<T> integrate(const TruncatedSeries<T>& a) {
  const int n = a.order();
  std::vector<T> v(static_cast<std::size_t>(n) + 2, T(0));
  for (int k = 0; k <= n; ++k) v[static_cast<std::size_t>(k + 1)] = a[k] * detail::inverse_of_int<T>(k + 1);
  return TruncatedSeries<T>(std::move(v));
}

// Order drops by one; requires order >= 1.
template <class T>
TruncatedSeries<T> differentiate(const TruncatedSeries<T>& a) {
  if (a.order() < 1) throw std::domain_error("differentiate: order-0 series has no known derivative terms");
  const int n = a.order();
  std::vector<T> v(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) v[static_cast<std::size_t>(k - 1)] = a[k] * lift<T>(k);
  return TruncatedSeries<T>(std::move(v));
}

// a / z for a with vanishing constant term; order drops by one.
template <class T>
TruncatedSeries<T> divide_by_z(const TruncatedSeries<T>& a, const SeriesTolerance& tol = {}) {
  detail::require_zero_constant(a[0], tol, "divide_by_z: nonzero constant term");
  if (a.order() < 1) throw std::domain_error("divide_by_z: order-0 series");
  return TruncatedSeries<T>(std::vector<T>(a.coeffs().begin() + 1, a.coeffs().end()));
}

// z * a; order rises by one.
template <class T>
TruncatedSeries<T> multiply_by_z(const TruncatedSeries<T>& a) {
  std::vector<T> v;
  v.reserve(a.coeffs().size() + 1);
  v.push_back(T(0));
  v.insert(v.end(), a.coeffs().begin(), a.coeffs().end());
  return TruncatedSeries<T>(std::move(v));
}

// log(a) for c_0 = 1, from L' a = a':
//   n L_n = n a_n - sum_{k=1}^{n-1} k L_k a_{n-k}.
template <class T>
TruncatedSeries<T> log1(const TruncatedSeries<T>& a, const SeriesTolerance& tol = {}) {
  detail::require_zero_constant(T(a[0] - T(1)), tol, "log1: constant term must be 1");
  const int n = a.order();
  std::vector<T> l(static_cast<std::size_t>(n) + 1, T(0));
  for (int m = 1; m <= n; ++m) {
    T acc = a[m] * lift<T>(m);
    for (int k = 1; k < m; ++k) acc -= l[static_cast<std::size_t>(k)] * lift<T>(k) * a[m - k];
    l[static_cast<std::size_t>(m)] = acc * detail::inverse_of_int<T>(m);
  }
  return TruncatedSeries<T>(std::move(l));
}

// exp(a) for c_0 = 0, from E' = a' E:
//   n E_n = sum_{k=1}^{n} k a_k E_{n-k}.
template <class T>
TruncatedSeries<T> exp0(const TruncatedSeries<T>& a, const SeriesTolerance& tol = {}) {
  detail::require_zero_constant(a[0], tol, "exp0: constant term must be 0");
  const int n = a.order();
  std::vector<T> e(static_cast<std::size_t>(n) + 1, T(0));
  e[0] = T(1);
  for (int m = 1; m <= n; ++m) {
    T acc(0);
    for (int k = 1; k <= m; ++k) acc += a[k] * lift<T>(k) * e[static_cast<std::size_t>(m - k)];
    e[static_cast<std::size_t>(m)] = acc * detail::inverse_of_int<T>(m);
  }
  return TruncatedSeries<T>(std::move(e));
}

// Horner evaluation of the known terms at a complex point.
template <class T>
Complex evaluate(const TruncatedSeries<T>& a, Complex z) {
  Complex acc{0.0, 0.0};
  for (int k = a.order(); k >= 0; --k) acc = acc * z + to_complex(a[k]);
  return acc;
}

template <class T>
TruncatedSeries<T> operator+(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  return add(a, b);
}
template <class T>
TruncatedSeries<T> operator-(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  return sub(a, b);
}
template <class T>
TruncatedSeries<T> operator-(const TruncatedSeries<T>& a) {
  return negate(a);
}
template <class T>
TruncatedSeries<T> operator*(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  return mul(a, b);
}

}  // namespace balloon
