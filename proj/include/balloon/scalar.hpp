// Coefficient domains shared by the series, functional and polynomial code.
//
// Three fields are used:
//   Rational          exact, arbitrary precision (GMP via boost.multiprecision)
//   GaussianRational  exact complex numbers a + bi with rational a, b
//   Complex           binary64 pairs
//
// Nothing converts between domains implicitly; use lift<T>() for constants
// and the explicit to_complex() overloads for values.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <type_traits>

#include <boost/multiprecision/gmp.hpp>

namespace balloon {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;
using Complex = std::complex<double>;

// mpq_rational(num, den) reads den as unsigned; keep the sign on num.
inline Rational ratio(long num, long den) {
  if (den == 0) throw std::domain_error("ratio: zero denominator");
  return den < 0 ? Rational(-num, -den) : Rational(num, den);
}

inline std::string to_string(const Rational& q) { return q.str(); }

class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }

  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    return *this;
  }
  // Throws std::domain_error on division by zero.
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& g);

 private:
  Rational re_{0};
  Rational im_{0};
};

// Per-domain operations the generic algorithms need. `Real` is the type of
// real parts and squared moduli.
template <class T>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  using Real = Rational;
  static constexpr bool exact = true;
  static Rational lift(const Rational& q) { return q; }
  static Rational conj(const Rational& v) { return v; }
  static Rational real(const Rational& v) { return v; }
  static Rational norm(const Rational& v) { return v * v; }
  static bool is_zero(const Rational& v, double /*tol*/) { return v == 0; }
  static Complex to_complex(const Rational& v) { return {v.convert_to<double>(), 0.0}; }
};

template <>
struct scalar_traits<GaussianRational> {
  using Real = Rational;
  static constexpr bool exact = true;
  static GaussianRational lift(const Rational& q) { return {q}; }
  static GaussianRational conj(const GaussianRational& v) { return v.conj(); }
  static Rational real(const GaussianRational& v) { return v.real(); }
  static Rational norm(const GaussianRational& v) { return v.norm(); }
  static bool is_zero(const GaussianRational& v, double /*tol*/) { return v.real() == 0 && v.imag() == 0; }
  static Complex to_complex(const GaussianRational& v) {
    return {v.real().convert_to<double>(), v.imag().convert_to<double>()};
  }
};

template <>
struct scalar_traits<Complex> {
  using Real = double;
  static constexpr bool exact = false;
  static Complex lift(const Rational& q) { return {q.convert_to<double>(), 0.0}; }
  static Complex conj(const Complex& v) { return std::conj(v); }
  static double real(const Complex& v) { return v.real(); }
  static double norm(const Complex& v) { return std::norm(v); }
  static bool is_zero(const Complex& v, double tol) { return std::abs(v) <= tol; }
  static Complex to_complex(const Complex& v) { return v; }
};

template <>
struct scalar_traits<double> {
  using Real = double;
  static constexpr bool exact = false;
  static double lift(const Rational& q) { return q.convert_to<double>(); }
  static double conj(double v) { return v; }
  static double real(double v) { return v; }
  static double norm(double v) { return v * v; }
  static bool is_zero(double v, double tol) { return std::abs(v) <= tol; }
  static Complex to_complex(double v) { return {v, 0.0}; }
};

template <class T>
T lift(const Rational& q) {
  return scalar_traits<T>::lift(q);
}

template <class T>
T lift(long num, long den = 1) {
  // Floating domains skip the GMP round trip; num/den is correctly rounded.
  if constexpr (std::is_same_v<T, double> || std::is_same_v<T, Complex>) {
    return T(static_cast<double>(num) / static_cast<double>(den));
  } else {
    return scalar_traits<T>::lift(ratio(num, den));
  }
}

template <class T>
T conj_of(const T& v) {
  return scalar_traits<T>::conj(v);
}

template <class T>
auto real_of(const T& v) {
  return scalar_traits<T>::real(v);
}

template <class T>
auto norm_of(const T& v) {
  return scalar_traits<T>::norm(v);
}

template <class T>
Complex to_complex(const T& v) {
  return scalar_traits<T>::to_complex(v);
}

}  // namespace balloon
