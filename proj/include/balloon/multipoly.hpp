// Sparse exact polynomials in four commuting indeterminates.
//
// The indeterminates are positional (v0..v3). The determinant code reads
// them as p1..p4; the case analysis reuses v0..v2 for (p, x, y), and the
// Hermitian check for (p, Re gamma, Im gamma).
#pragma once

#include <array>
#include <complex>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "balloon/scalar.hpp"

namespace balloon {

inline constexpr int kPolyVars = 4;
using Exponents = std::array<int, kPolyVars>;

class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(long c) : MultiPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  MultiPoly(const Rational& c);                  // NOLINT(google-explicit-constructor)

  static MultiPoly variable(int index);
  static MultiPoly monomial(const Rational& c, const Exponents& e);

  // Zero for absent monomials.
  Rational coefficient(const Exponents& e) const;
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;
  int degree_in(int var) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }
  friend MultiPoly operator-(const MultiPoly& a);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  MultiPoly pow(int n) const;
  MultiPoly derivative(int var) const;
  // Replaces indeterminate `var` by `value` and expands.
  MultiPoly substitute(int var, const MultiPoly& value) const;

  double evaluate(std::span<const double> point) const;
  Complex evaluate(std::span<const Complex> point) const;

  // Ascending coefficients in v0 of a polynomial that involves only v0.
  std::vector<double> univariate_coefficients() const;

  // names defaults to {"p1","p2","p3","p4"}.
  std::string to_string(const std::array<std::string, kPolyVars>& names = {"p1", "p2", "p3", "p4"}) const;
  static std::string monomial_string(const Exponents& e,
                                     const std::array<std::string, kPolyVars>& names = {"p1", "p2", "p3", "p4"});

 private:
  void add_term(const Exponents& e, const Rational& c);

  std::map<Exponents, Rational> terms_;
};

struct MonomialDifference {
  Exponents exponents{};
  Rational expected;
  Rational actual;
};

// First monomial (in exponent order) where the two polynomials disagree.
std::optional<MonomialDifference> first_difference(const MultiPoly& expected, const MultiPoly& actual);

// Complex-valued polynomial expression re + i*im with real polynomial parts;
// lets the Hermitian functional run symbolically.
struct ComplexPoly {
  MultiPoly re;
  MultiPoly im;

  ComplexPoly() = default;
  ComplexPoly(long c) : re(c) {}                     // NOLINT(google-explicit-constructor)
  ComplexPoly(MultiPoly r) : re(std::move(r)) {}     // NOLINT(google-explicit-constructor)
  ComplexPoly(MultiPoly r, MultiPoly i) : re(std::move(r)), im(std::move(i)) {}

  friend ComplexPoly operator+(const ComplexPoly& a, const ComplexPoly& b) { return {a.re + b.re, a.im + b.im}; }
  friend ComplexPoly operator-(const ComplexPoly& a, const ComplexPoly& b) { return {a.re - b.re, a.im - b.im}; }
  friend ComplexPoly operator-(const ComplexPoly& a) { return {-a.re, -a.im}; }
  friend ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  ComplexPoly& operator+=(const ComplexPoly& o) { return *this = *this + o; }
  ComplexPoly& operator-=(const ComplexPoly& o) { return *this = *this - o; }
  ComplexPoly& operator*=(const ComplexPoly& o) { return *this = *this * o; }
  friend bool operator==(const ComplexPoly& a, const ComplexPoly& b) { return a.re == b.re && a.im == b.im; }
};

template <>
struct scalar_traits<MultiPoly> {
  using Real = MultiPoly;
  static constexpr bool exact = true;
  static MultiPoly lift(const Rational& q) { return {q}; }
  static MultiPoly conj(const MultiPoly& v) { return v; }
  static MultiPoly real(const MultiPoly& v) { return v; }
  static MultiPoly norm(const MultiPoly& v) { return v * v; }
  static bool is_zero(const MultiPoly& v, double /*tol*/) { return v.is_zero(); }
};

template <>
struct scalar_traits<ComplexPoly> {
  using Real = MultiPoly;
  static constexpr bool exact = true;
  static ComplexPoly lift(const Rational& q) { return {MultiPoly(q)}; }
  static ComplexPoly conj(const ComplexPoly& v) { return {v.re, -v.im}; }
  static MultiPoly real(const ComplexPoly& v) { return v.re; }
  static MultiPoly norm(const ComplexPoly& v) { return v.re * v.re + v.im * v.im; }
  static bool is_zero(const ComplexPoly& v, double /*tol*/) { return v.re.is_zero() && v.im.is_zero(); }
};

}  // namespace balloon
