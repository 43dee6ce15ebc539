// The starlike class attached to B(z) = 1/(1 - log(1 + z)): the B series,
// coefficients of class members, the three extremal functions and the
// balloon-shaped image domain B(D).
#pragma once

#include <complex>
#include <span>
#include <string_view>
#include <vector>

#include "balloon/caratheodory.hpp"
#include "balloon/scalar.hpp"
#include "balloon/series.hpp"

namespace balloon {

// Initial coefficients of f(z) = z + a2 z^2 + a3 z^3 + ...
template <class T>
struct CoeffVector {
  T a2;
  T a3;
  T a4;
  T a5;

  friend bool operator==(const CoeffVector&, const CoeffVector&) = default;
};

template <class T>
CoeffVector<Complex> to_complex(const CoeffVector<T>& a) {
  return {to_complex(a.a2), to_complex(a.a3), to_complex(a.a4), to_complex(a.a5)};
}

// Reads a2..a5 off a series f with f_1 = 1; needs order >= 5.
template <class T>
CoeffVector<T> coeff_vector(const TruncatedSeries<T>& f) {
  return {f[2], f[3], f[4], f[5]};
}

// Exact series of B(z) = 1/(1 - log(1 + z)) through z^order.
TruncatedSeries<Rational> bseries(int order);

// Series of f (f_0 = 0, f_1 = 1) solving z f' = f * B(w(z)) with
// w = (p - 1)/(p + 1). Coefficient recurrence
//   a_n = 1/(n-1) * sum_{m=1}^{n-1} a_m q_{n-m},   B(w) = 1 + sum q_k z^k.
// The result is known through min(order, p.order() + 1).
template <class T>
TruncatedSeries<T> coeffs_from_p(const TruncatedSeries<T>& p, int order, const SeriesTolerance& tol = {}) {
  if (order < 1) throw std::invalid_argument("coeffs_from_p: order must be >= 1");
  const int n = std::min(order, p.order() + 1);
  const auto w = schwarz_from_caratheodory(p.truncated(std::max(0, n - 1)), tol);
  const auto q = compose(series_cast<T>(bseries(w.order())), w, tol);
  std::vector<T> a(static_cast<std::size_t>(n) + 1, T(0));
  a[1] = T(1);
  for (int k = 2; k <= n; ++k) {
    T acc(0);
    for (int m = 1; m < k; ++m) acc += a[static_cast<std::size_t>(m)] * q[k - m];
    a[static_cast<std::size_t>(k)] = acc * lift<T>(1, k - 1);
  }
  return TruncatedSeries<T>(std::move(a));
}

// a2..a5 as polynomials in p1..p4 (closed forms of the recurrence above).
template <class T>
CoeffVector<T> closed_form_coeffs(const T& p1, const T& p2, const T& p3, const T& p4) {
  const T p1sq = p1 * p1;
  return {
      lift<T>(1, 2) * p1,
      lift<T>(1, 16) * (p1sq + lift<T>(4) * p2),
      lift<T>(1, 288) * (p1sq * p1 + lift<T>(12) * p1 * p2 + lift<T>(48) * p3),
      -(lift<T>(1, 4608) * (lift<T>(7) * p1sq * p1sq - lift<T>(24) * p1sq * p2 - lift<T>(96) * p1 * p3 -
                            lift<T>(576) * p4)),
  };
}

enum class Extremal { f1, f2, f3 };

// Power k in B(z^k) for each extremal: 3, 4, 1.
int extremal_power(Extremal kind);
std::string_view extremal_name(Extremal kind);

// f(z) = z exp( int_0^z (B(t^k) - 1)/t dt ), so that z f'/f = B(z^k).
TruncatedSeries<Rational> extremal(Extremal kind, int order);

// |exp(1 - 1/w) - 1|; w is in B(D) iff this is < 1. Throws for w = 0.
double balloon_defect(Complex w);
bool balloon_contains(Complex w);

// Boundary-point margin around the singular parameter theta = pi.
inline constexpr double kBoundaryThetaMargin = 1e-3;

// n points B(e^{i theta}) = 1/(1 - log(1 + e^{i theta})) with theta evenly
// spaced over [-pi + margin, pi - margin]. Requires n >= 8.
std::vector<Complex> balloon_boundary(int n, double margin = kBoundaryThetaMargin);

}  // namespace balloon
