// Third-order Hankel, Toeplitz and Hermitian-Toeplitz determinants, in the
// coefficients a2..a5 and in the Caratheodory coefficients p1..p4, plus the
// exact symbolic check that the p-space forms follow from the a-space ones.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "balloon/classmap.hpp"
#include "balloon/multipoly.hpp"
#include "balloon/scalar.hpp"

namespace balloon {

// det [[1, a2, a3], [a2, a3, a4], [a3, a4, a5]]
template <class T>
T hankel3(const CoeffVector<T>& a) {
  const T two = lift<T>(2);
  return two * a.a2 * a.a3 * a.a4 + a.a3 * a.a5 - a.a2 * a.a2 * a.a5 - a.a3 * a.a3 * a.a3 - a.a4 * a.a4;
}

// det [[1, a2, a3], [a2, 1, a2], [a3, a2, 1]]
template <class T>
T toeplitz3(const CoeffVector<T>& a) {
  const T two = lift<T>(2);
  const T a2sq = a.a2 * a.a2;
  return lift<T>(1) + two * a2sq * a.a3 - two * a2sq - a.a3 * a.a3;
}

// det [[1, a2, a3], [conj a2, 1, a2], [conj a3, conj a2, 1]], real-valued.
template <class T>
typename scalar_traits<T>::Real hermitian_toeplitz3(const CoeffVector<T>& a) {
  using R = typename scalar_traits<T>::Real;
  const T cross = a.a2 * a.a2 * conj_of(a.a3);
  const R two(2);
  return R(two * real_of(cross) - two * norm_of(a.a2) - norm_of(a.a3) + R(1));
}

// H_{3,1} as the degree-6 polynomial in p1..p4 over 663552.
template <class T>
T hankel3_in_p(const T& p1, const T& p2, const T& p3, const T& p4) {
  const T p1sq = p1 * p1;
  const T body = lift<T>(163) * p1sq * p1sq * p1sq - lift<T>(732) * p1sq * p1sq * p2 +
                 lift<T>(3552) * p1sq * p1 * p3 + lift<T>(21888) * p1 * p2 * p3 -
                 lift<T>(576) * p1sq * (lift<T>(2) * p2 * p2 + lift<T>(27) * p4) -
                 lift<T>(1152) * (lift<T>(9) * p2 * p2 * p2 + lift<T>(16) * p3 * p3 - lift<T>(18) * p2 * p4);
  return lift<T>(1, 663552) * body;
}

// T_{3,1} as the quartic in p1, p2 over 256.
template <class T>
T toeplitz3_in_p(const T& p1, const T& p2) {
  const T p1sq = p1 * p1;
  const T body = lift<T>(7) * p1sq * p1sq - lift<T>(128) * p1sq - lift<T>(16) * p2 * p2 + lift<T>(24) * p1sq * p2 +
                 lift<T>(256);
  return lift<T>(1, 256) * body;
}

// Same quantity in the regrouped form 256 - 128 p1^2 + 15 p1^4
// + 16 (p1^2 - p2)(p2 - p1^2/2), over 256.
template <class T>
T toeplitz3_in_p_regrouped(const T& p1, const T& p2) {
  const T p1sq = p1 * p1;
  const T body = lift<T>(256) - lift<T>(128) * p1sq + lift<T>(15) * p1sq * p1sq +
                 lift<T>(16) * (p1sq - p2) * (p2 - lift<T>(1, 2) * p1sq);
  return lift<T>(1, 256) * body;
}

// h(p, x) = 256 + 15p^4 - 128p^2 + 4p^2(4-p^2)x - 4(4-p^2)^2 x^2, unscaled.
// Requires p in [0, 2], x in [0, 1]; throws std::domain_error otherwise.
double hermitian_surface(double p, double x);

// Generic form with x replaced by (Re gamma, |gamma|^2) independently:
//   256 + 15p^4 - 128p^2 + 4p^2(4-p^2) re - 4(4-p^2)^2 sq.
template <class T>
T hermitian_surface_formal(const T& p, const T& re_gamma, const T& abs_gamma_sq) {
  const T psq = p * p;
  const T q = lift<T>(4) - psq;
  return lift<T>(256) + lift<T>(15) * psq * psq - lift<T>(128) * psq + lift<T>(4) * psq * q * re_gamma -
         lift<T>(4) * q * q * abs_gamma_sq;
}

// Exact polynomial forms (indeterminates p1..p4).
MultiPoly hankel3_poly();
MultiPoly toeplitz3_poly();

enum class Functional { H31, T31, HT31 };
std::string_view functional_name(Functional f);

// Claimed range of the functional: |value| in [lo, hi] for H31/T31
// (modulus claims), value in [lo, hi] for HT31.
struct ClaimedBound {
  double lo;
  double hi;
  bool on_modulus;
};

ClaimedBound claimed_bound(Functional f);

struct DeterminantReport {
  Functional functional;
  Complex value;
  CoeffVector<Complex> inputs;
  ClaimedBound bound_claimed;
  double tolerance;
  bool within_bound;
  // Distance to the nearest violated/attained edge of the claimed interval;
  // negative when outside.
  double margin;
};

DeterminantReport make_report(Functional f, const CoeffVector<Complex>& a, double tolerance = 1e-9);

struct IdentityCheck {
  std::string name;
  bool passed = false;
  std::size_t terms = 0;  // monomials in the expected polynomial
  std::optional<MonomialDifference> first_difference;
  std::array<std::string, kPolyVars> variable_names{"p1", "p2", "p3", "p4"};
  std::string note;
};

// H31: closed-form a2..a5 substituted into the a-space determinant, compared
// with hankel3_poly(). T31: likewise against both printed forms.
// HT31: a2 = p/2, a3 = 3p^2/16 + gamma(4-p^2)/8 with gamma = u + iv, compared
// with hermitian_surface_formal(p, u, u^2 + v^2)/256.
std::vector<IdentityCheck> verify_pspace_identities();

}  // namespace balloon
