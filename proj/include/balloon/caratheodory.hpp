// Functions with positive real part, p(z) = 1 + p1 z + p2 z^2 + ...
//
// Two ways in:
//   * the (p1, gamma, eta, rho) parametrization of p2, p3, p4, with p1 real
//     in [0, 2] (rotation normalizes any member to that form);
//   * convex combinations of half-plane kernels (1 + zeta z)/(1 - zeta z),
//     which are genuine members for every choice of weights and unimodular
//     points.
#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "balloon/scalar.hpp"
#include "balloon/series.hpp"

namespace balloon {

class CaratheodoryParams {
 public:
  // Throws std::invalid_argument unless 0 <= p1 <= 2 and gamma, eta, rho lie
  // in the closed unit disk.
  CaratheodoryParams(double p1, Complex gamma, Complex eta, Complex rho);

  double p1() const { return p1_; }
  Complex gamma() const { return gamma_; }
  Complex eta() const { return eta_; }
  Complex rho() const { return rho_; }

  // |gamma| and |eta|, the x and y of the Hankel case analysis.
  double x() const { return std::abs(gamma_); }
  double y() const { return std::abs(eta_); }

 private:
  double p1_;
  Complex gamma_;
  Complex eta_;
  Complex rho_;
};

template <class C>
struct LemmaCoefficients {
  C p2;
  C p3;
  C p4;
};

// p2, p3, p4 in terms of (p1, gamma, eta, rho), for any complex-like field
// (Complex, GaussianRational, ComplexPoly). p1 is expected to be real.
template <class C>
LemmaCoefficients<C> lemma_coefficients(const C& p1, const C& gamma, const C& eta, const C& rho) {
  const C q = lift<C>(4) - p1 * p1;                 // 4 - p1^2
  const C g2 = C(norm_of(gamma));                    // |gamma|^2
  const C e2 = C(norm_of(eta));                      // |eta|^2
  const C one = lift<C>(1);
  const C p1sq = p1 * p1;

  C p2 = lift<C>(1, 2) * (p1sq + gamma * q);
  C p3 = lift<C>(1, 4) * (p1sq * p1 + lift<C>(2) * p1 * q * gamma - p1 * q * gamma * gamma +
                          lift<C>(2) * q * (one - g2) * eta);
  const C inner = p1 * (gamma - one) * eta + conj_of(gamma) * eta * eta - (one - e2) * rho;
  C p4 = lift<C>(1, 8) *
         (p1sq * p1sq + q * gamma * (p1sq * (gamma * gamma - lift<C>(3) * gamma + lift<C>(3)) + lift<C>(4) * gamma) -
          lift<C>(4) * q * (one - g2) * inner);
  return {std::move(p2), std::move(p3), std::move(p4)};
}

LemmaCoefficients<Complex> expand_lemma(const CaratheodoryParams& params);

// Inverse of the parametrization: given p1 >= 0 real and p2..p4, recover
// gamma, then eta, then rho. A parameter is left empty ("unconstrained")
// when the factor multiplying it vanishes: 4 - p1^2 for gamma,
// (4 - p1^2)(1 - |gamma|^2) for eta, and additionally 1 - |eta|^2 for rho.
struct LemmaInverse {
  std::optional<Complex> gamma;
  std::optional<Complex> eta;
  std::optional<Complex> rho;
};

LemmaInverse solve_lemma(double p1, Complex p2, Complex p3, Complex p4, double degenerate_tol = 1e-9);

// Sum_k weights[k] * (1 + points[k] z)/(1 - points[k] z).
class KernelMix {
 public:
  // Weights nonnegative summing to 1 and |points[k]| = 1, both within 1e-15
  // (scaled by the number of atoms for the sum).
  KernelMix(std::vector<double> weights, std::vector<Complex> points);

  const std::vector<double>& weights() const { return weights_; }
  const std::vector<Complex>& points() const { return points_; }

  // zeta_k -> e^{i theta} zeta_k
  KernelMix rotated(double theta) const;

  // Exact closed-form value p(z), |z| < 1.
  Complex evaluate(Complex z) const;

 private:
  std::vector<double> weights_;
  std::vector<Complex> points_;
};

// Exact-domain kernel mix: rational weights summing to exactly 1 and
// Gaussian-rational points with |zeta|^2 = 1 exactly (e.g. ±1, ±i, (3+4i)/5).
class ExactKernelMix {
 public:
  ExactKernelMix(std::vector<Rational> weights, std::vector<GaussianRational> points);

  const std::vector<Rational>& weights() const { return weights_; }
  const std::vector<GaussianRational>& points() const { return points_; }

  KernelMix to_float() const;

 private:
  std::vector<Rational> weights_;
  std::vector<GaussianRational> points_;
};

// p_0 = 1, p_n = 2 sum_k lambda_k zeta_k^n.
TruncatedSeries<Complex> kernel_series(const KernelMix& mix, int order);
TruncatedSeries<GaussianRational> kernel_series(const ExactKernelMix& mix, int order);

// w = (p - 1)/(p + 1); zero constant term.
template <class T>
TruncatedSeries<T> schwarz_from_caratheodory(const TruncatedSeries<T>& p, const SeriesTolerance& tol = {}) {
  const T one(1);
  detail::require_zero_constant(T(p[0] - one), tol, "schwarz_from_caratheodory: p must have constant term 1");
  const auto unit = TruncatedSeries<T>::constant(one, p.order());
  auto w = mul(sub(p, unit), reciprocal(add(p, unit), tol));
  std::vector<T> c(w.coeffs().begin(), w.coeffs().end());
  c[0] = T(0);
  return TruncatedSeries<T>(std::move(c));
}

// Deterministic samplers. p1 uniform on [0, 2]; gamma, eta, rho uniform on
// the closed disk by rejection from [-1, 1]^2.
CaratheodoryParams sample_params(std::uint64_t seed);

// 1..max_atoms atoms, weights a normalized uniform draw, points uniform on
// the circle.
KernelMix sample_mix(std::uint64_t seed, int max_atoms);

// Decorrelated per-draw seed for the i-th draw of a stream.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace balloon
