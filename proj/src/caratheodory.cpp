#include "balloon/caratheodory.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace balloon {

namespace {

constexpr double kUnitTol = 1e-15;

bool in_closed_disk(Complex z) { return std::norm(z) <= 1.0 + 2 * kUnitTol; }

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double uniform01(std::mt19937_64& rng) { return std::generate_canonical<double, 53>(rng); }

Complex disk_point(std::mt19937_64& rng) {
  for (;;) {
    const double a = 2.0 * uniform01(rng) - 1.0;
    const double b = 2.0 * uniform01(rng) - 1.0;
    if (a * a + b * b <= 1.0) return {a, b};
  }
}

}  // namespace

CaratheodoryParams::CaratheodoryParams(double p1, Complex gamma, Complex eta, Complex rho)
    : p1_(p1), gamma_(gamma), eta_(eta), rho_(rho) {
  if (!(p1 >= 0.0 && p1 <= 2.0)) throw std::invalid_argument("CaratheodoryParams: p1 must lie in [0, 2]");
  if (!in_closed_disk(gamma) || !in_closed_disk(eta) || !in_closed_disk(rho)) {
    throw std::invalid_argument("CaratheodoryParams: gamma, eta, rho must lie in the closed unit disk");
  }
}

LemmaCoefficients<Complex> expand_lemma(const CaratheodoryParams& params) {
  return lemma_coefficients<Complex>(Complex(params.p1(), 0.0), params.gamma(), params.eta(), params.rho());
}

LemmaInverse solve_lemma(double p1, Complex p2, Complex p3, Complex p4, double degenerate_tol) {
  LemmaInverse out;
  const double q = 4.0 - p1 * p1;
  if (std::abs(q) <= degenerate_tol) return out;
  const Complex gamma = (2.0 * p2 - p1 * p1) / q;
  out.gamma = gamma;

  const double one_minus_g2 = 1.0 - std::norm(gamma);
  const double eta_factor = 2.0 * q * one_minus_g2;
  if (std::abs(one_minus_g2) <= degenerate_tol) return out;
  const Complex eta = (4.0 * p3 - p1 * p1 * p1 - 2.0 * p1 * q * gamma + p1 * q * gamma * gamma) / eta_factor;
  out.eta = eta;

  const double one_minus_e2 = 1.0 - std::norm(eta);
  if (std::abs(one_minus_e2) <= degenerate_tol) return out;
  const double p1sq = p1 * p1;
  const Complex known = p1sq * p1sq + q * gamma * (p1sq * (gamma * gamma - 3.0 * gamma + 3.0) + 4.0 * gamma);
  // 8 p4 = known - 4 q (1-|g|^2) (p1 (g-1) eta + conj(g) eta^2 - (1-|eta|^2) rho)
  const Complex bracket = (known - 8.0 * p4) / (4.0 * q * one_minus_g2);
  out.rho = (p1 * (gamma - 1.0) * eta + std::conj(gamma) * eta * eta - bracket) / one_minus_e2;
  return out;
}

KernelMix::KernelMix(std::vector<double> weights, std::vector<Complex> points)
    : weights_(std::move(weights)), points_(std::move(points)) {
  if (weights_.empty() || weights_.size() != points_.size()) {
    throw std::invalid_argument("KernelMix: need matching, nonempty weights and points");
  }
  double sum = 0.0;
  for (double w : weights_) {
    if (!(w >= 0.0)) throw std::invalid_argument("KernelMix: weights must be nonnegative");
    sum += w;
  }
  if (std::abs(sum - 1.0) > kUnitTol * static_cast<double>(weights_.size() + 1)) {
    throw std::invalid_argument("KernelMix: weights must sum to 1");
  }
  for (Complex z : points_) {
    if (std::abs(std::abs(z) - 1.0) > kUnitTol * 2) throw std::invalid_argument("KernelMix: points must be unimodular");
  }
}

KernelMix KernelMix::rotated(double theta) const {
  const Complex r = std::polar(1.0, theta);
  std::vector<Complex> pts;
  pts.reserve(points_.size());
  for (Complex z : points_) {
    const Complex w = z * r;
    pts.push_back(w / std::abs(w));
  }
  return {weights_, std::move(pts)};
}

Complex KernelMix::evaluate(Complex z) const {
  Complex acc{0.0, 0.0};
  for (std::size_t k = 0; k < weights_.size(); ++k) {
    acc += weights_[k] * (1.0 + points_[k] * z) / (1.0 - points_[k] * z);
  }
  return acc;
}

ExactKernelMix::ExactKernelMix(std::vector<Rational> weights, std::vector<GaussianRational> points)
    : weights_(std::move(weights)), points_(std::move(points)) {
  if (weights_.empty() || weights_.size() != points_.size()) {
    throw std::invalid_argument("ExactKernelMix: need matching, nonempty weights and points");
  }
  Rational sum(0);
  for (const Rational& w : weights_) {
    if (w < 0) throw std::invalid_argument("ExactKernelMix: weights must be nonnegative");
    sum += w;
  }
  if (sum != 1) throw std::invalid_argument("ExactKernelMix: weights must sum to exactly 1");
  for (const GaussianRational& z : points_) {
    if (z.norm() != 1) throw std::invalid_argument("ExactKernelMix: points must satisfy |zeta|^2 = 1 exactly");
  }
}

KernelMix ExactKernelMix::to_float() const {
  std::vector<double> w;
  std::vector<Complex> z;
  for (const Rational& q : weights_) w.push_back(q.convert_to<double>());
  for (const GaussianRational& g : points_) z.push_back(to_complex(g));
  // Renormalize the rounded weights so the float mix validates.
  double sum = 0.0;
  for (double v : w) sum += v;
  for (double& v : w) v /= sum;
  return {std::move(w), std::move(z)};
}

TruncatedSeries<Complex> kernel_series(const KernelMix& mix, int order) {
  std::vector<Complex> c(static_cast<std::size_t>(order) + 1, Complex{0.0, 0.0});
  c[0] = 1.0;
  for (std::size_t k = 0; k < mix.weights().size(); ++k) {
    Complex power{1.0, 0.0};
    const Complex zeta = mix.points()[k];
    for (int n = 1; n <= order; ++n) {
      power *= zeta;
      c[static_cast<std::size_t>(n)] += 2.0 * mix.weights()[k] * power;
    }
  }
  return TruncatedSeries<Complex>(std::move(c));
}

TruncatedSeries<GaussianRational> kernel_series(const ExactKernelMix& mix, int order) {
  std::vector<GaussianRational> c(static_cast<std::size_t>(order) + 1, GaussianRational(0));
  c[0] = GaussianRational(1);
  for (std::size_t k = 0; k < mix.weights().size(); ++k) {
    GaussianRational power(1);
    const GaussianRational& zeta = mix.points()[k];
    const GaussianRational w = GaussianRational(Rational(2) * mix.weights()[k]);
    for (int n = 1; n <= order; ++n) {
      power *= zeta;
      c[static_cast<std::size_t>(n)] += w * power;
    }
  }
  return TruncatedSeries<GaussianRational>(std::move(c));
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ (index * 0xd1342543de82ef95ULL + 1));
}

CaratheodoryParams sample_params(std::uint64_t seed) {
  std::mt19937_64 rng(splitmix64(seed));
  const double p1 = 2.0 * uniform01(rng);
  const Complex gamma = disk_point(rng);
  const Complex eta = disk_point(rng);
  const Complex rho = disk_point(rng);
  return {p1, gamma, eta, rho};
}

KernelMix sample_mix(std::uint64_t seed, int max_atoms) {
  if (max_atoms < 1) throw std::invalid_argument("sample_mix: max_atoms must be >= 1");
  std::mt19937_64 rng(splitmix64(seed));
  std::uniform_int_distribution<int> atoms_dist(1, max_atoms);
  const int atoms = atoms_dist(rng);
  std::vector<double> w(static_cast<std::size_t>(atoms));
  std::vector<Complex> z(static_cast<std::size_t>(atoms));
  double sum = 0.0;
  for (int k = 0; k < atoms; ++k) {
    // Keep weights strictly positive so normalization is well defined.
    w[static_cast<std::size_t>(k)] = uniform01(rng) + 1e-12;
    sum += w[static_cast<std::size_t>(k)];
    z[static_cast<std::size_t>(k)] = std::polar(1.0, 2.0 * std::numbers::pi * uniform01(rng));
  }
  for (double& v : w) v /= sum;
  return {std::move(w), std::move(z)};
}

}  // namespace balloon
