#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "balloon/caratheodory.hpp"
#include "support/generators.hpp"

using namespace balloon;
using Q = Rational;
using G = GaussianRational;

namespace {

bool near(Complex a, Complex b, double tol = 1e-12) { return std::abs(a - b) <= tol; }

// Mix rotated so that p1 is real and nonnegative.
KernelMix normalized(const KernelMix& mix) {
  const Complex p1 = kernel_series(mix, 1)[1];
  return std::abs(p1) == 0.0 ? mix : mix.rotated(-std::arg(p1));
}

}  // namespace

TEST_CASE("params are validated") {
  CHECK_NOTHROW(CaratheodoryParams(2.0, 1.0, Complex(0, 1), -1.0));
  CHECK_THROWS_AS(CaratheodoryParams(-0.1, 0.0, 0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(CaratheodoryParams(2.1, 0.0, 0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(CaratheodoryParams(1.0, Complex(0.8, 0.8), 0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(CaratheodoryParams(1.0, 0.0, 1.01, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(CaratheodoryParams(1.0, 0.0, 0.0, Complex(0, -1.5)), std::invalid_argument);
  const CaratheodoryParams p(1.0, Complex(0.6, 0.8), 0.5, 0.0);
  CHECK(p.x() == doctest::Approx(1.0));
  CHECK(p.y() == 0.5);
}

TEST_CASE("expand_lemma examples") {
  gen::Rng rng(1);
  for (int i = 0; i < 5; ++i) {
    const auto c = expand_lemma(CaratheodoryParams(2.0, 0.6 * rng.complex(0.7), rng.complex(0.7), rng.complex(0.7)));
    CHECK(near(c.p2, 2.0));
    CHECK(near(c.p3, 2.0));
    CHECK(near(c.p4, 2.0));
  }
  const auto e = expand_lemma(CaratheodoryParams(0.0, 1.0, Complex(0.3, -0.2), Complex(-0.5, 0.1)));
  CHECK(near(e.p2, 2.0));
  CHECK(near(e.p3, 0.0));
  CHECK(near(e.p4, 2.0));

  // p1 = 1, gamma = 1/2, eta = 1/3, rho = 0 by hand:
  //   p2 = (1 + 3/2)/2, p3 = (1 + 3 - 3/4 + 3/2)/4, p4 = (1 + 45/8 + 1)/8.
  const auto x = lemma_coefficients(G(1), G(Q(1, 2)), G(Q(1, 3)), G(0));
  CHECK(x.p2 == G(Q(5, 4)));
  CHECK(x.p3 == G(Q(19, 16)));
  CHECK(x.p4 == G(Q(61, 64)));
  const auto f = expand_lemma(CaratheodoryParams(1.0, 0.5, 1.0 / 3.0, 0.0));
  CHECK(near(f.p2, 1.25));
  CHECK(near(f.p3, 19.0 / 16.0));
  CHECK(near(f.p4, 61.0 / 64.0));
}

TEST_CASE("kernel_series examples") {
  const auto one = kernel_series(KernelMix({1.0}, {1.0}), 6);
  for (int n = 1; n <= 6; ++n) CHECK(one[n] == Complex(2.0, 0.0));
  CHECK(one[0] == Complex(1.0, 0.0));

  const auto even = kernel_series(KernelMix({0.5, 0.5}, {1.0, -1.0}), 4);
  CHECK(near(even[1], 0.0));
  CHECK(near(even[2], 2.0));
  CHECK(near(even[3], 0.0));
  CHECK(near(even[4], 2.0));

  const auto exact = kernel_series(ExactKernelMix({Q(1, 3), Q(2, 3)}, {G(1), G(-1)}), 4);
  CHECK(exact[1] == G(Q(-2, 3)));
  CHECK(exact[2] == G(2));
  CHECK(exact[3] == G(Q(-2, 3)));

  CHECK_THROWS_AS(KernelMix({0.5, 0.6}, {1.0, -1.0}), std::invalid_argument);
  CHECK_THROWS_AS(KernelMix({1.0}, {Complex(1.0, 1e-3)}), std::invalid_argument);
  CHECK_THROWS_AS(KernelMix({-0.5, 1.5}, {1.0, -1.0}), std::invalid_argument);
  CHECK_THROWS_AS(ExactKernelMix({Q(1, 2), Q(1, 3)}, {G(1), G(-1)}), std::invalid_argument);
  CHECK_THROWS_AS(ExactKernelMix({Q(1)}, {G(Q(1), Q(1))}), std::invalid_argument);
  CHECK_NOTHROW(ExactKernelMix({Q(1)}, {G(Q(3, 5), Q(4, 5))}));
}

TEST_CASE("kernel mix closed form matches its series") {
  const KernelMix mix({0.2, 0.3, 0.5}, {std::polar(1.0, 0.3), std::polar(1.0, 2.0), std::polar(1.0, -1.1)});
  const auto s = kernel_series(mix, 200);
  const Complex z(0.3, -0.2);
  CHECK(near(evaluate(s, z), mix.evaluate(z), 1e-12));
}

TEST_CASE("schwarz_from_caratheodory examples") {
  using CS = TruncatedSeries<Q>;
  CHECK(schwarz_from_caratheodory(CS::constant(Q(1), 4)) == CS::zero(4));
  const CS half_plane(std::vector<Q>{1, 2, 2, 2, 2});
  CHECK(schwarz_from_caratheodory(half_plane) == CS(std::vector<Q>{0, 1, 0, 0, 0}));
  const CS linear(std::vector<Q>{1, 1, 0, 0, 0});
  CHECK(schwarz_from_caratheodory(linear) == CS(std::vector<Q>{0, Q(1, 2), Q(-1, 4), Q(1, 8), Q(-1, 16)}));
  CHECK_THROWS_AS(schwarz_from_caratheodory(CS(std::vector<Q>{2, 1})), std::domain_error);
}

TEST_CASE("samplers are deterministic and valid") {
  const auto a = sample_params(42);
  const auto b = sample_params(42);
  CHECK(a.p1() == b.p1());
  CHECK(a.gamma() == b.gamma());
  CHECK(a.eta() == b.eta());
  CHECK(a.rho() == b.rho());
  const auto m1 = sample_mix(42, 5);
  const auto m2 = sample_mix(42, 5);
  CHECK(m1.weights() == m2.weights());
  CHECK(m1.points() == m2.points());
  CHECK(m1.weights().size() <= 5);
  CHECK_THROWS_AS(sample_mix(1, 0), std::invalid_argument);

  double sum = 0.0;
  const int n = 10000;
  for (int i = 0; i < n; ++i) {
    const auto p = sample_params(stream_seed(7, static_cast<std::uint64_t>(i)));
    CHECK(p.x() <= 1.0);
    sum += p.p1();
    CHECK_NOTHROW(sample_mix(stream_seed(8, static_cast<std::uint64_t>(i)), 4));
  }
  CHECK(std::abs(sum / n - 1.0) < 0.05);
}

TEST_CASE("property: sampled mixes are reproduced by admissible parameters") {
  for (std::uint64_t i = 0; i < 2000; ++i) {
    const KernelMix mix = normalized(sample_mix(stream_seed(21, i), 5));
    const auto p = kernel_series(mix, 4);
    const double p1 = p[1].real();
    CAPTURE(i);
    REQUIRE(std::abs(p[1].imag()) < 1e-12);
    const LemmaInverse inv = solve_lemma(std::max(0.0, p1), p[2], p[3], p[4]);
    if (inv.gamma) CHECK(std::abs(*inv.gamma) <= 1 + 1e-9);
    if (inv.eta) CHECK(std::abs(*inv.eta) <= 1 + 1e-9);
    // rho divides by (1 - |g|^2)(1 - |eta|^2); mixes with three atoms sit at
    // |eta| = 1 where rho is undetermined, and roundoff there is amplified.
    if (inv.gamma && inv.eta && inv.rho) {
      const double cond = (4 - p1 * p1) * (1 - std::norm(*inv.gamma)) * (1 - std::norm(*inv.eta));
      if (cond > 1e-6) CHECK(std::abs(*inv.rho) <= 1 + 1e-9 + 1e-13 / cond);
    }
    // Forward map of the recovered parameters lands back on the mix.
    if (inv.gamma && inv.eta && inv.rho) {
      const auto c = lemma_coefficients(Complex(p1), *inv.gamma, *inv.eta, *inv.rho);
      CHECK(near(c.p2, p[2], 1e-9));
      CHECK(near(c.p3, p[3], 1e-9));
      CHECK(near(c.p4, p[4], 1e-9));
    }
  }
}

TEST_CASE("solve_lemma leaves degenerate parameters unconstrained") {
  const auto at_two = solve_lemma(2.0, 2.0, 2.0, 2.0);
  CHECK(!at_two.gamma);
  const auto unit_gamma = solve_lemma(0.0, 2.0, 0.0, 2.0);
  REQUIRE(unit_gamma.gamma);
  CHECK(near(*unit_gamma.gamma, 1.0));
  CHECK(!unit_gamma.eta);
  CHECK(!unit_gamma.rho);
}

TEST_CASE("property: Schwarz bound and positive real part near the circle") {
  // The truncated kernel series is a partial Poisson sum; at radius 0.999 it
  // needs r^N / (1 - r) far below the margin, hence the long expansions.
  const double r = 0.999;
  for (std::uint64_t i = 0; i < 12; ++i) {
    const KernelMix mix = sample_mix(stream_seed(31, i), 3);
    const auto p = kernel_series(mix, 32768);
    const auto w = schwarz_from_caratheodory(kernel_series(mix, 3000));
    CAPTURE(i);
    for (int k = 0; k < 360; ++k) {
      const Complex z = std::polar(r, 2 * std::numbers::pi * k / 360);
      CHECK(evaluate(p, z).real() > 0.0);
      CHECK(std::abs(evaluate(w, z)) < 1.0 + 1e-3);
    }
  }
}

TEST_CASE("property: rotation covariance") {
  for (std::uint64_t i = 0; i < 200; ++i) {
    const KernelMix mix = sample_mix(stream_seed(41, i), 5);
    const double theta = 0.37 * static_cast<double>(i % 17) - 3.0;
    const auto a = kernel_series(mix, 8);
    const auto b = kernel_series(mix.rotated(theta), 8);
    for (int n = 1; n <= 8; ++n) CHECK(near(b[n], a[n] * std::polar(1.0, n * theta), 1e-12));
  }
}
