#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "balloon/classmap.hpp"
#include "support/generators.hpp"

using namespace balloon;
using Q = Rational;
using G = GaussianRational;
using S = TruncatedSeries<Q>;

namespace {

// 1 + 2 sum_{n >= 1} z^{kn}: the half-plane kernel at z^k, so w = z^k.
S kernel_at_power(int k, int order) {
  std::vector<Q> c(static_cast<std::size_t>(order) + 1, Q(0));
  c[0] = 1;
  for (int n = k; n <= order; n += k) c[static_cast<std::size_t>(n)] = 2;
  return S(std::move(c));
}

}  // namespace

TEST_CASE("bseries") {
  CHECK(bseries(0) == S(std::vector<Q>{1}));
  CHECK(bseries(4) == S(std::vector<Q>{1, 1, Q(1, 2), Q(1, 3), Q(1, 6)}));
  CHECK(bseries(1)[1] > 0);
  CHECK_THROWS(bseries(-1));
  // (1 - log(1+z)) B = 1 with log(1+z) = sum (-1)^{k+1} z^k / k.
  std::vector<Q> l(13, Q(0));
  l[0] = 1;
  for (int k = 1; k <= 12; ++k) l[static_cast<std::size_t>(k)] = Q(k % 2 ? -1 : 1, k);
  CHECK(mul(S(l), bseries(12)) == S::constant(Q(1), 12));
  // Not all coefficients are positive.
  CHECK(bseries(12)[12] == Q(-10819, 9979200));
}

TEST_CASE("coeffs_from_p examples") {
  const S f = coeffs_from_p(S::constant(Q(1), 6), 6);
  CHECK(f == S(std::vector<Q>{0, 1, 0, 0, 0, 0, 0}));

  const S f3 = coeffs_from_p(kernel_at_power(1, 5), 5);
  CHECK(coeff_vector(f3) == CoeffVector<Q>{1, Q(3, 4), Q(19, 36), Q(101, 288)});

  // The result is known one order beyond p.
  CHECK(coeffs_from_p(kernel_at_power(1, 3), 8).order() == 4);
  CHECK_THROWS_AS(coeffs_from_p(kernel_at_power(1, 3), 0), std::invalid_argument);
}

TEST_CASE("closed_form_coeffs examples") {
  CHECK(closed_form_coeffs(Q(2), Q(2), Q(2), Q(2)) == CoeffVector<Q>{1, Q(3, 4), Q(19, 36), Q(101, 288)});
  CHECK(closed_form_coeffs(Q(0), Q(0), Q(0), Q(0)) == CoeffVector<Q>{0, 0, 0, 0});
  CHECK(closed_form_coeffs(Q(0), Q(2), Q(0), Q(2)) == CoeffVector<Q>{0, Q(1, 2), 0, Q(1, 4)});
}

TEST_CASE("extremal functions") {
  const S f1 = extremal(Extremal::f1, 10);
  for (int k : {2, 3, 5, 6, 8, 9}) CHECK(f1[k] == 0);
  CHECK(f1[4] == Q(1, 3));
  CHECK(f1[7] == Q(5, 36));
  // exp(z^3/3 + z^6/12 + z^9/27) at z^9: 1/27 + 1/36 + 1/162.
  CHECK(f1[10] == Q(23, 324));

  const S f2 = extremal(Extremal::f2, 9);
  for (int k : {2, 3, 4, 6, 7, 8}) CHECK(f2[k] == 0);
  CHECK(f2[5] == Q(1, 4));
  // exp(z^4/4 + z^8/16) at z^8: 1/16 + 1/32.
  CHECK(f2[9] == Q(3, 32));

  const S f3 = extremal(Extremal::f3, 5);
  CHECK(f3 == S(std::vector<Q>{0, 1, 1, Q(3, 4), Q(19, 36), Q(101, 288)}));

  CHECK(extremal(Extremal::f1, 1) == S(std::vector<Q>{0, 1}));
  CHECK_THROWS(extremal(Extremal::f2, 0));
  CHECK(extremal_power(Extremal::f1) == 3);
  CHECK(extremal_power(Extremal::f2) == 4);
  CHECK(extremal_power(Extremal::f3) == 1);
  CHECK(extremal_name(Extremal::f2) == "f2");
}

TEST_CASE("extremals agree with the subordination recurrence for w = z^k") {
  for (Extremal kind : {Extremal::f1, Extremal::f2, Extremal::f3}) {
    const int k = extremal_power(kind);
    CAPTURE(k);
    CHECK(extremal(kind, 14) == coeffs_from_p(kernel_at_power(k, 13), 14));
  }
}

TEST_CASE("balloon domain") {
  CHECK(balloon_contains(1.0));
  CHECK(balloon_defect(1.0) == 0.0);
  const double b = 1.0 / (1.0 - std::log(1.999));
  CHECK(balloon_contains(b));
  CHECK_FALSE(balloon_contains(-0.5));
  CHECK(balloon_defect(-0.5) == doctest::Approx(std::exp(3.0) - 1.0));
  CHECK_THROWS_AS(balloon_contains(0.0), std::domain_error);

  const auto pts = balloon_boundary(720);
  CHECK(pts.size() == 720);
  for (Complex w : pts) CHECK(std::abs(balloon_defect(w) - 1.0) < 1e-9);
  CHECK_THROWS_AS(balloon_boundary(7), std::invalid_argument);
}

TEST_CASE("property: closed forms agree with the recurrence") {
  for (std::uint64_t i = 0; i < 500; ++i) {
    const KernelMix mix = sample_mix(stream_seed(3, i), 5);
    const auto p = kernel_series(mix, 4);
    const auto a = coeff_vector(coeffs_from_p(p, 5));
    const auto c = closed_form_coeffs(p[1], p[2], p[3], p[4]);
    CAPTURE(i);
    CHECK(std::abs(a.a2 - c.a2) < 1e-10);
    CHECK(std::abs(a.a3 - c.a3) < 1e-10);
    CHECK(std::abs(a.a4 - c.a4) < 1e-10);
    CHECK(std::abs(a.a5 - c.a5) < 1e-10);
    CHECK(std::abs(a.a2) <= 2.0);
  }
  gen::Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    const ExactKernelMix mix = gen::quarter_turn_mix(rng);
    const auto p = kernel_series(mix, 4);
    CHECK(coeff_vector(coeffs_from_p(p, 5)) == closed_form_coeffs(p[1], p[2], p[3], p[4]));
  }
}

TEST_CASE("property: extremals are subordinate near the circle") {
  for (Extremal kind : {Extremal::f1, Extremal::f2, Extremal::f3}) {
    // z f'/f as an exact series: (f/z)' z + (f/z), divided by f/z.
    // B(z^k) converges slowly near the circle, so the expansion is long.
    const S g = divide_by_z(extremal(kind, 241));
    const S q = mul(add(multiply_by_z(differentiate(g)), g), reciprocal(g));
    REQUIRE(q.order() == 240);
    const auto qf = series_cast<Complex>(q);
    CAPTURE(extremal_name(kind));
    for (int k = 0; k < 360; ++k) {
      const Complex z = std::polar(0.99, 2 * std::numbers::pi * k / 360);
      CHECK(balloon_defect(evaluate(qf, z)) < 1.0 + 1e-2);
    }
  }
}
