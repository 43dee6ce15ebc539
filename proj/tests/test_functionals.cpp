#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "balloon/functionals.hpp"
#include "support/generators.hpp"

using namespace balloon;
using Q = Rational;
using G = GaussianRational;
using CV = CoeffVector<Q>;

namespace {

const CV kZero{0, 0, 0, 0};
const CV kF1{0, 0, Q(1, 3), 0};
const CV kF2{0, 0, 0, Q(1, 4)};
const CV kF3{1, Q(3, 4), Q(19, 36), Q(101, 288)};

bool rel_close(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("hankel3") {
  CHECK(hankel3(kZero) == 0);
  CHECK(hankel3(kF1) == Q(-1, 9));
  const Q h = hankel3(kF3);
  CHECK(abs(h) < Q(1, 9));
  // 2(1)(3/4)(19/36) + (3/4)(101/288) - 101/288 - 27/64 - 361/1296
  CHECK(h == Q(19, 24) + Q(303, 1152) - Q(101, 288) - Q(27, 64) - Q(361, 1296));
}

TEST_CASE("toeplitz3") {
  CHECK(toeplitz3(kZero) == 1);
  CHECK(toeplitz3(kF2) == 1);
  CHECK(toeplitz3(kF3) == Q(-1, 16));
}

TEST_CASE("hermitian_toeplitz3") {
  CHECK(hermitian_toeplitz3(kZero) == 1);
  CHECK(hermitian_toeplitz3(kF2) == 1);
  CHECK(hermitian_toeplitz3(kF3) == Q(-1, 16));
  const CoeffVector<G> rotated{G::i(), G(Q(3, 4)), G(0), G(0)};
  CHECK(hermitian_toeplitz3(rotated) == Q(-49, 16));
}

TEST_CASE("hankel3_in_p") {
  CHECK(hankel3_in_p(Q(0), Q(0), Q(0), Q(0)) == 0);
  CHECK(hankel3_in_p(Q(2), Q(2), Q(2), Q(2)) == hankel3(closed_form_coeffs(Q(2), Q(2), Q(2), Q(2))));
  CHECK(hankel3_poly().coefficient({6, 0, 0, 0}) == Q(163, 663552));
}

TEST_CASE("toeplitz3_in_p") {
  CHECK(toeplitz3_in_p(Q(0), Q(0)) == 1);
  CHECK(toeplitz3_in_p(Q(2), Q(2)) == Q(-1, 16));
  gen::Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    const Q p1 = rng.rational();
    const Q p2 = rng.rational();
    CHECK(toeplitz3_in_p(p1, p2) == toeplitz3(closed_form_coeffs(p1, p2, Q(0), Q(0))));
    CHECK(toeplitz3_in_p_regrouped(p1, p2) == toeplitz3_in_p(p1, p2));
  }
}

TEST_CASE("hermitian_surface") {
  CHECK(hermitian_surface(0, 0) == 256);
  for (double x : {0.0, 0.25, 0.5, 0.75, 1.0}) CHECK(hermitian_surface(2, x) == -16);
  CHECK(hermitian_surface(0, 1) == 192);
  CHECK_THROWS_AS(hermitian_surface(-0.01, 0.5), std::domain_error);
  CHECK_THROWS_AS(hermitian_surface(1.0, 1.01), std::domain_error);
}

TEST_CASE("verify_pspace_identities") {
  const auto checks = verify_pspace_identities();
  REQUIRE(checks.size() == 4);
  for (const auto& c : checks) {
    CAPTURE(c.name);
    CHECK(c.passed);
    CHECK(!c.first_difference);
  }
  CHECK(checks[0].note.find("163/663552") != std::string::npos);

  // A perturbed expectation is caught and the differing monomial reported.
  const MultiPoly wrong = hankel3_poly() + MultiPoly::monomial(Q(1, 7), {1, 1, 0, 0});
  const auto d = first_difference(wrong, hankel3(closed_form_coeffs(MultiPoly::variable(0), MultiPoly::variable(1),
                                                                     MultiPoly::variable(2), MultiPoly::variable(3))));
  REQUIRE(d);
  CHECK(d->exponents == Exponents{1, 1, 0, 0});
  CHECK(d->expected == Q(1, 7));
  CHECK(d->actual == 0);
}

TEST_CASE("make_report") {
  const auto r = make_report(Functional::H31, to_complex(kF1));
  CHECK(r.within_bound);
  CHECK(std::abs(r.margin) < 1e-15);
  CHECK(std::abs(r.value - Complex(-1.0 / 9.0)) < 1e-15);
  const auto bad = make_report(Functional::HT31, {Complex(0, 1), 0.75, 0.0, 0.0});
  CHECK_FALSE(bad.within_bound);
  CHECK(bad.margin < 0);
  const auto t = make_report(Functional::T31, to_complex(kF3));
  CHECK(t.within_bound);
  CHECK(functional_name(Functional::HT31) == "HT31");
}

TEST_CASE("property: p-space and a-space forms agree") {
  gen::Rng rng(5);
  for (int i = 0; i < 10000; ++i) {
    const Complex p1 = rng.complex(), p2 = rng.complex(), p3 = rng.complex(), p4 = rng.complex();
    const auto a = closed_form_coeffs(p1, p2, p3, p4);
    CHECK(rel_close(hankel3(a), hankel3_in_p(p1, p2, p3, p4), 1e-10));
    CHECK(rel_close(toeplitz3(a), toeplitz3_in_p(p1, p2), 1e-10));
  }
}

TEST_CASE("property: conjugation and rotation") {
  gen::Rng rng(6);
  for (int i = 0; i < 1000; ++i) {
    const CoeffVector<Complex> a{rng.complex(1), rng.complex(1), rng.complex(1), rng.complex(1)};
    const CoeffVector<Complex> c{std::conj(a.a2), std::conj(a.a3), std::conj(a.a4), std::conj(a.a5)};
    CHECK(std::abs(hermitian_toeplitz3(a) - hermitian_toeplitz3(c)) < 1e-12);
    CHECK(std::abs(hankel3(c) - std::conj(hankel3(a))) < 1e-12);
    CHECK(std::abs(toeplitz3(c) - std::conj(toeplitz3(a))) < 1e-12);
    const double theta = rng.real(-4, 4);
    const CoeffVector<Complex> r{a.a2 * std::polar(1.0, theta), a.a3 * std::polar(1.0, 2 * theta),
                                 a.a4 * std::polar(1.0, 3 * theta), a.a5 * std::polar(1.0, 4 * theta)};
    CHECK(std::abs(std::abs(hankel3(r)) - std::abs(hankel3(a))) < 1e-12);
  }
}

TEST_CASE("property: hermitian surface stays in [-16, 256]") {
  double hi = -1e300, lo = 1e300;
  for (int i = 0; i <= 2000; ++i) {
    const double p = i == 2000 ? 2.0 : 2.0 * i / 2000;
    for (int j = 0; j <= 1000; ++j) {
      const double h = hermitian_surface(p, j == 1000 ? 1.0 : j / 1000.0);
      hi = std::max(hi, h);
      lo = std::min(lo, h);
    }
  }
  CHECK(hi == 256);
  CHECK(lo == -16);
}
