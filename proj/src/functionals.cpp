#include "balloon/functionals.hpp"

#include <cmath>
#include <stdexcept>

#include "balloon/caratheodory.hpp"

namespace balloon {

double hermitian_surface(double p, double x) {
  if (!(p >= 0.0 && p <= 2.0) || !(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error("hermitian_surface: requires p in [0, 2] and x in [0, 1]");
  }
  return hermitian_surface_formal<double>(p, x, x * x);
}

MultiPoly hankel3_poly() {
  return hankel3_in_p(MultiPoly::variable(0), MultiPoly::variable(1), MultiPoly::variable(2), MultiPoly::variable(3));
}

MultiPoly toeplitz3_poly() { return toeplitz3_in_p(MultiPoly::variable(0), MultiPoly::variable(1)); }

std::string_view functional_name(Functional f) {
  switch (f) {
    case Functional::H31:
      return "H31";
    case Functional::T31:
      return "T31";
    case Functional::HT31:
      return "HT31";
  }
  return "?";
}

ClaimedBound claimed_bound(Functional f) {
  switch (f) {
    case Functional::H31:
      return {0.0, 1.0 / 9.0, true};
    case Functional::T31:
      return {0.0, 1.0, true};
    case Functional::HT31:
      return {-1.0 / 16.0, 1.0, false};
  }
  throw std::invalid_argument("claimed_bound: unknown functional");
}

DeterminantReport make_report(Functional f, const CoeffVector<Complex>& a, double tolerance) {
  DeterminantReport r{f, {}, a, claimed_bound(f), tolerance, false, 0.0};
  switch (f) {
    case Functional::H31:
      r.value = hankel3(a);
      break;
    case Functional::T31:
      r.value = toeplitz3(a);
      break;
    case Functional::HT31:
      r.value = {hermitian_toeplitz3(a), 0.0};
      break;
  }
  const double v = r.bound_claimed.on_modulus ? std::abs(r.value) : r.value.real();
  r.margin = std::min(v - r.bound_claimed.lo, r.bound_claimed.hi - v);
  r.within_bound = r.margin >= -tolerance;
  return r;
}

namespace {

IdentityCheck compare(std::string name, const MultiPoly& expected, const MultiPoly& actual) {
  IdentityCheck c;
  c.name = std::move(name);
  c.terms = expected.terms().size();
  c.first_difference = first_difference(expected, actual);
  c.passed = !c.first_difference.has_value();
  return c;
}

}  // namespace

std::vector<IdentityCheck> verify_pspace_identities() {
  std::vector<IdentityCheck> out;
  const MultiPoly p1 = MultiPoly::variable(0);
  const MultiPoly p2 = MultiPoly::variable(1);
  const MultiPoly p3 = MultiPoly::variable(2);
  const MultiPoly p4 = MultiPoly::variable(3);
  const CoeffVector<MultiPoly> a = closed_form_coeffs(p1, p2, p3, p4);

  {
    const MultiPoly expected = hankel3_poly();
    IdentityCheck c = compare("H31: closed-form a2..a5 into the Hankel determinant", expected, hankel3(a));
    c.note = "coefficient of p1^6 = " + expected.coefficient({6, 0, 0, 0}).str();
    out.push_back(std::move(c));
  }
  {
    const MultiPoly actual = toeplitz3(a);
    out.push_back(compare("T31: closed-form a2, a3 into the Toeplitz determinant", toeplitz3_poly(), actual));
    out.push_back(compare("T31: regrouped quartic form",
                          toeplitz3_in_p_regrouped(MultiPoly::variable(0), MultiPoly::variable(1)), actual));
  }
  {
    // v0 = p, v1 = Re gamma, v2 = Im gamma.
    const ComplexPoly p{MultiPoly::variable(0)};
    const ComplexPoly gamma{MultiPoly::variable(1), MultiPoly::variable(2)};
    const ComplexPoly zero{};
    const auto lemma = lemma_coefficients(p, gamma, zero, zero);
    const CoeffVector<ComplexPoly> ac = closed_form_coeffs(p, lemma.p2, zero, zero);
    const MultiPoly actual = hermitian_toeplitz3(ac);

    const MultiPoly u = MultiPoly::variable(1);
    const MultiPoly v = MultiPoly::variable(2);
    const MultiPoly expected = MultiPoly(Rational(1, 256)) *
                               hermitian_surface_formal(MultiPoly::variable(0), u, u * u + v * v);
    IdentityCheck c = compare("HT31: a2 = p/2 and Lemma p2 in a3, against h(p, Re gamma, |gamma|^2)/256",
                              expected, actual);
    c.variable_names = {"p", "Re(gamma)", "Im(gamma)", "-"};
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace balloon
