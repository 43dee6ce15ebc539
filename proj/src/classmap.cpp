#include "balloon/classmap.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace balloon {

TruncatedSeries<Rational> bseries(int order) {
  if (order < 0) throw std::invalid_argument("bseries: negative order");
  using S = TruncatedSeries<Rational>;
  const S one = S::constant(Rational(1), order);
  const S log1pz = log1(one + S::variable(order));
  return reciprocal(one - log1pz);
}

int extremal_power(Extremal kind) {
  switch (kind) {
    case Extremal::f1:
      return 3;
    case Extremal::f2:
      return 4;
    case Extremal::f3:
      return 1;
  }
  throw std::invalid_argument("extremal_power: unknown kind");
}

std::string_view extremal_name(Extremal kind) {
  switch (kind) {
    case Extremal::f1:
      return "f1";
    case Extremal::f2:
      return "f2";
    case Extremal::f3:
      return "f3";
  }
  return "?";
}

TruncatedSeries<Rational> extremal(Extremal kind, int order) {
  if (order < 1) throw std::invalid_argument("extremal: order must be >= 1");
  using S = TruncatedSeries<Rational>;
  const int k = extremal_power(kind);
  // log(f/z) is needed through z^(order-1).
  const int n = order - 1;
  const S b = bseries(n) - S::constant(Rational(1), n);
  if (n == 0) return S({Rational(0), Rational(1)});
  const S zk = S::monomial(Rational(1), k, n);
  const S integrand = divide_by_z(compose(b, zk));  // order n - 1
  const S log_f_over_z = integrate(integrand);      // order n
  return multiply_by_z(exp0(log_f_over_z));         // order n + 1 = order
}

double balloon_defect(Complex w) {
  if (w == Complex{0.0, 0.0}) throw std::domain_error("balloon_defect: w = 0 is excluded from the domain");
  return std::abs(std::exp(1.0 - 1.0 / w) - 1.0);
}

bool balloon_contains(Complex w) { return balloon_defect(w) < 1.0; }

std::vector<Complex> balloon_boundary(int n, double margin) {
  if (n < 8) throw std::invalid_argument("balloon_boundary: need at least 8 points");
  if (!(margin > 0.0 && margin < std::numbers::pi)) throw std::invalid_argument("balloon_boundary: bad margin");
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(n));
  const double lo = -std::numbers::pi + margin;
  const double hi = std::numbers::pi - margin;
  for (int i = 0; i < n; ++i) {
    const double theta = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    const Complex u = std::polar(1.0, theta);
    out.push_back(1.0 / (1.0 - std::log(1.0 + u)));
  }
  return out;
}

}  // namespace balloon
