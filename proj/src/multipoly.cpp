#include "balloon/multipoly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace balloon {

namespace {

void check_var(int var) {
  if (var < 0 || var >= kPolyVars) throw std::out_of_range("MultiPoly: indeterminate index out of range");
}

Exponents add_exponents(const Exponents& a, const Exponents& b) {
  Exponents r{};
  for (int i = 0; i < kPolyVars; ++i) r[i] = a[i] + b[i];
  return r;
}

}  // namespace

MultiPoly::MultiPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Exponents{}, c);
}

MultiPoly MultiPoly::variable(int index) {
  check_var(index);
  Exponents e{};
  e[index] = 1;
  return monomial(Rational(1), e);
}

MultiPoly MultiPoly::monomial(const Rational& c, const Exponents& e) {
  for (int x : e) {
    if (x < 0) throw std::invalid_argument("MultiPoly: negative exponent");
  }
  MultiPoly p;
  p.add_term(e, c);
  return p;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational MultiPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2] + e[3]);
  return d;
}

int MultiPoly::degree_in(int var) const {
  check_var(var);
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  MultiPoly r;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) r.add_term(add_exponents(ea, eb), ca * cb);
  }
  terms_ = std::move(r.terms_);
  return *this;
}

MultiPoly operator-(const MultiPoly& a) {
  MultiPoly r = a;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly MultiPoly::pow(int n) const {
  if (n < 0) throw std::invalid_argument("MultiPoly::pow: negative exponent");
  MultiPoly result(1);
  MultiPoly base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::derivative(int var) const {
  check_var(var);
  MultiPoly r;
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    d[var] -= 1;
    r.add_term(d, c * e[var]);
  }
  return r;
}

MultiPoly MultiPoly::substitute(int var, const MultiPoly& value) const {
  check_var(var);
  const int deg = degree_in(var);
  std::vector<MultiPoly> powers{MultiPoly(1)};
  for (int k = 1; k <= deg; ++k) powers.push_back(powers.back() * value);
  MultiPoly r;
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    rest[var] = 0;
    r += monomial(c, rest) * powers[static_cast<std::size_t>(e[var])];
  }
  return r;
}

double MultiPoly::evaluate(std::span<const double> point) const {
  if (point.size() < kPolyVars) {
    for (const auto& [e, c] : terms_) {
      for (std::size_t i = point.size(); i < kPolyVars; ++i) {
        if (e[i] != 0) throw std::invalid_argument("MultiPoly::evaluate: missing value for an indeterminate");
      }
    }
  }
  double acc = 0.0;
  for (const auto& [e, c] : terms_) {
    double term = c.convert_to<double>();
    for (std::size_t i = 0; i < point.size() && i < kPolyVars; ++i) {
      for (int k = 0; k < e[i]; ++k) term *= point[i];
    }
    acc += term;
  }
  return acc;
}

Complex MultiPoly::evaluate(std::span<const Complex> point) const {
  if (point.size() < kPolyVars) {
    for (const auto& [e, c] : terms_) {
      for (std::size_t i = point.size(); i < kPolyVars; ++i) {
        if (e[i] != 0) throw std::invalid_argument("MultiPoly::evaluate: missing value for an indeterminate");
      }
    }
  }
  Complex acc{0.0, 0.0};
  for (const auto& [e, c] : terms_) {
    Complex term{c.convert_to<double>(), 0.0};
    for (std::size_t i = 0; i < point.size() && i < kPolyVars; ++i) {
      for (int k = 0; k < e[i]; ++k) term *= point[i];
    }
    acc += term;
  }
  return acc;
}

std::vector<double> MultiPoly::univariate_coefficients() const {
  std::vector<double> out(static_cast<std::size_t>(degree_in(0)) + 1, 0.0);
  for (const auto& [e, c] : terms_) {
    if (e[1] != 0 || e[2] != 0 || e[3] != 0) {
      throw std::invalid_argument("MultiPoly::univariate_coefficients: polynomial involves more than v0");
    }
    out[static_cast<std::size_t>(e[0])] = c.convert_to<double>();
  }
  return out;
}

std::string MultiPoly::monomial_string(const Exponents& e, const std::array<std::string, kPolyVars>& names) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < kPolyVars; ++i) {
    if (e[i] == 0) continue;
    if (!first) os << '*';
    os << names[static_cast<std::size_t>(i)];
    if (e[i] > 1) os << '^' << e[i];
    first = false;
  }
  return first ? std::string("1") : os.str();
}

std::string MultiPoly::to_string(const std::array<std::string, kPolyVars>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest total degree first reads closer to hand-written polynomials.
  std::vector<std::pair<Exponents, Rational>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    const int da = a.first[0] + a.first[1] + a.first[2] + a.first[3];
    const int db = b.first[0] + b.first[1] + b.first[2] + b.first[3];
    if (da != db) return da > db;
    return a.first > b.first;
  });
  for (const auto& [e, c] : sorted) {
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    const bool constant = e == Exponents{};
    if (constant || mag != 1) {
      os << mag;
      if (!constant) os << '*';
    }
    if (!constant) os << monomial_string(e, names);
    first = false;
  }
  return os.str();
}

std::optional<MonomialDifference> first_difference(const MultiPoly& expected, const MultiPoly& actual) {
  auto ie = expected.terms().begin();
  auto ia = actual.terms().begin();
  const auto ee = expected.terms().end();
  const auto ea = actual.terms().end();
  while (ie != ee || ia != ea) {
    if (ia == ea || (ie != ee && ie->first < ia->first)) return MonomialDifference{ie->first, ie->second, 0};
    if (ie == ee || ia->first < ie->first) return MonomialDifference{ia->first, 0, ia->second};
    if (ie->second != ia->second) return MonomialDifference{ie->first, ie->second, ia->second};
    ++ie;
    ++ia;
  }
  return std::nullopt;
}

}  // namespace balloon
