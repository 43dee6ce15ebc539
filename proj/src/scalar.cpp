#include "balloon/scalar.hpp"

#include <stdexcept>

namespace balloon {

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  const Rational n = o.norm();
  if (n == 0) throw std::domain_error("GaussianRational: division by zero");
  Rational re = (re_ * o.re_ + im_ * o.im_) / n;
  im_ = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(re);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& g) {
  os << g.re_;
  if (g.im_ != 0) os << (g.im_ > 0 ? "+" : "-") << abs(g.im_) << "i";
  return os;
}

}  // namespace balloon
