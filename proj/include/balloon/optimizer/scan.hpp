// Box-constrained numerical search: tensor-grid scans with a deterministic
// reduction, coordinate-wise golden-section refinement, and 1-D critical
// point isolation for polynomials.
//
// None of this certifies a global optimum; it is a high-resolution check.
#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace balloon::optimizer {

struct Interval {
  double lo;
  double hi;

  double width() const { return hi - lo; }
  bool contains(double v) const { return v >= lo && v <= hi; }
};

class Box {
 public:
  // Throws std::invalid_argument if any lo > hi or the box is empty.
  explicit Box(std::vector<Interval> axes);

  std::size_t dims() const { return axes_.size(); }
  const Interval& operator[](std::size_t i) const { return axes_[i]; }
  const std::vector<Interval>& axes() const { return axes_; }
  bool contains(std::span<const double> point) const;

 private:
  std::vector<Interval> axes_;
};

using Point = std::vector<double>;
using Objective = std::function<double(std::span<const double>)>;

enum class Goal { Maximize, Minimize };

struct GridScanResult {
  double value = 0.0;
  Point point;
  std::vector<std::size_t> index;  // grid index of `point`
  std::size_t evaluations = 0;
  // Grid points whose value equals the optimum within tie_tolerance; the
  // reported point is the lexicographically smallest of them.
  std::size_t tie_count = 0;
  Point tie_lo;  // componentwise bounds of the tie set
  Point tie_hi;
};

struct GridScanOptions {
  Goal goal = Goal::Maximize;
  // Relative tie tolerance, scaled by max(1, |best|).
  double tie_tolerance = 1e-12;
  // 0 = std::thread::hardware_concurrency().
  unsigned threads = 0;
};

// Grid coordinate i of n points on [lo, hi]; endpoints are exact.
double grid_coordinate(const Interval& axis, std::size_t i, std::size_t n);

// Evaluates the objective on the full tensor grid. resolution[d] >= 2 points
// per axis. Result is independent of the thread count.
GridScanResult grid_scan(const Objective& objective, const Box& box, std::span<const std::size_t> resolution,
                         const GridScanOptions& options = {});

struct RefineOptions {
  // Half-width of each line-search bracket around the current coordinate,
  // as a fraction of the axis width.
  double bracket_fraction = 0.05;
  double step_tolerance = 1e-10;
  int max_sweeps = 200;
  Goal goal = Goal::Maximize;
};

struct RefineResult {
  Point point;
  double value = 0.0;
  int sweeps = 0;
};

// Cyclic coordinate search with a golden-section line search per axis.
// Never leaves the box and never returns a worse value than the start.
RefineResult refine(const Objective& objective, std::span<const double> start, const Box& box,
                    const RefineOptions& options = {});

// Golden-section search for the maximizer of a scalar function on [lo, hi].
double golden_section_max(const std::function<double(double)>& f, double lo, double hi, double tol = 1e-12);

struct CriticalPoint {
  double root;
  double value;  // objective polynomial at root
};

struct CriticalPointResult {
  std::vector<CriticalPoint> points;
  // Set when the pre-grid shows a near-zero local minimum of |derivative|
  // without a sign change, i.e. a tangential root may have been missed.
  bool possible_missed_root = false;
};

// Ascending-power coefficients helpers.
double polyval(std::span<const double> coeffs, double x);
std::vector<double> polyder(std::span<const double> coeffs);

// Real roots of the derivative of `poly` on the closed interval: sign-change
// bracketing on a pre-grid followed by bisection to `tolerance`. Requires
// degree >= 1.
CriticalPointResult critical_points_1d(std::span<const double> poly, Interval interval, std::size_t pregrid = 10000,
                                       double tolerance = 1e-12);

}  // namespace balloon::optimizer
