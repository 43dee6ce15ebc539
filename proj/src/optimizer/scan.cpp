#include "balloon/optimizer/scan.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace balloon::optimizer {

Box::Box(std::vector<Interval> axes) : axes_(std::move(axes)) {
  if (axes_.empty()) throw std::invalid_argument("Box: needs at least one axis");
  for (const Interval& a : axes_) {
    if (!(a.lo <= a.hi)) throw std::invalid_argument("Box: axis with lo > hi");
  }
}

bool Box::contains(std::span<const double> point) const {
  if (point.size() != axes_.size()) return false;
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (!axes_[i].contains(point[i])) return false;
  }
  return true;
}

double grid_coordinate(const Interval& axis, std::size_t i, std::size_t n) {
  if (i == 0) return axis.lo;
  if (i + 1 == n) return axis.hi;
  return axis.lo + axis.width() * static_cast<double>(i) / static_cast<double>(n - 1);
}

namespace {

struct Partial {
  double value = 0.0;
  std::size_t flat = std::numeric_limits<std::size_t>::max();
  std::size_t evaluations = 0;
};

// a is better than b: strictly better value, or equal value at a smaller
// flat (lexicographic) index.
bool better(double va, std::size_t ia, double vb, std::size_t ib, Goal goal) {
  if (va != vb) return goal == Goal::Maximize ? va > vb : va < vb;
  return ia < ib;
}

void unflatten(std::size_t flat, std::span<const std::size_t> res, std::vector<std::size_t>& idx) {
  for (std::size_t d = res.size(); d-- > 0;) {
    idx[d] = flat % res[d];
    flat /= res[d];
  }
}

}  // namespace

GridScanResult grid_scan(const Objective& objective, const Box& box, std::span<const std::size_t> resolution,
                         const GridScanOptions& options) {
  const std::size_t dims = box.dims();
  if (resolution.size() != dims) throw std::invalid_argument("grid_scan: resolution rank differs from box rank");
  std::size_t total = 1;
  for (std::size_t n : resolution) {
    if (n < 2) throw std::invalid_argument("grid_scan: need at least 2 points per axis");
    total *= n;
  }

  // Precomputed axis coordinates.
  std::vector<std::vector<double>> coords(dims);
  for (std::size_t d = 0; d < dims; ++d) {
    coords[d].resize(resolution[d]);
    for (std::size_t i = 0; i < resolution[d]; ++i) coords[d][i] = grid_coordinate(box[d], i, resolution[d]);
  }

  unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, total));

  // Values are kept so the tie set can be annotated after the reduction.
  std::vector<double> values(total);
  std::vector<Partial> partials(threads);
  auto work = [&](unsigned t) {
    const std::size_t begin = total * t / threads;
    const std::size_t end = total * (t + 1) / threads;
    std::vector<std::size_t> idx(dims);
    Point x(dims);
    Partial best;
    for (std::size_t flat = begin; flat < end; ++flat) {
      unflatten(flat, resolution, idx);
      for (std::size_t d = 0; d < dims; ++d) x[d] = coords[d][idx[d]];
      const double v = objective(x);
      values[flat] = v;
      if (best.flat == std::numeric_limits<std::size_t>::max() || better(v, flat, best.value, best.flat, options.goal)) {
        best.value = v;
        best.flat = flat;
      }
      ++best.evaluations;
    }
    partials[t] = best;
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }

  Partial best = partials[0];
  std::size_t evaluations = 0;
  for (const Partial& p : partials) {
    evaluations += p.evaluations;
    if (p.flat != std::numeric_limits<std::size_t>::max() && better(p.value, p.flat, best.value, best.flat, options.goal)) {
      best = p;
    }
  }

  GridScanResult r;
  r.value = best.value;
  r.evaluations = evaluations;
  r.index.resize(dims);
  unflatten(best.flat, resolution, r.index);
  r.point.resize(dims);
  for (std::size_t d = 0; d < dims; ++d) r.point[d] = coords[d][r.index[d]];

  const double tie_tol = options.tie_tolerance * std::max(1.0, std::abs(r.value));
  r.tie_lo.assign(dims, std::numeric_limits<double>::infinity());
  r.tie_hi.assign(dims, -std::numeric_limits<double>::infinity());
  std::vector<std::size_t> idx(dims);
  for (std::size_t flat = 0; flat < total; ++flat) {
    if (std::abs(values[flat] - r.value) > tie_tol) continue;
    ++r.tie_count;
    unflatten(flat, resolution, idx);
    for (std::size_t d = 0; d < dims; ++d) {
      r.tie_lo[d] = std::min(r.tie_lo[d], coords[d][idx[d]]);
      r.tie_hi[d] = std::max(r.tie_hi[d], coords[d][idx[d]]);
    }
  }
  return r;
}

double golden_section_max(const std::function<double(double)>& f, double lo, double hi, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < 400 && (b - a) > tol; ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  // Golden section only narrows the bracket; compare with the ends so a
  // boundary optimum is not lost.
  double best_x = 0.5 * (a + b);
  double best_f = f(best_x);
  for (double x : {lo, hi, c, d}) {
    const double v = f(x);
    if (v > best_f) {
      best_f = v;
      best_x = x;
    }
  }
  return best_x;
}

RefineResult refine(const Objective& objective, std::span<const double> start, const Box& box,
                    const RefineOptions& options) {
  if (!box.contains(start)) throw std::invalid_argument("refine: start point outside the box");
  const double sign = options.goal == Goal::Maximize ? 1.0 : -1.0;
  auto score = [&](std::span<const double> x) { return sign * objective(x); };

  RefineResult r;
  r.point.assign(start.begin(), start.end());
  double current = score(r.point);
  Point trial = r.point;

  for (r.sweeps = 0; r.sweeps < options.max_sweeps;) {
    ++r.sweeps;
    double moved = 0.0;
    for (std::size_t d = 0; d < box.dims(); ++d) {
      const Interval& axis = box[d];
      if (axis.width() == 0.0) continue;
      const double half = options.bracket_fraction * axis.width();
      const double lo = std::max(axis.lo, r.point[d] - half);
      const double hi = std::min(axis.hi, r.point[d] + half);
      trial = r.point;
      auto line = [&](double t) {
        trial[d] = t;
        return score(trial);
      };
      const double t = golden_section_max(line, lo, hi);
      trial[d] = t;
      const double v = score(trial);
      if (v > current) {
        moved = std::max(moved, std::abs(t - r.point[d]));
        r.point[d] = t;
        current = v;
      }
    }
    if (moved < options.step_tolerance) break;
  }
  r.value = sign * current;
  return r;
}

double polyval(std::span<const double> coeffs, double x) {
  double acc = 0.0;
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
  return acc;
}

std::vector<double> polyder(std::span<const double> coeffs) {
  if (coeffs.size() <= 1) return {0.0};
  std::vector<double> d(coeffs.size() - 1);
  for (std::size_t k = 1; k < coeffs.size(); ++k) d[k - 1] = coeffs[k] * static_cast<double>(k);
  return d;
}

CriticalPointResult critical_points_1d(std::span<const double> poly, Interval interval, std::size_t pregrid,
                                       double tolerance) {
  std::size_t degree = poly.size();
  while (degree > 0 && poly[degree - 1] == 0.0) --degree;
  if (degree < 2) throw std::invalid_argument("critical_points_1d: polynomial degree must be >= 1");
  if (pregrid < 2) throw std::invalid_argument("critical_points_1d: pre-grid needs at least 2 points");
  const std::vector<double> dp = polyder(poly.subspan(0, degree));

  std::vector<double> xs(pregrid);
  std::vector<double> ds(pregrid);
  double scale = 0.0;
  for (std::size_t i = 0; i < pregrid; ++i) {
    xs[i] = grid_coordinate(interval, i, pregrid);
    ds[i] = polyval(dp, xs[i]);
    scale = std::max(scale, std::abs(ds[i]));
  }

  CriticalPointResult out;
  auto push = [&](double root) {
    if (!out.points.empty() && std::abs(out.points.back().root - root) <= 2 * tolerance) return;
    out.points.push_back({root, polyval(poly, root)});
  };
  for (std::size_t i = 0; i < pregrid; ++i) {
    if (ds[i] == 0.0) {
      push(xs[i]);
      continue;
    }
    if (i + 1 < pregrid && ds[i + 1] != 0.0 && std::signbit(ds[i]) != std::signbit(ds[i + 1])) {
      double a = xs[i];
      double b = xs[i + 1];
      double fa = ds[i];
      while (b - a > tolerance) {
        const double m = 0.5 * (a + b);
        if (m <= a || m >= b) break;
        const double fm = polyval(dp, m);
        if (fm == 0.0) {
          a = b = m;
          break;
        }
        if (std::signbit(fm) == std::signbit(fa)) {
          a = m;
          fa = fm;
        } else {
          b = m;
        }
      }
      push(0.5 * (a + b));
    }
    // Near-zero local minimum of |p'| with no sign change on either side.
    if (i > 0 && i + 1 < pregrid && ds[i - 1] != 0.0 && ds[i + 1] != 0.0 &&
        std::signbit(ds[i - 1]) == std::signbit(ds[i]) && std::signbit(ds[i]) == std::signbit(ds[i + 1]) &&
        std::abs(ds[i]) < std::abs(ds[i - 1]) && std::abs(ds[i]) < std::abs(ds[i + 1]) &&
        std::abs(ds[i]) <= 1e-9 * std::max(scale, 1.0)) {
      out.possible_missed_root = true;
    }
  }
  return out;
}

}  // namespace balloon::optimizer
