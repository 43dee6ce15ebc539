#include "balloon/optimizer/cases.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "balloon/functionals.hpp"

namespace balloon::optimizer {

namespace {

constexpr double kScale = 663552.0;

// Dense form of a MultiPoly in (p, x, y) for fast repeated evaluation.
class CompiledPoly {
 public:
  explicit CompiledPoly(const MultiPoly& poly) {
    for (const auto& [e, c] : poly.terms()) {
      if (e[3] != 0) throw std::invalid_argument("CompiledPoly: expects at most three indeterminates");
      terms_.push_back({c.convert_to<double>(), e[0], e[1], e[2]});
      for (int d = 0; d < 3; ++d) max_deg_ = std::max(max_deg_, e[static_cast<std::size_t>(d)]);
    }
  }

  double operator()(double p, double x, double y) const {
    std::array<std::array<double, 16>, 3> pw{};
    const std::array<double, 3> v{p, x, y};
    for (int d = 0; d < 3; ++d) {
      pw[d][0] = 1.0;
      for (int k = 1; k <= max_deg_; ++k) pw[d][k] = pw[d][k - 1] * v[d];
    }
    double acc = 0.0;
    for (const Term& t : terms_) acc += t.c * pw[0][t.ep] * pw[1][t.ex] * pw[2][t.ey];
    return acc;
  }

 private:
  struct Term {
    double c;
    int ep, ex, ey;
  };
  std::vector<Term> terms_;
  int max_deg_ = 0;
};

MultiPoly build_F_poly() {
  const MultiPoly p = MultiPoly::variable(0);
  const MultiPoly x = MultiPoly::variable(1);
  const MultiPoly y = MultiPoly::variable(2);
  const MultiPoly p2 = p * p;
  const MultiPoly q = MultiPoly(4) - p2;          // 4 - p^2
  const MultiPoly r = MultiPoly(1) - x * x;       // 1 - x^2
  const MultiPoly g1 = MultiPoly(37) * p2.pow(3) + MultiPoly(102) * p2 * p2 * x * q +
                       MultiPoly(48) * p2 * x * x * q * q + MultiPoly(96) * p2 * x * x * q +
                       MultiPoly(72) * p2 * x.pow(3) * q * q + MultiPoly(2592) * p2 * x.pow(3) * q +
                       MultiPoly(144) * p2 * x.pow(4) * q * q;
  const MultiPoly g2 = MultiPoly(48) * p * q * r *
                       (p2 + MultiPoly(120) * x + MultiPoly(24) * p2 * x + MultiPoly(12) * x * x * q);
  const MultiPoly g3 =
      MultiPoly(288) * q * r * (MultiPoly(9) * p2 * x + MultiPoly(16) * q + MultiPoly(34) * x * x * q);
  const MultiPoly g4 = MultiPoly(2592) * q * r * (MultiPoly(2) * x * q + p2);
  return MultiPoly(Rational(1, 663552)) * (g1 + g2 * y + g3 * y * y + g4 * (MultiPoly(1) - y * y));
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string format_point(std::span<const double> x) {
  std::ostringstream os;
  os << std::setprecision(10) << '(';
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x[i];
  os << ')';
  return os.str();
}

Claim at_most(double v, double tol) { return {ClaimKind::AtMost, v, tol, std::nullopt, 0.0}; }
Claim at_least(double v, double tol) { return {ClaimKind::AtLeast, v, tol, std::nullopt, 0.0}; }
Claim equals(double v, double tol, std::optional<Point> at = std::nullopt, double point_tol = 0.0) {
  return {ClaimKind::Equals, v, tol, std::move(at), point_tol};
}

constexpr double kF2 = 37.0 / 10368.0;

std::vector<CatalogEntry> build_catalog() {
  using std::nullopt;
  using S = std::span<const double>;
  const double ninth = 1.0 / 9.0;
  const double paper_tol = 1e-5;
  const double exact_tol = 1e-12;
  std::vector<CatalogEntry> c;

  // Faces. Formulas are F restricted to the face, written out per face.
  c.push_back({"face.p0", "face p=0: (1-x^2)(16y^2 + 34x^2y^2 + 18x - 18xy^2)/144", {0.0, nullopt, nullopt},
               [](S v) {
                 const double x = v[0], y = v[1];
                 return (1 - x * x) * (16 * y * y + 34 * x * x * y * y + 18 * x - 18 * x * y * y) / 144.0;
               },
               at_most(ninth, 1e-9)});
  c.push_back({"face.p2", "face p=2: 37/10368", {2.0, nullopt, nullopt}, [](S) { return kF2; },
               equals(kF2, exact_tol)});
  c.push_back({"face.x0", "face x=0 (h2)", {nullopt, 0.0, nullopt},
               [](S v) {
                 const double p = v[0], y = v[1], q = 4 - p * p;
                 return (37 * std::pow(p, 6) + 48 * p * p * p * q * y + 4608 * q * q * y * y +
                         2592 * p * p * q * (1 - y * y)) /
                        kScale;
               },
               at_most(ninth, 1e-9)});
  c.push_back({"face.x1", "face x=1 (h3): p^2(14976 - 4392p^2 + 199p^4)/663552", {nullopt, 1.0, nullopt},
               [](S v) {
                 const double p = v[0];
                 return p * p * (14976 - 4392 * p * p + 199 * std::pow(p, 4)) / kScale;
               },
               equals(0.0210673, paper_tol)});
  c.push_back({"face.y0", "face y=0 (h4)", {nullopt, nullopt, 0.0},
               [](S v) {
                 const double p = v[0], x = v[1];
                 const double x2 = x * x, x3 = x2 * x, x4 = x2 * x2;
                 return (82944 * x * (1 - x2) + 1152 * p * p * (9 - 36 * x - 8 * x2 + 46 * x3 + 2 * x4) -
                         24 * std::pow(p, 4) * (108 - 233 * x - 88 * x2 + 348 * x3 + 48 * x4) +
                         std::pow(p, 6) * (37 - 102 * x + 48 * x2 + 72 * x3 + 144 * x4)) /
                        kScale;
               },
               at_most(ninth, 1e-9)});
  c.push_back({"face.y1", "face y=1 (h5)", {nullopt, nullopt, 1.0},
               [](S v) {
                 const double p = v[0], x = v[1];
                 const double x2 = x * x, x3 = x2 * x, x4 = x2 * x2;
                 return (4608 * p * x * (5 + 2 * x - 5 * x2 - 2 * x3) -
                         48 * std::pow(p, 5) * (1 + 24 * x - 13 * x2 - 24 * x3 + 12 * x4) +
                         9216 * (8 + 9 * x2 - 17 * x4) + 192 * std::pow(p, 3) * (1 - 6 * x - 25 * x2 + 6 * x3 + 24 * x4) -
                         1152 * p * p * (32 - 9 * x + 35 * x2 - x3 - 70 * x4) +
                         std::pow(p, 6) * (37 - 102 * x + 48 * x2 + 72 * x3 + 144 * x4) +
                         24 * std::pow(p, 4) * (192 - 91 * x + 196 * x2 - 24 * x3 - 456 * x4)) /
                        kScale;
               },
               at_most(ninth, 1e-9)});

  // Edges along p.
  c.push_back({"edge.x0y0", "k1 = F(p,0,0) = (37p^6 + 2592p^2(4-p^2))/663552", {nullopt, 0.0, 0.0},
               [](S v) {
                 const double p = v[0];
                 return (37 * std::pow(p, 6) + 2592 * p * p * (4 - p * p)) / kScale;
               },
               equals(0.0161025, paper_tol, Point{1.44702}, paper_tol)});
  c.push_back({"edge.x0y1", "k2 = F(p,0,1) = (37p^6 + 48p^3(4-p^2) + 4608(4-p^2)^2)/663552", {nullopt, 0.0, 1.0},
               [](S v) {
                 const double p = v[0], q = 4 - p * p;
                 return (37 * std::pow(p, 6) + 48 * p * p * p * q + 4608 * q * q) / kScale;
               },
               equals(ninth, 1e-9, Point{0.0}, 1e-9)});
  c.push_back({"edge.x1y1", "k3 = F(p,1,1) = p^2(14976 - 4392p^2 + 199p^4)/663552", {nullopt, 1.0, 1.0},
               [](S v) {
                 const double p = v[0];
                 return p * p * (14976 - 4392 * p * p + 199 * std::pow(p, 4)) / kScale;
               },
               equals(0.0210673, paper_tol, Point{1.40293}, paper_tol)});
  c.push_back({"edge.x1y0", "F(p,1,0) = F(p,1,1)", {nullopt, 1.0, 0.0},
               [](S v) {
                 const double p = v[0];
                 return p * p * (14976 - 4392 * p * p + 199 * std::pow(p, 4)) / kScale;
               },
               equals(0.0210673, paper_tol, Point{1.40293}, paper_tol)});
  // Edges along x.
  c.push_back({"edge.p0y1", "k4 = F(0,x,1) = (1-x^2)(8+17x^2)/72", {0.0, nullopt, 1.0},
               [](S v) {
                 const double x = v[0];
                 return (1 - x * x) * (8 + 17 * x * x) / 72.0;
               },
               at_most(ninth, 1e-9)});
  c.push_back({"edge.p0y0", "k5 = F(0,x,0) = x(1-x^2)/8", {0.0, nullopt, 0.0},
               [](S v) {
                 const double x = v[0];
                 return x * (1 - x * x) / 8.0;
               },
               equals(0.0481125, paper_tol, Point{0.57735}, paper_tol)});
  c.push_back({"edge.p2y0", "F(2,x,0) = 37/10368", {2.0, nullopt, 0.0}, [](S) { return kF2; },
               equals(kF2, exact_tol)});
  c.push_back({"edge.p2y1", "F(2,x,1) = 37/10368", {2.0, nullopt, 1.0}, [](S) { return kF2; },
               equals(kF2, exact_tol)});
  // Edges along y.
  c.push_back({"edge.p0x0", "F(0,0,y) = y^2/9", {0.0, 0.0, nullopt},
               [](S v) { return v[0] * v[0] / 9.0; }, equals(ninth, 1e-9, Point{1.0}, 1e-9)});
  c.push_back({"edge.p0x1", "F(0,1,y) = 0", {0.0, 1.0, nullopt}, [](S) { return 0.0; }, equals(0.0, exact_tol)});
  c.push_back({"edge.p2x0", "F(2,0,y) = 37/10368", {2.0, 0.0, nullopt}, [](S) { return kF2; },
               equals(kF2, exact_tol)});
  c.push_back({"edge.p2x1", "F(2,1,y) = 37/10368", {2.0, 1.0, nullopt}, [](S) { return kF2; },
               equals(kF2, exact_tol)});
  return c;
}

MultiPoly restrict_poly(const MultiPoly& poly, const std::array<std::optional<double>, 3>& fixed) {
  // Fixed values on S faces are 0, 1, 2, all exact rationals.
  MultiPoly r = poly;
  for (int d = 0; d < 3; ++d) {
    if (!fixed[static_cast<std::size_t>(d)]) continue;
    const double v = *fixed[static_cast<std::size_t>(d)];
    r = r.substitute(d, MultiPoly(Rational(static_cast<long>(std::lround(v)))));
  }
  return r;
}

}  // namespace

Box cuboid() { return Box({{0.0, 2.0}, {0.0, 1.0}, {0.0, 1.0}}); }

double eval_F(double p, double x, double y) {
  if (!(p >= 0.0 && p <= 2.0) || !(x >= 0.0 && x <= 1.0) || !(y >= 0.0 && y <= 1.0)) {
    throw std::domain_error("eval_F: (p, x, y) outside [0,2] x [0,1] x [0,1]");
  }
  const double p2 = p * p;
  const double q = 4.0 - p2;
  const double r = 1.0 - x * x;
  const double g1 = 37 * p2 * p2 * p2 + 102 * p2 * p2 * x * q + 48 * p2 * x * x * q * q + 96 * p2 * x * x * q +
                    72 * p2 * x * x * x * q * q + 2592 * p2 * x * x * x * q + 144 * p2 * x * x * x * x * q * q;
  const double g2 = 48 * p * q * r * (p2 + 120 * x + 24 * p2 * x + 12 * x * x * q);
  const double g3 = 288 * q * r * (9 * p2 * x + 16 * q + 34 * x * x * q);
  const double g4 = 2592 * q * r * (2 * x * q + p2);
  return (g1 + g2 * y + g3 * y * y + g4 * (1.0 - y * y)) / kScale;
}

const MultiPoly& F_poly() {
  static const MultiPoly poly = build_F_poly();
  return poly;
}

Complex eval_H31_params(const CaratheodoryParams& params) {
  const auto c = expand_lemma(params);
  return hankel3_in_p(Complex(params.p1(), 0.0), c.p2, c.p3, c.p4);
}

std::string_view claim_kind_name(ClaimKind k) {
  switch (k) {
    case ClaimKind::AtMost:
      return "at_most";
    case ClaimKind::AtLeast:
      return "at_least";
    case ClaimKind::Equals:
      return "equals";
  }
  return "?";
}

std::size_t CatalogEntry::free_dims() const {
  return static_cast<std::size_t>(std::count_if(fixed.begin(), fixed.end(), [](const auto& f) { return !f; }));
}

Point CatalogEntry::embed(std::span<const double> free) const {
  Point out(3);
  std::size_t k = 0;
  for (std::size_t d = 0; d < 3; ++d) out[d] = fixed[d] ? *fixed[d] : free[k++];
  return out;
}

Box CatalogEntry::free_box() const {
  const Box s = cuboid();
  std::vector<Interval> axes;
  for (std::size_t d = 0; d < 3; ++d) {
    if (!fixed[d]) axes.push_back(s[d]);
  }
  return Box(std::move(axes));
}

const std::vector<CatalogEntry>& face_edge_catalog() {
  static const std::vector<CatalogEntry> catalog = build_catalog();
  return catalog;
}

bool claim_holds(const Claim& claim, double value, std::span<const double> point) {
  bool ok = false;
  switch (claim.kind) {
    case ClaimKind::AtMost:
      ok = value <= claim.value + claim.tolerance;
      break;
    case ClaimKind::AtLeast:
      ok = value >= claim.value - claim.tolerance;
      break;
    case ClaimKind::Equals:
      ok = std::abs(value - claim.value) <= claim.tolerance;
      break;
  }
  if (ok && claim.point) {
    if (claim.point->size() != point.size()) return false;
    for (std::size_t i = 0; i < point.size(); ++i) {
      if (std::abs((*claim.point)[i] - point[i]) > claim.point_tolerance) return false;
    }
  }
  return ok;
}

ScanReport scan_and_check(std::string id, std::string objective, const Objective& f, const Box& box,
                          std::span<const std::size_t> resolution, const Claim& claim, Goal goal, unsigned threads) {
  const auto t0 = std::chrono::steady_clock::now();
  ScanReport r;
  r.id = std::move(id);
  r.objective = std::move(objective);
  r.resolution.assign(resolution.begin(), resolution.end());
  r.goal = goal;
  r.claim = claim;

  GridScanOptions gopt;
  gopt.goal = goal;
  gopt.threads = threads;
  const GridScanResult g = grid_scan(f, box, resolution, gopt);
  r.best_value = g.value;
  r.best_point = g.point;
  r.evaluations = g.evaluations;
  r.tie_count = g.tie_count;
  r.tie_lo = g.tie_lo;
  r.tie_hi = g.tie_hi;

  RefineOptions ropt;
  ropt.goal = goal;
  // Bracket of two grid cells around the grid optimum on the finest axis.
  double frac = 0.0;
  for (std::size_t n : resolution) frac = std::max(frac, 2.0 / static_cast<double>(n - 1));
  ropt.bracket_fraction = frac;
  const RefineResult ref = refine(f, g.point, box, ropt);
  r.refined_value = ref.value;
  r.refined_point = ref.point;
  r.pass = claim_holds(claim, r.refined_value, r.refined_point);
  r.wall_seconds = seconds_since(t0);
  return r;
}

std::vector<double> edge_polynomial(const CatalogEntry& edge) {
  if (edge.free_dims() != 1) throw std::invalid_argument("edge_polynomial: entry is not an edge");
  MultiPoly r = restrict_poly(F_poly(), edge.fixed);
  std::size_t free_axis = 0;
  while (edge.fixed[free_axis]) ++free_axis;
  if (free_axis != 0) r = r.substitute(static_cast<int>(free_axis), MultiPoly::variable(0));
  if (r.is_zero()) return {0.0};
  return r.univariate_coefficients();
}

ScanReport check_catalog_entry(const CatalogEntry& entry, const CaseOptions& options) {
  const Box box = entry.free_box();
  std::vector<std::size_t> res(entry.free_dims(),
                               entry.free_dims() == 1 ? options.edge_grid : options.face_grid);
  ScanReport r = scan_and_check(entry.id, entry.label, entry.formula, box, res, entry.claim, Goal::Maximize,
                                options.threads);
  std::ostringstream note;
  note << std::setprecision(10) << "argmax in (p,x,y): " << format_point(entry.embed(r.refined_point));
  if (entry.free_dims() == 1) {
    const std::vector<double> poly = edge_polynomial(entry);
    if (poly.size() >= 2 && std::any_of(poly.begin() + 1, poly.end(), [](double c) { return c != 0.0; })) {
      const auto crit = critical_points_1d(poly, box[0]);
      note << "; critical points:";
      for (const auto& cp : crit.points) note << " (" << cp.root << ", " << cp.value << ")";
      if (crit.points.empty()) note << " none";
      if (crit.possible_missed_root) note << " [possible tangential root]";
    } else {
      note << "; constant along the edge";
    }
  }
  r.note = note.str();
  return r;
}

ScanReport check_interior(const CaseOptions& options) {
  const Objective f = [](std::span<const double> v) { return eval_F(v[0], v[1], v[2]); };
  const std::vector<std::size_t> res(options.grid.begin(), options.grid.end());
  Claim claim = at_most(options.hankel_bound, options.bound_tolerance);
  ScanReport r = scan_and_check("hankel.F.global_max", "F(p,x,y) over S", f, cuboid(), res, claim,
                                Goal::Maximize, options.threads);
  std::ostringstream note;
  note << std::setprecision(12) << "claimed bound " << options.hankel_bound << " attained at (0, 0, 1) with F = "
       << eval_F(0, 0, 1) << "; scan maximum at " << format_point(r.refined_point);
  r.note = note.str();
  return r;
}

ScanReport check_interior_gradient(const CaseOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  const CompiledPoly f(F_poly());
  const CompiledPoly fp(F_poly().derivative(0));
  const CompiledPoly fx(F_poly().derivative(1));
  const CompiledPoly fy(F_poly().derivative(2));
  const std::size_t n = options.gradient_grid;
  const Box s = cuboid();

  ScanReport r;
  r.id = "hankel.F.interior_gradient";
  r.objective = "max(|F_p|, |F_x|, |F_y|) at strictly interior grid points with F > floor";
  r.resolution = {n, n, n};
  r.goal = Goal::Minimize;
  r.claim = at_least(options.gradient_tolerance, 0.0);
  r.best_value = std::numeric_limits<double>::infinity();
  std::size_t vanishing = 0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double p = grid_coordinate(s[0], i, n);
    for (std::size_t j = 1; j + 1 < n; ++j) {
      const double x = grid_coordinate(s[1], j, n);
      for (std::size_t k = 1; k + 1 < n; ++k) {
        const double y = grid_coordinate(s[2], k, n);
        ++r.evaluations;
        if (f(p, x, y) <= options.gradient_value_floor) continue;
        const double g = std::max({std::abs(fp(p, x, y)), std::abs(fx(p, x, y)), std::abs(fy(p, x, y))});
        if (g < options.gradient_tolerance) ++vanishing;
        if (g < r.best_value) {
          r.best_value = g;
          r.best_point = {p, x, y};
        }
      }
    }
  }
  r.refined_value = r.best_value;
  r.refined_point = r.best_point;
  r.pass = vanishing == 0 && claim_holds(r.claim, r.refined_value, r.refined_point);
  std::ostringstream note;
  note << "value floor " << options.gradient_value_floor << ", points with all partials below "
       << options.gradient_tolerance << ": " << vanishing;
  r.note = note.str();
  r.wall_seconds = seconds_since(t0);
  return r;
}

ScanReport check_interior_inequalities(const CaseOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t n = options.feasibility_grid;
  const Box s = cuboid();
  ScanReport r;
  r.id = "hankel.F.interior_inequalities";
  r.objective = "count of interior (p,x) grid points satisfying both critical-point inequalities";
  r.resolution = {n, n};
  r.severity = Severity::Advisory;
  r.claim = at_most(0.0, 0.0);
  std::size_t feasible = 0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double p = grid_coordinate(s[0], i, n);
    const double q = 4 - p * p;
    for (std::size_t j = 1; j + 1 < n; ++j) {
      const double x = grid_coordinate(s[1], j, n);
      ++r.evaluations;
      const bool first = p * p * p * (1 - 6 * x) + q * (12 * p * x * x - 30 * p * x + 300 - 324 * x + 408 * x * x) <
                         432 * (1 - x);
      const bool second = 25 * p * p > q * (34 * x * x - 27 * x) - 80 * x * x + 36 * x + 64;
      if (first && second) {
        if (feasible == 0) r.best_point = {p, x};
        ++feasible;
      }
    }
  }
  r.best_value = r.refined_value = static_cast<double>(feasible);
  r.refined_point = r.best_point;
  r.pass = feasible == 0;
  r.note = feasible == 0 ? "no jointly feasible grid point"
                         : "jointly feasible points exist; first at " + format_point(r.best_point) +
                               "; interior absence of critical points rests on hankel.F.interior_gradient";
  r.wall_seconds = seconds_since(t0);
  return r;
}

ScanReport check_face_stationary(const CatalogEntry& face, const CaseOptions& options) {
  if (face.free_dims() != 2) throw std::invalid_argument("check_face_stationary: entry is not a face");
  const auto t0 = std::chrono::steady_clock::now();
  const MultiPoly restricted = restrict_poly(F_poly(), face.fixed);
  std::array<int, 2> axes{};
  {
    int k = 0;
    for (int d = 0; d < 3; ++d) {
      if (!face.fixed[static_cast<std::size_t>(d)]) axes[static_cast<std::size_t>(k++)] = d;
    }
  }
  // F may not depend on one free coordinate (face x=1). Its stationary set is
  // then a union of lines, one per critical point of the 1-D profile.
  for (int k = 0; k < 2; ++k) {
    const int flat_axis = axes[static_cast<std::size_t>(k)];
    const int live_axis = axes[static_cast<std::size_t>(1 - k)];
    if (restricted.degree_in(flat_axis) != 0) continue;
    const MultiPoly profile = live_axis == 0 ? restricted : restricted.substitute(live_axis, MultiPoly::variable(0));
    const Interval live = cuboid()[static_cast<std::size_t>(live_axis)];
    const auto crit = critical_points_1d(profile.univariate_coefficients(), live);
    ScanReport r;
    r.id = "stationary." + face.id;
    r.objective = "interior stationary points of " + face.label;
    r.resolution = {10000};
    r.severity = Severity::Advisory;
    r.claim = equals(1.0, 0.0);
    std::ostringstream note;
    note << std::setprecision(10) << "F does not depend on axis " << flat_axis
         << " here; stationary lines at axis " << live_axis << " =";
    double lines = 0;
    for (const auto& cp : crit.points) {
      if (cp.root <= live.lo || cp.root >= live.hi) continue;
      ++lines;
      note << ' ' << cp.root << " (F = " << cp.value << ')';
      r.best_point = r.refined_point = {cp.root};
    }
    r.best_value = r.refined_value = lines;
    r.pass = claim_holds(r.claim, lines, {});
    r.note = note.str();
    r.wall_seconds = seconds_since(t0);
    return r;
  }

  const CompiledPoly d0(restricted.derivative(axes[0]));
  const CompiledPoly d1(restricted.derivative(axes[1]));
  const CompiledPoly value(restricted);
  auto full = [&](double u, double v) {
    std::array<double, 3> pt{face.fixed[0].value_or(0.0), face.fixed[1].value_or(0.0), face.fixed[2].value_or(0.0)};
    pt[static_cast<std::size_t>(axes[0])] = u;
    pt[static_cast<std::size_t>(axes[1])] = v;
    return pt;
  };
  auto grad2 = [&](std::span<const double> uv) {
    const auto pt = full(uv[0], uv[1]);
    const double a = d0(pt[0], pt[1], pt[2]);
    const double b = d1(pt[0], pt[1], pt[2]);
    return a * a + b * b;
  };

  const Box box = face.free_box();
  const std::size_t n = options.face_grid;
  std::vector<double> g(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double uv[2] = {grid_coordinate(box[0], i, n), grid_coordinate(box[1], j, n)};
      g[i * n + j] = grad2(uv);
    }
  }

  ScanReport r;
  r.id = "stationary." + face.id;
  r.objective = "interior stationary points of " + face.label;
  r.resolution = {n, n};
  r.severity = Severity::Advisory;
  r.claim = at_most(0.0, 0.0);
  r.evaluations = n * n;
  std::vector<Point> found;
  RefineOptions ropt;
  ropt.goal = Goal::Minimize;
  ropt.bracket_fraction = 2.0 / static_cast<double>(n - 1);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    for (std::size_t j = 1; j + 1 < n; ++j) {
      const double c = g[i * n + j];
      bool local_min = true;
      for (int di = -1; di <= 1 && local_min; ++di) {
        for (int dj = -1; dj <= 1; ++dj) {
          if (di == 0 && dj == 0) continue;
          if (g[(i + di) * n + (j + dj)] < c) {
            local_min = false;
            break;
          }
        }
      }
      if (!local_min) continue;
      const Point start{grid_coordinate(box[0], i, n), grid_coordinate(box[1], j, n)};
      const RefineResult ref = refine(grad2, start, box, ropt);
      const double margin = 1e-6;
      const bool interior = ref.point[0] > box[0].lo + margin && ref.point[0] < box[0].hi - margin &&
                            ref.point[1] > box[1].lo + margin && ref.point[1] < box[1].hi - margin;
      if (!interior || std::sqrt(ref.value) > 1e-9) continue;
      const bool dup = std::any_of(found.begin(), found.end(), [&](const Point& q) {
        return std::hypot(q[0] - ref.point[0], q[1] - ref.point[1]) < 1e-6;
      });
      if (!dup) found.push_back(ref.point);
    }
  }
  r.best_value = r.refined_value = static_cast<double>(found.size());
  std::ostringstream note;
  note << std::setprecision(10);
  if (found.empty()) {
    note << "no interior stationary point found";
  } else {
    r.best_point = r.refined_point = found.front();
    note << "stationary points (p,x,y) with F:";
    for (const Point& q : found) {
      const auto pt = full(q[0], q[1]);
      note << ' ' << format_point(pt) << " -> " << value(pt[0], pt[1], pt[2]);
    }
  }
  r.pass = found.empty();
  r.note = note.str();
  r.wall_seconds = seconds_since(t0);
  return r;
}

std::vector<ScanReport> check_parameter_sweep(const CaseOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  ScanReport max_h;
  max_h.id = "hankel.params.max_abs_H31";
  max_h.objective = "|H31| over sampled (p1, gamma, eta, rho)";
  max_h.resolution = {options.samples};
  max_h.claim = at_most(options.hankel_bound, options.bound_tolerance);
  max_h.best_value = -1.0;

  ScanReport chain;
  chain.id = "hankel.params.bound_chain";
  chain.objective = "|H31(p1, gamma, eta, rho)| - F(p1, |gamma|, |eta|) over sampled parameters";
  chain.resolution = {options.samples};
  chain.claim = at_most(0.0, options.chain_tolerance);
  chain.best_value = -std::numeric_limits<double>::infinity();

  std::size_t violations = 0;
  for (std::size_t i = 0; i < options.samples; ++i) {
    const CaratheodoryParams prm = sample_params(stream_seed(options.seed, i));
    const double h = std::abs(eval_H31_params(prm));
    const double x = std::min(1.0, prm.x());
    const double y = std::min(1.0, prm.y());
    const double excess = h - eval_F(prm.p1(), x, y);
    if (h > max_h.best_value) {
      max_h.best_value = h;
      max_h.best_point = {prm.p1(), x, y};
    }
    if (excess > chain.best_value) {
      chain.best_value = excess;
      chain.best_point = {prm.p1(), x, y};
    }
    if (excess > options.chain_tolerance) ++violations;
  }
  max_h.evaluations = chain.evaluations = options.samples;
  max_h.refined_value = max_h.best_value;
  max_h.refined_point = max_h.best_point;
  chain.refined_value = chain.best_value;
  chain.refined_point = chain.best_point;
  max_h.pass = claim_holds(max_h.claim, max_h.refined_value, max_h.refined_point);
  chain.pass = violations == 0;
  chain.note = "violations: " + std::to_string(violations);
  max_h.note = "points are (p1, |gamma|, |eta|)";
  max_h.wall_seconds = chain.wall_seconds = seconds_since(t0);

  ScanReport eq;
  eq.id = "hankel.params.equality_configuration";
  eq.objective = "|H31| at (p1, gamma, eta, rho) = (0, 0, 1, 0)";
  eq.claim = equals(1.0 / 9.0, 1e-12);
  eq.best_value = eq.refined_value = std::abs(eval_H31_params(CaratheodoryParams(0.0, 0.0, 1.0, 0.0)));
  eq.best_point = eq.refined_point = {0.0, 0.0, 1.0};
  eq.resolution = {1};
  eq.evaluations = 1;
  eq.pass = claim_holds(eq.claim, eq.refined_value, eq.refined_point);
  return {max_h, chain, eq};
}

std::vector<ScanReport> check_hermitian_surface(const CaseOptions& options) {
  const Objective h = [](std::span<const double> v) { return hermitian_surface(v[0], v[1]); };
  const Box box({{0.0, 2.0}, {0.0, 1.0}});
  const std::vector<std::size_t> res(options.hermitian_grid.begin(), options.hermitian_grid.end());
  ScanReport mx = scan_and_check("hermitian.h.max", "h(p,x) = 256 + 15p^4 - 128p^2 + 4p^2(4-p^2)x - 4(4-p^2)^2x^2",
                                 h, box, res, equals(256.0, options.bound_tolerance, Point{0.0, 0.0}, 1e-9),
                                 Goal::Maximize, options.threads);
  mx.note = "scaled upper bound " + std::to_string(mx.refined_value / 256.0);
  ScanReport mn = scan_and_check("hermitian.h.min", mx.objective, h, box, res,
                                 equals(-16.0, options.bound_tolerance, Point{2.0, 0.0}, 1e-9), Goal::Minimize,
                                 options.threads);
  std::ostringstream note;
  note << std::setprecision(10) << "tie set of " << mn.tie_count << " grid points spanning p in [" << mn.tie_lo[0]
       << ", " << mn.tie_hi[0] << "], x in [" << mn.tie_lo[1] << ", " << mn.tie_hi[1]
       << "]; h(2, x) = -16 for every x, reported at the lexicographically smallest point; (2, 1/2) is a member"
       << "; scaled lower bound " << mn.refined_value / 256.0;
  mn.note = note.str();
  return {mx, mn};
}

std::vector<ScanReport> verify_hankel_cases(const CaseOptions& options) {
  std::vector<ScanReport> out;
  out.push_back(check_interior(options));
  out.push_back(check_interior_gradient(options));
  out.push_back(check_interior_inequalities(options));
  for (const CatalogEntry& e : face_edge_catalog()) {
    out.push_back(check_catalog_entry(e, options));
    if (e.free_dims() == 2 && e.id != "face.p2") out.push_back(check_face_stationary(e, options));
  }
  for (ScanReport& r : check_parameter_sweep(options)) out.push_back(std::move(r));
  return out;
}

std::vector<ScanReport> verify_all_cases(const CaseOptions& options) {
  std::vector<ScanReport> out = verify_hankel_cases(options);
  for (ScanReport& r : check_hermitian_surface(options)) out.push_back(std::move(r));
  return out;
}

bool all_checks_pass(const std::vector<ScanReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const ScanReport& r) { return r.severity == Severity::Advisory || r.pass; });
}

}  // namespace balloon::optimizer
