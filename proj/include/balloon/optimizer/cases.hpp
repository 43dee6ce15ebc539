// The Hankel bound case analysis over the cuboid S = [0,2] x [0,1] x [0,1]:
// the majorant F(p, x, y), its face and edge restrictions, parameter sweeps
// of H_{3,1}, and the Hermitian surface h(p, x). Every claim is turned into
// a ScanReport with the tolerance it was checked against.
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "balloon/caratheodory.hpp"
#include "balloon/multipoly.hpp"
#include "balloon/optimizer/scan.hpp"

namespace balloon::optimizer {

// S as a Box.
Box cuboid();

// F(p, x, y) = (g1 + g2 y + g3 y^2 + g4 (1 - y^2)) / 663552.
// Throws std::domain_error outside S.
double eval_F(double p, double x, double y);

// F as an exact polynomial in v0 = p, v1 = x, v2 = y.
const MultiPoly& F_poly();

// H_{3,1} of the coefficient tuple the parametrization produces, via the
// p-space Hankel polynomial.
Complex eval_H31_params(const CaratheodoryParams& params);

enum class ClaimKind { AtMost, AtLeast, Equals };
enum class Severity { Check, Advisory };

std::string_view claim_kind_name(ClaimKind k);

struct Claim {
  ClaimKind kind = ClaimKind::AtMost;
  double value = 0.0;
  double tolerance = 0.0;
  std::optional<Point> point;  // in the coordinates of the report
  double point_tolerance = 0.0;
};

// One restriction of F to a face or edge of S. `fixed[d]` holds the value of
// axis d if it is pinned; the formula takes the free coordinates in axis
// order.
struct CatalogEntry {
  std::string id;
  std::string label;
  std::array<std::optional<double>, 3> fixed;
  std::function<double(std::span<const double>)> formula;
  Claim claim;

  std::size_t free_dims() const;
  // Full (p, x, y) point from the free coordinates.
  Point embed(std::span<const double> free) const;
  Box free_box() const;
};

// Faces p=0, p=2, x=0, x=1, y=0, y=1 and the twelve edges of S.
const std::vector<CatalogEntry>& face_edge_catalog();

struct ScanReport {
  std::string id;
  std::string objective;
  std::vector<std::size_t> resolution;
  Goal goal = Goal::Maximize;
  double best_value = 0.0;
  Point best_point;
  double refined_value = 0.0;
  Point refined_point;
  Claim claim;
  bool pass = false;
  double wall_seconds = 0.0;
  std::size_t evaluations = 0;
  std::size_t tie_count = 0;
  Point tie_lo;
  Point tie_hi;
  Severity severity = Severity::Check;
  std::string note;
};

// Applies the claim to refined_value / refined_point.
bool claim_holds(const Claim& claim, double value, std::span<const double> point);

struct CaseOptions {
  std::array<std::size_t, 3> grid{201, 101, 101};
  std::array<std::size_t, 2> hermitian_grid{2001, 1001};
  std::size_t face_grid = 401;
  std::size_t edge_grid = 10001;
  std::size_t gradient_grid = 101;
  std::size_t feasibility_grid = 2001;
  std::size_t samples = 100000;
  std::uint64_t seed = 1;
  double hankel_bound = 1.0 / 9.0;
  double bound_tolerance = 1e-9;
  double paper_tolerance = 1e-5;
  double chain_tolerance = 1e-12;
  double gradient_tolerance = 1e-8;
  double gradient_value_floor = 0.05;
  unsigned threads = 0;
};

// Scan + refine one objective against a claim.
ScanReport scan_and_check(std::string id, std::string objective, const Objective& f, const Box& box,
                          std::span<const std::size_t> resolution, const Claim& claim, Goal goal,
                          unsigned threads = 0);

ScanReport check_catalog_entry(const CatalogEntry& entry, const CaseOptions& options = {});

// 1-D exact restriction of F_poly to an edge, as ascending coefficients in
// the free coordinate.
std::vector<double> edge_polynomial(const CatalogEntry& edge);

// Interior of S: F over the full grid, refined, against the bound.
ScanReport check_interior(const CaseOptions& options = {});
// No simultaneous near-zero partials at interior points where F is large.
ScanReport check_interior_gradient(const CaseOptions& options = {});
// Joint feasibility of the two interior inequalities on a (p, x) grid.
// Advisory.
ScanReport check_interior_inequalities(const CaseOptions& options = {});
// Interior stationary points of the 2-D face restrictions. Advisory.
ScanReport check_face_stationary(const CatalogEntry& face, const CaseOptions& options = {});

// |H31| over sampled parameters vs the bound, the chain |H31| <= F, and the
// equality configuration (p1, gamma, eta) = (0, 0, 1).
std::vector<ScanReport> check_parameter_sweep(const CaseOptions& options = {});

// max h = 256 at (0, 0) and min h = -16 on the p = 2 edge.
std::vector<ScanReport> check_hermitian_surface(const CaseOptions& options = {});

std::vector<ScanReport> verify_hankel_cases(const CaseOptions& options = {});
std::vector<ScanReport> verify_all_cases(const CaseOptions& options = {});

// True iff every Check-severity report passed.
bool all_checks_pass(const std::vector<ScanReport>& reports);

}  // namespace balloon::optimizer
