#pragma once

// Real roots of x^n - p x + q = 0 read off the envelope: the position of (p,q)
// relative to the envelope branches fixes how many tangents (distinct real
// roots) exist; the solver then brackets each one between critical points.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "envsolve/envelope.hpp"

namespace envsolve {

/// Identifies x^n - p x + q = 0.
class EquationParams {
 public:
  EquationParams(int n, double p, double q);

  int n() const noexcept { return n_; }
  double p() const noexcept { return p_; }
  double q() const noexcept { return q_; }

  /// g(x) = x^n - p x + q and its derivative.
  double value(double x) const noexcept;
  double derivative(double x) const noexcept;

  friend bool operator==(const EquationParams&, const EquationParams&) = default;

 private:
  int n_;
  double p_;
  double q_;
};

enum class Regime {
  Above,            // even n, q > e(p): no tangent
  OnEnvelope,       // even n, q = e(p): one tangent
  Below,            // even n, q < e(p): two tangents
  BetweenBranches,  // odd n, |q| < e(p): three tangents
  OnBranch,         // odd n, |q| = e(p): two tangents
  OutsideBranches,  // odd n, |q| > e(p) or p <= 0: one tangent
  OnAxisOdd,        // odd n, q = 0 < p: three tangents, the axis among them
  Origin,           // odd n, (0,0): x^n = 0
};

std::string_view to_string(Regime regime) noexcept;
std::optional<Regime> regime_from_string(std::string_view name) noexcept;

struct Classification {
  int distinct_count;
  Regime regime;
  double discriminant;
};

struct Root {
  double value;
  int multiplicity;
  double residual;
};

struct RootReport {
  EquationParams params;
  Classification classification;
  std::vector<Root> roots;  // ascending, distinct
};

struct SolveOptions {
  double tol = 1e-12;
  double boundary_tol = 1e-9;
  int max_iter = 200;
};

inline constexpr double kDefaultBoundaryTol = 1e-9;

/// D = (p/n)^n - (q/(n-1))^(n-1). D > 0: maximal root count, D = 0: boundary,
/// D < 0: minimal root count.
double discriminant(const EquationParams& params);

/// max(|p/n|^n, |q/(n-1)|^(n-1)); the natural magnitude against which D is
/// compared when deciding whether a point is near the boundary.
double discriminant_scale(const EquationParams& params);

Classification classify(const EquationParams& params, double boundary_tol = kDefaultBoundaryTol);

/// All distinct real roots, ascending, consistent with classify().
/// Throws ConvergenceError if a bracket fails to converge within max_iter.
RootReport solve(const EquationParams& params, const SolveOptions& options = {});

/// Q_r for every distinct root r: the tangents to the envelope through (p,q).
std::vector<Line> tangent_lines_through(const EquationParams& params,
                                        const SolveOptions& options = {});

/// Real critical points of g, ascending (one for even n, zero or two for odd n;
/// the origin of an odd-degree equation with p = 0 is reported once).
std::vector<double> critical_points(const EquationParams& params);

/// No real root exceeds this in absolute value.
double root_bound(const EquationParams& params) noexcept;

struct CubicGeneral {
  double b;
  double c;
  double d;  // x^3 + b x^2 + c x + d
};

struct DepressedCubic {
  EquationParams params;  // n = 3
  double shift;           // t = x + shift
};

DepressedCubic depress_cubic(const CubicGeneral& cubic);

/// Oracle: counts distinct real roots by sign changes on a uniform grid over
/// [-B, B] (with the critical points added as nodes), merging tangential
/// touches at critical points. Independent of classify() and solve().
int brute_force_count(const EquationParams& params, int grid);

}  // namespace envsolve
