#pragma once

// Line family q = x*p - x^n in the (p,q)-plane, its envelope, and point-line
// duality. Every (p,q) on Q_x is a parameter pair for which x solves
// x^n - p*x + q = 0.

#include <functional>
#include <vector>

namespace envsolve {

/// Non-vertical line q = slope * p + intercept. Also read as the dual point
/// (slope, intercept) in the mn-plane.
class Line {
 public:
  Line(double slope, double intercept);

  double slope() const noexcept { return slope_; }
  double intercept() const noexcept { return intercept_; }
  double at(double p) const noexcept { return slope_ * p + intercept_; }

  friend bool operator==(const Line&, const Line&) = default;

 private:
  double slope_;
  double intercept_;
};

class PlanePoint {
 public:
  PlanePoint(double p, double q);

  double p() const noexcept { return p_; }
  double q() const noexcept { return q_; }

  friend bool operator==(const PlanePoint&, const PlanePoint&) = default;

 private:
  double p_;
  double q_;
};

enum class Branch { Plus, Minus };

/// Degree plus branch selector. Odd degrees have the two branches +e and -e on
/// p >= 0; even degrees have a single branch on all of R.
class EnvelopeSpec {
 public:
  EnvelopeSpec(int n, Branch branch = Branch::Plus);

  int degree() const noexcept { return n_; }
  Branch branch() const noexcept { return branch_; }
  bool in_domain(double p) const noexcept;

 private:
  int n_;
  Branch branch_;
};

/// One-parameter family x -> Line(slope_fn(x), intercept_fn(x)).
struct LineFamily {
  std::function<double(double)> slope_fn;
  std::function<double(double)> intercept_fn;

  Line at(double x) const { return Line(slope_fn(x), intercept_fn(x)); }

  /// The family Q_x: slope x, intercept -x^n.
  static LineFamily monomial(int n);
};

Line family_line(int n, double x);

/// Unique intersection of Q_x and Q_y: p = (x^n - y^n)/(x - y) expanded as
/// sum_k x^k y^(n-1-k), q = x*p - x^n.
PlanePoint intersect_family_lines(int n, double x, double y);

/// Point where Q_x touches the envelope: (n x^(n-1), (n-1) x^n).
PlanePoint envelope_touch_point(int n, double x);

/// e(p) = (n-1)(p/n)^(n/(n-1)) on the Plus branch, negated on Minus.
double envelope_value(const EnvelopeSpec& spec, double p);

/// e'(p) = (p/n)^(1/(n-1)); one-sided at p = 0 for odd n.
double envelope_slope(const EnvelopeSpec& spec, double p);

/// p-coordinate of Q_x intersected with Q_{x+eps}.
double numeric_intersection(int n, double x, double eps);

/// Same construction for an arbitrary family and an arbitrary parameter pair.
double numeric_intersection(const LineFamily& family, double x0, double x1);

struct NumericEnvelope {
  double p;
  double error_estimate;
  /// Extrapolated value after each level (diagonal of the Richardson table).
  std::vector<double> estimates;
  /// |estimates[k] - estimates[k-1]| for k >= 1.
  std::vector<double> error_history;
};

/// Limit of the intersection of neighbouring family members as their spacing
/// eps = eps0 * 2^-k shrinks, k = 0..levels-1. Uses the centered pair
/// (x - eps/2, x + eps/2), whose error expands in even powers of eps, and a
/// full Richardson table on that expansion.
NumericEnvelope numeric_envelope(const LineFamily& family, double x, double eps0, int levels);

/// (slope, intercept) as a point in the mn-plane.
PlanePoint dual_of_line(const Line& line);

/// The mn-line of all lines through (p,q): n = -p m + q.
Line dual_of_point(const PlanePoint& point);

/// Inverse of dual_of_point.
PlanePoint point_from_dual_line(const Line& dual);

/// Inverse of dual_of_line.
Line line_from_dual_point(const PlanePoint& dual);

/// True when q == slope*p + intercept in floating point.
bool incident(const Line& line, const PlanePoint& point) noexcept;

/// (u+v, u*v): the parameters of x^2 - p x + q with roots u and v.
PlanePoint vieta_from_roots(double u, double v);

namespace detail {
// Shared by envelope_value and legendre_monomial so both return identical bits.
double envelope_plus(int n, double p) noexcept;
}  // namespace detail

}  // namespace envsolve
