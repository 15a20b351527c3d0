#include "envsolve/envelope.hpp"

#include <cmath>
#include <string>

#include "envsolve/errors.hpp"
#include "envsolve/numeric.hpp"

namespace envsolve {

namespace {

void require_degree(int n) {
  if (n < 2) throw DomainError("degree n must be >= 2, got " + std::to_string(n));
}

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw DomainError(std::string(what) + " must be finite");
}

}  // namespace

Line::Line(double slope, double intercept) : slope_(slope), intercept_(intercept) {
  require_finite(slope, "line slope");
  require_finite(intercept, "line intercept");
}

PlanePoint::PlanePoint(double p, double q) : p_(p), q_(q) {
  require_finite(p, "p");
  require_finite(q, "q");
}

EnvelopeSpec::EnvelopeSpec(int n, Branch branch) : n_(n), branch_(branch) {
  require_degree(n);
  if (branch == Branch::Minus && n % 2 == 0) {
    throw DomainError("even degree " + std::to_string(n) + " has no Minus branch");
  }
}

bool EnvelopeSpec::in_domain(double p) const noexcept {
  if (!std::isfinite(p)) return false;
  return n_ % 2 == 0 || p >= 0.0;
}

LineFamily LineFamily::monomial(int n) {
  require_degree(n);
  return LineFamily{[](double x) { return x; }, [n](double x) { return -ipow(x, n); }};
}

Line family_line(int n, double x) {
  require_degree(n);
  require_finite(x, "family parameter x");
  return Line(x, -ipow(x, n));
}

PlanePoint intersect_family_lines(int n, double x, double y) {
  require_degree(n);
  require_finite(x, "x");
  require_finite(y, "y");
  if (x == y) throw CoincidentParameterError("Q_x and Q_y coincide for x == y");
  double p = 0.0;
  double x_pow = 1.0;
  for (int k = 0; k < n; ++k) {
    p += x_pow * ipow(y, n - 1 - k);
    x_pow *= x;
  }
  return PlanePoint(p, x * p - ipow(x, n));
}

PlanePoint envelope_touch_point(int n, double x) {
  require_degree(n);
  require_finite(x, "x");
  return PlanePoint(n * ipow(x, n - 1), (n - 1) * ipow(x, n));
}

namespace detail {

double envelope_plus(int n, double p) noexcept {
  const double ratio = std::abs(p / n);
  const double exponent = static_cast<double>(n) / (n - 1);
  // For even n the signed (n-1)-th root raised to the even power n is |.|.
  return (n - 1) * std::pow(ratio, exponent);
}

}  // namespace detail

namespace {

void require_in_domain(const EnvelopeSpec& spec, double p) {
  require_finite(p, "p");
  if (!spec.in_domain(p)) {
    throw DomainError("envelope of odd degree " + std::to_string(spec.degree()) +
                      " is only defined for p >= 0");
  }
}

}  // namespace

double envelope_value(const EnvelopeSpec& spec, double p) {
  require_in_domain(spec, p);
  const double e = detail::envelope_plus(spec.degree(), p);
  return spec.branch() == Branch::Plus ? e : -e;
}

double envelope_slope(const EnvelopeSpec& spec, double p) {
  require_in_domain(spec, p);
  const double s = signed_root(p / spec.degree(), spec.degree() - 1);
  return spec.branch() == Branch::Plus ? s : -s;
}

double numeric_intersection(const LineFamily& family, double x0, double x1) {
  const Line a = family.at(x0);
  const Line b = family.at(x1);
  const double dm = b.slope() - a.slope();
  if (dm == 0.0) throw DegenerateFamilyError("family members have equal slopes");
  return -(b.intercept() - a.intercept()) / dm;
}

double numeric_intersection(int n, double x, double eps) {
  require_degree(n);
  require_finite(x, "x");
  require_finite(eps, "eps");
  if (eps == 0.0) throw DegenerateFamilyError("eps must be nonzero");
  return numeric_intersection(LineFamily::monomial(n), x, x + eps);
}

NumericEnvelope numeric_envelope(const LineFamily& family, double x, double eps0, int levels) {
  require_finite(x, "x");
  if (!(eps0 > 0.0) || !std::isfinite(eps0)) throw DomainError("eps0 must be positive");
  if (levels < 2) throw DomainError("numeric_envelope needs at least 2 levels");

  std::vector<double> row;
  row.reserve(levels);
  double h = eps0;
  for (int k = 0; k < levels; ++k, h *= 0.5) {
    row.push_back(numeric_intersection(family, x - 0.5 * h, x + 0.5 * h));
  }

  NumericEnvelope out{row.front(), 0.0, {row.front()}, {}};
  double factor = 1.0;
  for (int j = 1; j < levels; ++j) {
    factor *= 4.0;
    for (std::size_t i = 0; i + 1 < row.size(); ++i) {
      row[i] = (factor * row[i + 1] - row[i]) / (factor - 1.0);
    }
    row.pop_back();
    out.error_history.push_back(std::abs(row.front() - out.estimates.back()));
    out.estimates.push_back(row.front());
  }
  out.p = out.estimates.back();
  out.error_estimate = out.error_history.back();

  const std::size_t m = out.error_history.size();
  const bool growing = m >= 2 && out.error_history[m - 1] > out.error_history[m - 2];
  if (!std::isfinite(out.p) || !std::isfinite(out.error_estimate) ||
      (growing && out.error_estimate > 1e-6 * std::fmax(1.0, std::abs(out.p)))) {
    throw ConvergenceError("numeric envelope: successive estimates diverge");
  }
  return out;
}

PlanePoint dual_of_line(const Line& line) { return PlanePoint(line.slope(), line.intercept()); }

Line dual_of_point(const PlanePoint& point) { return Line(-point.p(), point.q()); }

PlanePoint point_from_dual_line(const Line& dual) {
  return PlanePoint(-dual.slope(), dual.intercept());
}

Line line_from_dual_point(const PlanePoint& dual) { return Line(dual.p(), dual.q()); }

bool incident(const Line& line, const PlanePoint& point) noexcept {
  return line.slope() * point.p() + line.intercept() == point.q();
}

PlanePoint vieta_from_roots(double u, double v) { return PlanePoint(u + v, u * v); }

}  // namespace envsolve
