#include "envsolve/legendre.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "envsolve/envelope.hpp"
#include "envsolve/errors.hpp"
#include "envsolve/numeric.hpp"

namespace envsolve {

namespace {

constexpr double kConvexityRelTol = 1e-12;

bool strictly_increasing(std::span<const double> v) {
  return std::adjacent_find(v.begin(), v.end(), std::greater_equal<>()) == v.end();
}

bool secants_nondecreasing(std::span<const double> xs, std::span<const double> ys) {
  for (std::size_t i = 2; i < xs.size(); ++i) {
    const double s0 = (ys[i - 1] - ys[i - 2]) / (xs[i - 1] - xs[i - 2]);
    const double s1 = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - 1]);
    const double slack = kConvexityRelTol * std::fmax(1.0, std::fmax(std::abs(s0), std::abs(s1)));
    if (s1 < s0 - slack) return false;
  }
  return true;
}

}  // namespace

SampledFunction::SampledFunction(std::vector<double> xs, std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)), convex_(false) {
  if (xs_.empty()) throw DomainError("sampled function needs at least one sample");
  if (xs_.size() != ys_.size()) throw DomainError("xs and ys differ in length");
  for (std::size_t i = 0; i < xs_.size(); ++i) {
    if (!all_finite(xs_[i], ys_[i])) throw DomainError("samples must be finite");
  }
  if (!strictly_increasing(xs_)) throw DomainError("xs must be strictly increasing");
  convex_ = secants_nondecreasing(xs_, ys_);
}

SampledFunction SampledFunction::from_function(const std::function<double(double)>& f,
                                               double lo, double hi, std::size_t count) {
  if (count < 2 || !(lo < hi)) throw DomainError("need count >= 2 and lo < hi");
  std::vector<double> xs(count);
  std::vector<double> ys(count);
  const double step = (hi - lo) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    xs[i] = i + 1 == count ? hi : lo + static_cast<double>(i) * step;
    ys[i] = f(xs[i]);
  }
  return SampledFunction(std::move(xs), std::move(ys));
}

SlopeDomain::SlopeDomain(double lo, double hi) : lo_(lo), hi_(hi) {
  if (!all_finite(lo, hi) || lo > hi) throw DomainError("slope domain needs lo <= hi");
}

SlopeDomain secant_slope_domain(const SampledFunction& f) {
  if (f.size() < 2) throw DomainError("secant slopes need at least two samples");
  const auto xs = f.xs();
  const auto ys = f.ys();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const double s = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - 1]);
    lo = std::min(lo, s);
    hi = std::max(hi, s);
  }
  return SlopeDomain(lo, hi);
}

std::vector<double> uniform_slopes(const SlopeDomain& domain, std::size_t count) {
  if (domain.lo() == domain.hi() || count < 2) return {domain.lo()};
  std::vector<double> slopes(count);
  const double step = (domain.hi() - domain.lo()) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) slopes[i] = domain.lo() + static_cast<double>(i) * step;
  slopes.back() = domain.hi();
  return slopes;
}

double legendre_monomial(int n, double p) {
  if (n < 2 || n % 2 != 0) {
    throw DomainError("legendre_monomial needs even n >= 2 (x^n is not convex on R otherwise)");
  }
  if (!std::isfinite(p)) throw DomainError("p must be finite");
  return detail::envelope_plus(n, p);
}

TangentTransform tangent_intercept_transform(const std::function<double(double)>& f,
                                             const std::function<double(double)>& df,
                                             double x0) {
  const double p = df(x0);
  return TangentTransform{p, p * x0 - f(x0)};
}

DiscreteConjugate discrete_legendre_with_argmax(const SampledFunction& f,
                                                std::span<const double> slopes) {
  if (slopes.empty()) throw DomainError("no slopes requested");
  for (double s : slopes) {
    if (!std::isfinite(s)) throw DomainError("slopes must be finite");
  }
  if (!strictly_increasing(slopes)) throw DomainError("slopes must be strictly increasing");

  const auto xs = f.xs();
  const auto ys = f.ys();

  // Lower convex hull (Andrew's monotone chain; xs are already sorted).
  std::vector<std::size_t> hull;
  hull.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    while (hull.size() >= 2) {
      const std::size_t a = hull[hull.size() - 2];
      const std::size_t b = hull.back();
      const double cross = (xs[b] - xs[a]) * (ys[i] - ys[a]) - (ys[b] - ys[a]) * (xs[i] - xs[a]);
      if (cross > 0.0) break;
      hull.pop_back();
    }
    hull.push_back(i);
  }

  std::vector<double> values(slopes.size());
  std::vector<std::size_t> argmax(slopes.size());
  std::size_t k = 0;
  for (std::size_t j = 0; j < slopes.size(); ++j) {
    const double p = slopes[j];
    double best = p * xs[hull[k]] - ys[hull[k]];
    while (k + 1 < hull.size()) {
      const double next = p * xs[hull[k + 1]] - ys[hull[k + 1]];
      if (next < best) break;
      best = next;
      ++k;
    }
    values[j] = best;
    argmax[j] = hull[k];
  }
  return DiscreteConjugate{
      SampledFunction(std::vector<double>(slopes.begin(), slopes.end()), std::move(values)),
      std::move(argmax)};
}

SampledFunction discrete_legendre(const SampledFunction& f, std::span<const double> slopes) {
  return discrete_legendre_with_argmax(f, slopes).values;
}

std::vector<double> discrete_legendre_naive(const SampledFunction& f,
                                            std::span<const double> slopes) {
  const auto xs = f.xs();
  const auto ys = f.ys();
  std::vector<double> out(slopes.size(), -std::numeric_limits<double>::infinity());
  for (std::size_t j = 0; j < slopes.size(); ++j) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      out[j] = std::max(out[j], slopes[j] * xs[i] - ys[i]);
    }
  }
  return out;
}

InvolutionResult involution_check(const SampledFunction& f, double tol) {
  if (f.size() < 3) throw DomainError("involution check needs at least 3 samples");
  if (!f.is_convex()) throw ConvexityError("involution check requires convex samples");
  const std::vector<double> slopes = uniform_slopes(secant_slope_domain(f), f.size());
  const SampledFunction conj = discrete_legendre(f, slopes);
  const SampledFunction biconj = discrete_legendre(conj, f.xs());
  const auto ys = f.ys();
  const auto back = biconj.ys();
  double deviation = 0.0;
  for (std::size_t i = 1; i + 1 < ys.size(); ++i) {
    deviation = std::max(deviation, std::abs(back[i] - ys[i]));
  }
  return InvolutionResult{deviation, deviation <= tol};
}

}  // namespace envsolve
