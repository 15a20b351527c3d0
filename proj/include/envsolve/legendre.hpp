#pragma once

// Legendre transforms f*(p) = p x - f(x) with p = f'(x): closed form for x^n,
// the tangent-intercept construction, and a discrete transform on samples.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace envsolve {

/// Samples (xs[i], ys[i]) with strictly increasing, finite abscissae.
/// Convexity (nondecreasing secant slopes) is measured, not assumed.
class SampledFunction {
 public:
  SampledFunction(std::vector<double> xs, std::vector<double> ys);

  std::span<const double> xs() const noexcept { return xs_; }
  std::span<const double> ys() const noexcept { return ys_; }
  std::size_t size() const noexcept { return xs_.size(); }
  bool is_convex() const noexcept { return convex_; }

  /// Samples f at `count` uniform points of [lo, hi].
  static SampledFunction from_function(const std::function<double(double)>& f, double lo,
                                       double hi, std::size_t count);

 private:
  std::vector<double> xs_;
  std::vector<double> ys_;
  bool convex_;
};

/// Range of attainable tangent slopes.
class SlopeDomain {
 public:
  SlopeDomain(double lo, double hi);

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }

 private:
  double lo_;
  double hi_;
};

/// [min secant slope, max secant slope] of the samples (needs >= 2 samples).
SlopeDomain secant_slope_domain(const SampledFunction& f);

/// `count` uniform slopes over the domain; a single slope when lo == hi.
std::vector<double> uniform_slopes(const SlopeDomain& domain, std::size_t count);

/// Conjugate of x^n for even n: (n-1)(p/n)^(n/(n-1)). Bit-identical to the
/// Plus branch of the envelope. Odd n throws DomainError.
double legendre_monomial(int n, double p);

struct TangentTransform {
  double p;
  double fstar;
};

/// p = df(x0) and fstar = p*x0 - f(x0), the negated axis intercept of the
/// tangent to f at x0.
TangentTransform tangent_intercept_transform(const std::function<double(double)>& f,
                                             const std::function<double(double)>& df,
                                             double x0);

struct DiscreteConjugate {
  SampledFunction values;            // (slopes, f*(slopes))
  std::vector<std::size_t> argmax;   // sample index attaining each maximum
};

/// g(p) = max_i (p xs[i] - ys[i]) for strictly increasing slopes, in
/// O(|xs| + |slopes|): a lower convex hull of the samples followed by a
/// monotone sweep. Non-convex inputs are implicitly convexified.
DiscreteConjugate discrete_legendre_with_argmax(const SampledFunction& f,
                                                std::span<const double> slopes);

SampledFunction discrete_legendre(const SampledFunction& f, std::span<const double> slopes);

/// O(|xs| * |slopes|) reference used by tests and the parallel batch kernel.
std::vector<double> discrete_legendre_naive(const SampledFunction& f,
                                            std::span<const double> slopes);

struct InvolutionResult {
  double max_deviation;
  bool passed;
};

/// Transforms twice (slopes: uniform over the secant range, as many as there
/// are samples) and compares f** with f on interior samples.
/// Throws ConvexityError for non-convex input.
InvolutionResult involution_check(const SampledFunction& f, double tol);

}  // namespace envsolve
