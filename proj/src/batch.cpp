#include <algorithm>
#include <cmath>
#include <limits>

#include "envsolve/batch.hpp"
#include "envsolve/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace envsolve::batch {

int thread_count() noexcept {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<Classification> classify_all(std::span<const EquationParams> params,
                                         double boundary_tol) {
  if (!(boundary_tol >= 0.0)) throw DomainError("boundary_tol must be >= 0");
  std::vector<Classification> out(params.size(), Classification{0, Regime::Above, 0.0});
  const auto count = static_cast<std::ptrdiff_t>(params.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i) out[i] = classify(params[i], boundary_tol);
  return out;
}

std::vector<SolveOutcome> solve_all(std::span<const EquationParams> params,
                                    const SolveOptions& options) {
  std::vector<SolveOutcome> out(params.size());
  const auto count = static_cast<std::ptrdiff_t>(params.size());
  // Exceptions must not cross the parallel region; each item records its own.
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      out[i].report = solve(params[i], options);
    } catch (const std::exception& e) {
      out[i].error = e.what();
    }
  }
  return out;
}

std::vector<int> brute_force_count_all(std::span<const EquationParams> params, int grid) {
  if (grid < 1000) throw DomainError("brute_force_count needs grid >= 1000");
  std::vector<int> out(params.size(), 0);
  const auto count = static_cast<std::ptrdiff_t>(params.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < count; ++i) out[i] = brute_force_count(params[i], grid);
  return out;
}

std::vector<double> envelope_samples(const EnvelopeSpec& spec, std::span<const double> ps) {
  std::vector<double> out(ps.size());
  const auto count = static_cast<std::ptrdiff_t>(ps.size());
  const double sign = spec.branch() == Branch::Plus ? 1.0 : -1.0;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    out[i] = spec.in_domain(ps[i]) ? sign * detail::envelope_plus(spec.degree(), ps[i])
                                   : std::numeric_limits<double>::quiet_NaN();
  }
  return out;
}

std::vector<double> conjugate_exhaustive(const SampledFunction& f, std::span<const double> slopes) {
  const auto xs = f.xs();
  const auto ys = f.ys();
  std::vector<double> out(slopes.size());
  const auto count = static_cast<std::ptrdiff_t>(slopes.size());
  const auto samples = static_cast<std::ptrdiff_t>(xs.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t j = 0; j < count; ++j) {
    double best = -std::numeric_limits<double>::infinity();
    for (std::ptrdiff_t i = 0; i < samples; ++i) best = std::max(best, slopes[j] * xs[i] - ys[i]);
    out[j] = best;
  }
  return out;
}

}  // namespace envsolve::batch
