#pragma once

// Data-parallel sweeps over many equations / slopes. Each kernel has an
// OpenMP version and a *_serial reference with identical results; the serial
// twins exist for tests and the benchmark.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "envsolve/envelope.hpp"
#include "envsolve/legendre.hpp"
#include "envsolve/roots.hpp"

namespace envsolve::batch {

/// n fixed, (p,q) on a count x count grid over [lo, hi]^2, p-major.
std::vector<EquationParams> param_grid(int n, double lo, double hi, int count);

struct SolveOutcome {
  std::optional<RootReport> report;
  std::string error;  // set when report is empty
};

std::vector<Classification> classify_all(std::span<const EquationParams> params,
                                         double boundary_tol = kDefaultBoundaryTol);
std::vector<Classification> classify_all_serial(std::span<const EquationParams> params,
                                                double boundary_tol = kDefaultBoundaryTol);

std::vector<SolveOutcome> solve_all(std::span<const EquationParams> params,
                                    const SolveOptions& options = {});
std::vector<SolveOutcome> solve_all_serial(std::span<const EquationParams> params,
                                           const SolveOptions& options = {});

std::vector<int> brute_force_count_all(std::span<const EquationParams> params, int grid);
std::vector<int> brute_force_count_all_serial(std::span<const EquationParams> params, int grid);

/// Envelope values; NaN where p lies outside the branch's domain.
std::vector<double> envelope_samples(const EnvelopeSpec& spec, std::span<const double> ps);
std::vector<double> envelope_samples_serial(const EnvelopeSpec& spec, std::span<const double> ps);

/// Max over samples per slope by exhaustive search, parallel over slopes.
/// Reference for discrete_legendre(); identical values to the serial naive form.
std::vector<double> conjugate_exhaustive(const SampledFunction& f, std::span<const double> slopes);

/// Number of worker threads the parallel kernels will use.
int thread_count() noexcept;

}  // namespace envsolve::batch
