#include <cmath>
#include <limits>

#include "envsolve/batch.hpp"
#include "envsolve/errors.hpp"

namespace envsolve::batch {

std::vector<EquationParams> param_grid(int n, double lo, double hi, int count) {
  if (count < 2 || !(lo < hi)) throw DomainError("param_grid needs count >= 2 and lo < hi");
  std::vector<EquationParams> out;
  out.reserve(static_cast<std::size_t>(count) * count);
  const double step = (hi - lo) / (count - 1);
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < count; ++j) out.emplace_back(n, lo + i * step, lo + j * step);
  }
  return out;
}

std::vector<Classification> classify_all_serial(std::span<const EquationParams> params,
                                                double boundary_tol) {
  std::vector<Classification> out;
  out.reserve(params.size());
  for (const auto& eq : params) out.push_back(classify(eq, boundary_tol));
  return out;
}

std::vector<SolveOutcome> solve_all_serial(std::span<const EquationParams> params,
                                           const SolveOptions& options) {
  std::vector<SolveOutcome> out(params.size());
  for (std::size_t i = 0; i < params.size(); ++i) {
    try {
      out[i].report = solve(params[i], options);
    } catch (const std::exception& e) {
      out[i].error = e.what();
    }
  }
  return out;
}

std::vector<int> brute_force_count_all_serial(std::span<const EquationParams> params, int grid) {
  std::vector<int> out;
  out.reserve(params.size());
  for (const auto& eq : params) out.push_back(brute_force_count(eq, grid));
  return out;
}

std::vector<double> envelope_samples_serial(const EnvelopeSpec& spec, std::span<const double> ps) {
  std::vector<double> out;
  out.reserve(ps.size());
  for (double p : ps) {
    out.push_back(spec.in_domain(p) ? envelope_value(spec, p)
                                    : std::numeric_limits<double>::quiet_NaN());
  }
  return out;
}

}  // namespace envsolve::batch
