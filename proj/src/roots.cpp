#include "envsolve/roots.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "envsolve/errors.hpp"
#include "envsolve/numeric.hpp"

namespace envsolve {

EquationParams::EquationParams(int n, double p, double q) : n_(n), p_(p), q_(q) {
  if (n < 2) throw DomainError("degree n must be >= 2, got " + std::to_string(n));
  if (!std::isfinite(p) || !std::isfinite(q)) throw DomainError("p and q must be finite");
}

double EquationParams::value(double x) const noexcept { return ipow(x, n_) - p_ * x + q_; }

double EquationParams::derivative(double x) const noexcept {
  return n_ * ipow(x, n_ - 1) - p_;
}

namespace {

constexpr std::array<std::pair<Regime, std::string_view>, 8> kRegimeNames{{
    {Regime::Above, "Above"},
    {Regime::OnEnvelope, "OnEnvelope"},
    {Regime::Below, "Below"},
    {Regime::BetweenBranches, "BetweenBranches"},
    {Regime::OnBranch, "OnBranch"},
    {Regime::OutsideBranches, "OutsideBranches"},
    {Regime::OnAxisOdd, "OnAxisOdd"},
    {Regime::Origin, "Origin"},
}};

bool is_even(int n) { return n % 2 == 0; }

}  // namespace

std::string_view to_string(Regime regime) noexcept {
  for (const auto& [r, name] : kRegimeNames) {
    if (r == regime) return name;
  }
  return "Unknown";
}

std::optional<Regime> regime_from_string(std::string_view name) noexcept {
  for (const auto& [r, s] : kRegimeNames) {
    if (s == name) return r;
  }
  return std::nullopt;
}

double discriminant(const EquationParams& params) {
  const int n = params.n();
  return ipow(params.p() / n, n) - ipow(params.q() / (n - 1), n - 1);
}

double discriminant_scale(const EquationParams& params) {
  const int n = params.n();
  return std::fmax(std::abs(ipow(params.p() / n, n)),
                   std::abs(ipow(params.q() / (n - 1), n - 1)));
}

Classification classify(const EquationParams& params, double boundary_tol) {
  if (!(boundary_tol >= 0.0)) throw DomainError("boundary_tol must be >= 0");
  const int n = params.n();
  const double p = params.p();
  const double q = params.q();
  const double d = discriminant(params);

  if (is_even(n)) {
    const double e = detail::envelope_plus(n, p);
    const double tau = boundary_tol * std::fmax(1.0, std::abs(e));
    if (q < e - tau) return {2, Regime::Below, d};
    if (q > e + tau) return {0, Regime::Above, d};
    return {1, Regime::OnEnvelope, d};
  }

  if (p <= 0.0) {
    if (p == 0.0 && q == 0.0) return {1, Regime::Origin, d};
    return {1, Regime::OutsideBranches, d};
  }
  if (q == 0.0) return {3, Regime::OnAxisOdd, d};
  const double e = detail::envelope_plus(n, p);
  const double tau = boundary_tol * std::fmax(1.0, e);
  const double abs_q = std::abs(q);
  if (abs_q < e - tau) return {3, Regime::BetweenBranches, d};
  if (abs_q > e + tau) return {1, Regime::OutsideBranches, d};
  return {2, Regime::OnBranch, d};
}

double root_bound(const EquationParams& params) noexcept {
  return 1.0 + std::fmax(std::abs(params.p()), std::abs(params.q()));
}

std::vector<double> critical_points(const EquationParams& params) {
  const int n = params.n();
  const double c = signed_root(params.p() / n, n - 1);
  if (is_even(n)) return {c};
  if (params.p() < 0.0) return {};
  if (params.p() == 0.0) return {0.0};
  return {-c, c};
}

namespace {

/// Root of g in [lo, hi] given the sign of g at lo (the sign at hi is opposite).
/// Newton steps are taken while they stay inside the shrinking bracket and
/// halve the step length; otherwise the bracket is bisected.
double refine_bracketed(const EquationParams& g, double lo, double hi, int sign_lo,
                        const SolveOptions& opt) {
  double x = 0.5 * (lo + hi);
  double step_before_last = hi - lo;
  double last_step = step_before_last;
  for (int it = 0; it < opt.max_iter; ++it) {
    const double fx = g.value(x);
    if (fx == 0.0) return x;
    if ((fx > 0.0) == (sign_lo > 0)) {
      lo = x;
    } else {
      hi = x;
    }
    const double dfx = g.derivative(x);
    double next = 0.5 * (lo + hi);
    if (dfx != 0.0) {
      const double newton = x - fx / dfx;
      if (newton > lo && newton < hi && std::abs(newton - x) < 0.5 * step_before_last) {
        next = newton;
      }
    }
    step_before_last = last_step;
    last_step = std::abs(next - x);
    x = next;
    const double scale = std::fmax(1.0, std::abs(x));
    if (last_step <= opt.tol * scale || (hi - lo) <= opt.tol * scale) return x;
  }
  throw ConvergenceError("root refinement did not reach tol " + std::to_string(opt.tol) +
                         " within " + std::to_string(opt.max_iter) + " iterations");
}

Root make_root(const EquationParams& g, double x, int multiplicity) {
  return Root{x, multiplicity, std::abs(g.value(x))};
}

}  // namespace

RootReport solve(const EquationParams& params, const SolveOptions& options) {
  if (!(options.tol > 0.0)) throw DomainError("tol must be positive");
  if (options.max_iter < 1) throw DomainError("max_iter must be positive");

  const Classification cls = classify(params, options.boundary_tol);
  const int n = params.n();
  const double p = params.p();
  const double q = params.q();
  const double bound = root_bound(params);
  const double c = signed_root(p / n, n - 1);

  RootReport report{params, cls, {}};
  auto& roots = report.roots;
  auto bracket = [&](double lo, double hi, int sign_lo) {
    roots.push_back(make_root(params, refine_bracketed(params, lo, hi, sign_lo, options), 1));
  };

  switch (cls.regime) {
    case Regime::Above:
      break;
    case Regime::OnEnvelope:
      roots.push_back(make_root(params, c, (p == 0.0 && q == 0.0) ? n : 2));
      break;
    case Regime::Below:
      bracket(-bound, c, +1);
      bracket(c, bound, -1);
      break;
    case Regime::Origin:
      roots.push_back(make_root(params, 0.0, n));
      break;
    case Regime::OnAxisOdd: {
      const double r = signed_root(p, n - 1);
      roots.push_back(make_root(params, -r, 1));
      roots.push_back(make_root(params, 0.0, 1));
      roots.push_back(make_root(params, r, 1));
      break;
    }
    case Regime::BetweenBranches:
      bracket(-bound, -c, -1);
      bracket(-c, c, +1);
      bracket(c, bound, -1);
      break;
    case Regime::OnBranch:
      // Tangent to +e for q > 0 (double root at +c), to -e for q < 0.
      if (q > 0.0) {
        bracket(-bound, -c, -1);
        roots.push_back(make_root(params, c, 2));
      } else {
        roots.push_back(make_root(params, -c, 2));
        bracket(c, bound, -1);
      }
      break;
    case Regime::OutsideBranches:
      if (p <= 0.0) {
        bracket(-bound, bound, -1);
      } else if (q > 0.0) {
        bracket(-bound, -c, -1);
      } else {
        bracket(c, bound, -1);
      }
      break;
  }
  std::sort(roots.begin(), roots.end(),
            [](const Root& a, const Root& b) { return a.value < b.value; });
  return report;
}

std::vector<Line> tangent_lines_through(const EquationParams& params, const SolveOptions& options) {
  const RootReport report = solve(params, options);
  std::vector<Line> lines;
  lines.reserve(report.roots.size());
  for (const Root& r : report.roots) lines.push_back(family_line(params.n(), r.value));
  return lines;
}

DepressedCubic depress_cubic(const CubicGeneral& cubic) {
  const double b = cubic.b;
  const double c = cubic.c;
  const double d = cubic.d;
  if (!all_finite(b, c, d)) throw DomainError("cubic coefficients must be finite");
  const double p = b * b / 3.0 - c;
  const double q = d - b * c / 3.0 + 2.0 * b * b * b / 27.0;
  return DepressedCubic{EquationParams(3, p, q), b / 3.0};
}

}  // namespace envsolve
