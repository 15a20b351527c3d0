#include <algorithm>
#include <cmath>
#include <vector>

#include "envsolve/errors.hpp"
#include "envsolve/numeric.hpp"
#include "envsolve/roots.hpp"

namespace envsolve {

namespace {

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

// Solutions of n x^(n-1) = p, computed directly with pow so the oracle does
// not share the solver's root helper.
std::vector<double> stationary_points(int n, double p) {
  const double a = std::pow(std::abs(p) / n, 1.0 / (n - 1));
  if (n % 2 == 0) return {p < 0.0 ? -a : a};
  if (p < 0.0) return {};
  return {-a, a};
}

}  // namespace

int brute_force_count(const EquationParams& params, int grid) {
  if (grid < 1000) throw DomainError("brute_force_count needs grid >= 1000");
  const int n = params.n();
  const double bound = 1.0 + std::fmax(std::abs(params.p()), std::abs(params.q()));
  const double step = 2.0 * bound / grid;

  struct Node {
    double x;
    bool critical;
  };
  std::vector<Node> nodes;
  nodes.reserve(static_cast<std::size_t>(grid) + 3);
  for (int i = 0; i <= grid; ++i) nodes.push_back({-bound + i * step, false});
  for (double xc : stationary_points(n, params.p())) {
    if (xc > -bound && xc < bound) nodes.push_back({xc, true});
  }
  std::sort(nodes.begin(), nodes.end(), [](const Node& a, const Node& b) { return a.x < b.x; });

  std::vector<double> g(nodes.size());
  std::vector<bool> is_root(nodes.size(), false);
  int count = 0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double x = nodes[i].x;
    g[i] = params.value(x);
    bool root = g[i] == 0.0;
    if (nodes[i].critical) {
      const double threshold =
          1e-9 * std::fmax(1.0, std::fmax(std::abs(params.p() * x), std::abs(ipow(x, n))));
      root = root || std::abs(g[i]) <= threshold;
    }
    // A node coinciding with an already-counted neighbour is the same root.
    if (root && !(i > 0 && is_root[i - 1] && nodes[i - 1].x == x)) ++count;
    is_root[i] = root;
  }
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    if (is_root[i] || is_root[i + 1]) continue;
    if (sign_of(g[i]) * sign_of(g[i + 1]) < 0) ++count;
  }
  return count;
}

}  // namespace envsolve
