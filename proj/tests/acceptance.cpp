// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include <httplib.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "envsolve/api.hpp"
#include "envsolve/batch.hpp"
#include "envsolve/cli.hpp"
#include "envsolve/envelope.hpp"
#include "envsolve/legendre.hpp"
#include "envsolve/plot.hpp"
#include "envsolve/roots.hpp"
#include "envsolve/server.hpp"

using namespace envsolve;
using nlohmann::json;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

bool roots_match(const RootReport& r, std::vector<double> expected, double tol, double* worst) {
  std::sort(expected.begin(), expected.end());
  if (r.roots.size() != expected.size()) return false;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const double e = std::abs(r.roots[i].value - expected[i]);
    if (worst) *worst = std::max(*worst, e);
    if (!(e <= tol)) return false;
  }
  return true;
}

Outcome example_one() {
  const auto t0 = Clock::now();
  const RootReport r = solve(EquationParams(2, 3, 2));
  const double ms = ms_since(t0);
  double worst = 0.0;
  const bool ok = roots_match(r, {1, 2}, 1e-10, &worst);
  return {ok && ms < 1.0, "roots {1,2} err " + fmt("%.1e", worst) + ", " + fmt("%.4f", ms) + " ms"};
}

Outcome example_two() {
  double worst = 0.0;
  const bool ok = roots_match(solve(EquationParams(2, 1, -2)), {-1, 2}, 1e-10, &worst);
  return {ok, "roots {-1,2} err " + fmt("%.1e", worst)};
}

Outcome envelope_closed_forms() {
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double p2 = -10.0 + 20.0 * i / 99;
    const double e2 = p2 * p2 / 4;
    worst = std::max(worst, std::abs(envelope_value(EnvelopeSpec(2), p2) - e2) /
                                std::max(std::abs(e2), 1e-300));
    const double p3 = 0.1 + 9.9 * i / 99;
    const double e3 = 2 * std::pow(p3 / 3, 1.5);
    worst = std::max(worst, std::abs(envelope_value(EnvelopeSpec(3), p3) - e3) / e3);
  }
  return {worst <= 1e-14, "max rel err " + fmt("%.2e", worst)};
}

Outcome numeric_vs_closed_form() {
  double worst = 0.0;
  int cases = 0;
  for (int n = 2; n <= 8; ++n) {
    for (int x = -3; x <= 3; ++x) {
      const double exact = n * std::pow(static_cast<double>(x), n - 1);
      double p = NAN;
      try {
        p = numeric_envelope(LineFamily::monomial(n), x, 0.5, 6).p;
      } catch (const std::exception&) {
      }
      worst = std::max(worst, std::isfinite(p) ? std::abs(p - exact) / std::max(1.0, std::abs(exact))
                                               : INFINITY);
      ++cases;
    }
  }
  return {worst <= 1e-8, std::to_string(cases) + " cases, max rel err " + fmt("%.2e", worst)};
}

bool is_boundary(Regime r) {
  return r == Regime::OnEnvelope || r == Regime::OnBranch || r == Regime::Origin;
}

bool is_maximal(Regime r) {
  return r == Regime::Below || r == Regime::BetweenBranches || r == Regime::OnAxisOdd;
}

struct Sweep {
  std::vector<EquationParams> params;
  std::vector<Classification> classes;
  std::vector<int> oracle;
  double ms = 0.0;
};

const Sweep& sweep() {
  static const Sweep s = [] {
    Sweep out;
    const auto t0 = Clock::now();
    for (int n = 2; n <= 7; ++n) {
      const auto grid = batch::param_grid(n, -5, 5, 41);
      out.params.insert(out.params.end(), grid.begin(), grid.end());
    }
    out.classes = batch::classify_all(out.params);
    out.oracle = batch::brute_force_count_all(out.params, 20000);
    out.ms = ms_since(t0);
    return out;
  }();
  return s;
}

Outcome classification_sweep() {
  const Sweep& s = sweep();
  int interior = 0;
  int agree = 0;
  int boundary = 0;
  int boundary_ok = 0;
  for (std::size_t i = 0; i < s.params.size(); ++i) {
    const double d = discriminant(s.params[i]);
    if (std::abs(d) > 1e-6 * discriminant_scale(s.params[i])) {
      ++interior;
      agree += s.oracle[i] == s.classes[i].distinct_count;
    } else {
      ++boundary;
      boundary_ok += is_boundary(s.classes[i].regime);
    }
  }
  const bool ok = agree == interior && boundary_ok == boundary && s.ms < 30000.0;
  return {ok, std::to_string(agree) + "/" + std::to_string(interior) + " interior, " +
                  std::to_string(boundary_ok) + "/" + std::to_string(boundary) + " boundary, " +
                  fmt("%.0f", s.ms) + " ms on " + std::to_string(batch::thread_count()) +
                  " threads"};
}

Outcome discriminant_signs() {
  const Sweep& s = sweep();
  std::size_t agree = 0;
  for (std::size_t i = 0; i < s.params.size(); ++i) {
    const double d = discriminant(s.params[i]);
    const Regime r = s.classes[i].regime;
    const bool boundary = !(std::abs(d) > 1e-6 * discriminant_scale(s.params[i]));
    const bool ok = boundary ? is_boundary(r) : (d > 0) == is_maximal(r) && !is_boundary(r);
    agree += ok;
  }
  return {agree == s.params.size(),
          std::to_string(agree) + "/" + std::to_string(s.params.size()) + " agree"};
}

Outcome vieta() {
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  double worst = 0.0;
  int failures = 0;
  for (int i = 0; i < 1000; ++i) {
    const double a = u(rng);
    const double b = u(rng);
    const PlanePoint pq = vieta_from_roots(a, b);
    if (!(pq.p() == a + b && pq.q() == a * b)) ++failures;
    const PlanePoint meet = intersect_family_lines(2, a, b);
    if (!(meet.p() == a + b)) ++failures;
    if (!roots_match(solve(EquationParams(2, pq.p(), pq.q())), {a, b}, 1e-9, &worst)) ++failures;
  }
  return {failures == 0, std::to_string(1000 - failures) + "/1000, max root err " + fmt("%.1e", worst)};
}

Outcome duality() {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> u(-1000, 1000);
  int failures = 0;
  for (int i = 0; i < 1000; ++i) {
    const Line line(u(rng), u(rng));
    const double p = u(rng);
    const bool on = i % 2 == 0;
    const PlanePoint point(p, on ? line.at(p) : line.at(p) + 1 + (i % 7));
    const bool before = incident(line, point);
    // (m,b) lies on the dual of (p,q) iff (p,q) lies on y = m x + b.
    const bool after = incident(dual_of_point(point), dual_of_line(line));
    if (before != on || after != on) ++failures;
    if (!(point_from_dual_line(dual_of_point(point)) == point)) ++failures;
    if (!(line_from_dual_point(dual_of_line(line)) == line)) ++failures;
  }
  return {failures == 0, std::to_string(failures) + " failures in 1000 pairs"};
}

double halving_gain(double (*fn)(double), double lo, double hi, std::size_t coarse, double* d1,
                    double* d2) {
  *d1 = involution_check(SampledFunction::from_function(fn, lo, hi, coarse), 1.0).max_deviation;
  *d2 = involution_check(SampledFunction::from_function(fn, lo, hi, 2 * coarse - 1), 1.0)
            .max_deviation;
  return *d2 == 0.0 ? INFINITY : *d1 / *d2;
}

Outcome legendre() {
  bool identity = true;
  for (int n : {2, 4, 6}) {
    for (int i = 0; i <= 2000; ++i) {
      const double p = -10.0 + 0.01 * i;
      identity = identity && legendre_monomial(n, p) == envelope_value(EnvelopeSpec(n), p);
    }
  }

  const auto sq = SampledFunction::from_function([](double x) { return x * x; }, -3, 3, 201);
  std::vector<double> slopes;
  for (int j = 0; j <= 80; ++j) slopes.push_back(-4.0 + 0.1 * j);
  const SampledFunction conj = discrete_legendre(sq, slopes);
  const auto g = conj.ys();
  double worst = 0.0;
  for (std::size_t j = 0; j < slopes.size(); ++j) {
    worst = std::max(worst, std::abs(g[j] - slopes[j] * slopes[j] / 4));
  }

  double s1 = 0, s2 = 0, c1 = 0, c2 = 0, q1 = 0, q2 = 0;
  auto square = [](double x) { return x * x; };
  auto cosh_fn = [](double x) { return std::cosh(x); };
  auto quartic = [](double x) { return x * x * x * x; };
  halving_gain(square, -3, 3, 201, &s1, &s2);
  const double cosh_gain = halving_gain(cosh_fn, -2, 2, 201, &c1, &c2);
  const double quartic_gain = halving_gain(quartic, -2, 2, 401, &q1, &q2);
  const bool halving = s2 * 3 <= s1 && c2 * 3 <= c1;

  std::ostringstream detail;
  detail << "bit-identical " << (identity ? "yes" : "no") << "; x^2 conjugate err "
         << fmt("%.1e", worst) << "; halving x^2 " << fmt("%.1e", s1) << "->" << fmt("%.1e", s2)
         << ", cosh " << fmt("%.2f", cosh_gain) << "x (x^4 " << fmt("%.2f", quartic_gain)
         << "x, see README)";
  return {identity && worst <= 5e-3 && halving, detail.str()};
}

Outcome depressed_cubic() {
  const DepressedCubic d = depress_cubic({-6, 11, -6});
  const bool exact = d.params == EquationParams(3, 1, 0) && d.shift == -2.0;
  const RootReport r = solve(d.params);
  std::vector<double> xs;
  for (const Root& root : r.roots) xs.push_back(root.value - d.shift);
  double worst = 0.0;
  bool roots_ok = xs.size() == 3;
  for (std::size_t i = 0; roots_ok && i < 3; ++i) {
    worst = std::max(worst, std::abs(xs[i] - (i + 1.0)));
    roots_ok = worst <= 1e-8;
  }
  return {exact && roots_ok, std::string("(p,q,shift) ") + (exact ? "exact" : "WRONG") +
                                 ", roots err " + fmt("%.1e", worst)};
}

std::size_t occurrences(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

Outcome golden_svg() {
  plot::PlotSpec tangent;
  tangent.kind = plot::PlotKind::TangentConstruction;
  tangent.n = 2;
  tangent.params = PlanePoint(1, -2);
  const std::string a = plot::render_svg(tangent);
  const std::string b = plot::render_svg(tangent);
  plot::PlotSpec env;
  env.n = 3;
  const std::size_t tangents = occurrences(a, "class=\"tangent\"");
  const std::size_t branches = occurrences(plot::render_svg(env), "class=\"envelope-branch\"");
  return {a == b && tangents == 2 && branches == 2,
          std::string(a == b ? "identical" : "DIFFERENT") + ", " + std::to_string(tangents) +
              " tangents, " + std::to_string(branches) + " branch paths"};
}

Outcome api_parity() {
  Server server(api::ServiceConfig{});
  const int port = server.bind("127.0.0.1", 0);
  if (port <= 0) return {false, "could not bind"};
  std::thread listener([&] { server.listen(); });
  for (int i = 0; i < 400 && !server.running(); ++i) {
    std::this_thread::sleep_for(std::chrono::milliseconds(5));
  }
  httplib::Client client("127.0.0.1", port);
  client.set_read_timeout(10);

  const std::vector<std::array<double, 3>> corpus{
      {2, 3, 2},    {2, 1, -2},  {2, 0, 1},     {2, 2, 1},   {2, 0, 0},   {3, 3, 0},
      {3, 3, 2},    {3, 3, -2},  {3, 3, 1},     {3, -1, 1},  {3, 0, 0},   {4, 4, 3},
      {4, 4, -5},   {4, 0, 2},   {5, 5, 4},     {5, 7.3, 1.1}, {6, -2, -1}, {7, 1.5, 0.25},
      {8, 10, 3},   {4, 2.5, -0.75}};
  int same = 0;
  for (const auto& [n, p, q] : corpus) {
    std::ostringstream out;
    std::ostringstream err;
    std::ostringstream sp;
    std::ostringstream sq;
    sp.precision(17);
    sq.precision(17);
    sp << p;
    sq << q;
    const int code = cli::run({"solve", "--n", std::to_string(static_cast<int>(n)), "--p",
                               sp.str(), "--q=" + sq.str()},
                              out, err);
    const json body{{"n", static_cast<int>(n)}, {"p", p}, {"q", q}};
    const auto res = client.Post("/api/solve", body.dump(), "application/json");
    if (code == cli::kOk && res && res->status == 200) {
      const json served = json::parse(res->body);
      same += served["ok"] == true && served["payload"] == json::parse(out.str());
    }
  }
  const auto health = client.Get("/api/health");
  const bool healthy = health && health->status == 200 &&
                       json::parse(health->body)["payload"]["status"] == "healthy";
  server.stop();
  listener.join();
  return {same == static_cast<int>(corpus.size()) && healthy,
          std::to_string(same) + "/" + std::to_string(corpus.size()) + " identical, health " +
              (healthy ? "ok" : "FAILED")};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"example solve(2,3,2)", example_one},
      {"example solve(2,1,-2)", example_two},
      {"envelope closed forms", envelope_closed_forms},
      {"numeric envelope vs closed form", numeric_vs_closed_form},
      {"classification oracle sweep", classification_sweep},
      {"discriminant sign equivalence", discriminant_signs},
      {"vieta", vieta},
      {"duality incidence", duality},
      {"legendre", legendre},
      {"depressed cubic", depressed_cubic},
      {"golden svg", golden_svg},
      {"api parity", api_parity},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    failed += !o.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
