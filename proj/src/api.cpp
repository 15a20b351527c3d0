#include "envsolve/api.hpp"

#include <cmath>
#include <cstdlib>

#include "envsolve/csv.hpp"
#include "envsolve/envelope.hpp"

namespace envsolve::api {

namespace {

double parse_env_double(const char* name, double fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(raw, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || raw[used] != '\0' || !std::isfinite(v)) {
    throw FormatError(std::string("environment variable ") + name + " is not a number: " + raw);
  }
  return v;
}

const json& require_object(const json& request) {
  if (!request.is_object()) throw RequestError("request body must be a JSON object");
  return request;
}

int get_int(const json& req, const char* key) {
  const auto it = req.find(key);
  if (it == req.end()) throw RequestError(std::string("missing field '") + key + "'");
  if (!it->is_number_integer()) throw RequestError(std::string("field '") + key + "' must be an integer");
  const auto v = it->get<long long>();
  if (v < -1000000 || v > 1000000) throw RequestError(std::string("field '") + key + "' out of range");
  return static_cast<int>(v);
}

double get_number(const json& req, const char* key) {
  const auto it = req.find(key);
  if (it == req.end()) throw RequestError(std::string("missing field '") + key + "'");
  if (!it->is_number()) throw RequestError(std::string("field '") + key + "' must be a number");
  return it->get<double>();
}

double get_number_or(const json& req, const char* key, double fallback) {
  return req.contains(key) ? get_number(req, key) : fallback;
}

EquationParams equation_from(const json& req) {
  require_object(req);
  return EquationParams(get_int(req, "n"), get_number(req, "p"), get_number(req, "q"));
}

SolveOptions options_from(const json& req, const ServiceConfig& config) {
  SolveOptions opt;
  opt.tol = get_number_or(req, "tol", config.tol);
  opt.boundary_tol = get_number_or(req, "boundary_tol", config.boundary_tol);
  return opt;
}

json line_json(const Line& l) { return json{{"slope", l.slope()}, {"intercept", l.intercept()}}; }

json ok(json payload) { return json{{"ok", true}, {"payload", std::move(payload)}}; }

json failure(const std::string& message) { return json{{"ok", false}, {"error", message}}; }

}  // namespace

ServiceConfig ServiceConfig::from_env() {
  ServiceConfig c;
  c.tol = parse_env_double("ENVELOPE_TOL", c.tol);
  c.boundary_tol = parse_env_double("ENVELOPE_BOUNDARY_TOL", c.boundary_tol);
  const double samples = parse_env_double("ENVELOPE_SAMPLES", c.samples);
  if (samples != std::floor(samples) || samples < 1 || samples > 1e6) {
    throw FormatError("ENVELOPE_SAMPLES must be a positive integer");
  }
  c.samples = static_cast<int>(samples);
  return c;
}

json classification_json(const EquationParams& params, const Classification& c) {
  return json{{"n", params.n()},
              {"p", params.p()},
              {"q", params.q()},
              {"count", c.distinct_count},
              {"regime", std::string(to_string(c.regime))},
              {"discriminant", c.discriminant}};
}

json report_json(const RootReport& report) {
  const auto& c = report.classification;
  json roots = json::array();
  for (const Root& r : report.roots) {
    roots.push_back(json{{"value", r.value}, {"multiplicity", r.multiplicity}, {"residual", r.residual}});
  }
  return json{{"n", report.params.n()},
              {"p", report.params.p()},
              {"q", report.params.q()},
              {"count", c.distinct_count},
              {"discriminant", c.discriminant},
              {"classification",
               json{{"count", c.distinct_count},
                    {"regime", std::string(to_string(c.regime))},
                    {"discriminant", c.discriminant}}},
              {"roots", std::move(roots)}};
}

json solve_payload(const json& request, const ServiceConfig& config) {
  const EquationParams params = equation_from(request);
  return report_json(solve(params, options_from(request, config)));
}

json classify_payload(const json& request, const ServiceConfig& config) {
  const EquationParams params = equation_from(request);
  const double boundary_tol = get_number_or(request, "boundary_tol", config.boundary_tol);
  return classification_json(params, classify(params, boundary_tol));
}

json envelope_payload(const json& request, const ServiceConfig& config) {
  require_object(request);
  const int n = get_int(request, "n");
  const bool odd = n % 2 != 0;
  const double pmin = get_number_or(request, "pmin", odd ? 0.0 : -4.0);
  const double pmax = get_number_or(request, "pmax", 4.0);
  const int samples = request.contains("samples") ? get_int(request, "samples") : config.samples;
  if (samples < 1 || samples > 100000) throw RequestError("samples must be in [1, 100000]");

  const csv::EnvelopeTable table = csv::envelope_table(n, pmin, pmax, samples);
  auto branch = [&](const char* name, const std::vector<double>& values) {
    json pts = json::array();
    for (std::size_t i = 0; i < table.ps.size(); ++i) pts.push_back(json::array({table.ps[i], values[i]}));
    return json{{"branch", name}, {"points", std::move(pts)}};
  };
  json branches = json::array({branch("Plus", table.plus)});
  if (odd) branches.push_back(branch("Minus", table.minus));
  return json{{"n", n}, {"pmin", pmin}, {"pmax", pmax}, {"samples", samples}, {"branches", std::move(branches)}};
}

json tangents_payload(const json& request, const ServiceConfig& config) {
  const EquationParams params = equation_from(request);
  const RootReport report = solve(params, options_from(request, config));
  json lines = json::array();
  for (const Root& r : report.roots) {
    const Line l = family_line(params.n(), r.value);
    const PlanePoint t = envelope_touch_point(params.n(), r.value);
    json entry = line_json(l);
    entry["root"] = r.value;
    entry["touch"] = json{{"p", t.p()}, {"q", t.q()}};
    lines.push_back(std::move(entry));
  }
  return json{{"n", params.n()},
              {"p", params.p()},
              {"q", params.q()},
              {"count", report.classification.distinct_count},
              {"lines", std::move(lines)}};
}

json dual_payload(const json& request) {
  require_object(request);
  const bool has_point = request.contains("point");
  const bool has_line = request.contains("line");
  if (has_point == has_line) throw RequestError("give exactly one of 'point' or 'line'");
  if (has_point) {
    const json& pt = require_object(request.at("point"));
    const PlanePoint point(get_number(pt, "p"), get_number(pt, "q"));
    return json{{"point", json{{"p", point.p()}, {"q", point.q()}}},
                {"dual_line", line_json(dual_of_point(point))}};
  }
  const json& ln = require_object(request.at("line"));
  const Line line(get_number(ln, "slope"), get_number(ln, "intercept"));
  const PlanePoint d = dual_of_line(line);
  return json{{"line", line_json(line)}, {"dual_point", json{{"m", d.p()}, {"n", d.q()}}}};
}

Reply dispatch(std::string_view op, std::string_view body, const ServiceConfig& config) {
  try {
    const json request = json::parse(body.begin(), body.end());
    json payload;
    if (op == "solve") {
      payload = solve_payload(request, config);
    } else if (op == "classify") {
      payload = classify_payload(request, config);
    } else if (op == "envelope") {
      payload = envelope_payload(request, config);
    } else if (op == "tangents") {
      payload = tangents_payload(request, config);
    } else if (op == "dual") {
      payload = dual_payload(request);
    } else {
      return {404, failure("unknown endpoint '" + std::string(op) + "'").dump()};
    }
    return {200, ok(std::move(payload)).dump()};
  } catch (const json::exception& e) {
    return {400, failure(std::string("malformed JSON: ") + e.what()).dump()};
  } catch (const FormatError& e) {
    return {400, failure(e.what()).dump()};
  } catch (const DomainError& e) {
    return {422, failure(e.what()).dump()};
  } catch (const ConvergenceError& e) {
    return {422, failure(e.what()).dump()};
  } catch (const std::exception& e) {
    return {500, failure(e.what()).dump()};
  }
}

Reply health() { return {200, ok(json{{"status", "healthy"}}).dump()}; }

}  // namespace envsolve::api
