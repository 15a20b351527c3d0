#pragma once

// JSON request/response handling shared by the CLI and the HTTP service.
// Payload builders return exactly what `envsolve <cmd>` prints, and the
// service wraps them as {"ok": true, "payload": ...} or {"ok": false, "error": ...}.

#include <string>
#include <string_view>

#include <json.hpp>

#include "envsolve/errors.hpp"
#include "envsolve/roots.hpp"

namespace envsolve::api {

using json = nlohmann::json;

/// Defaults shared by CLI and service. Precedence: flags > ENVELOPE_* env > built-ins.
struct ServiceConfig {
  double tol = 1e-12;
  double boundary_tol = 1e-9;
  int samples = 512;

  /// Reads ENVELOPE_TOL, ENVELOPE_BOUNDARY_TOL, ENVELOPE_SAMPLES over the
  /// built-in defaults. Throws FormatError on unparsable values.
  static ServiceConfig from_env();
};

/// A request that is not well-formed (HTTP 400).
class RequestError : public FormatError {
 public:
  using FormatError::FormatError;
};

json classification_json(const EquationParams& params, const Classification& c);
json report_json(const RootReport& report);

json solve_payload(const json& request, const ServiceConfig& config);
json classify_payload(const json& request, const ServiceConfig& config);
json envelope_payload(const json& request, const ServiceConfig& config);
json tangents_payload(const json& request, const ServiceConfig& config);
json dual_payload(const json& request);

struct Reply {
  int status;
  std::string body;
};

/// Runs endpoint `op` (solve, classify, envelope, tangents, dual) on a raw
/// body. 400 for malformed requests, 422 for domain or convergence errors,
/// 404 for unknown ops.
Reply dispatch(std::string_view op, std::string_view body, const ServiceConfig& config);

Reply health();

}  // namespace envsolve::api
