#include "envsolve/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "envsolve/api.hpp"
#include "envsolve/csv.hpp"
#include "envsolve/legendre.hpp"
#include "envsolve/plot.hpp"
#include "envsolve/server.hpp"

namespace envsolve::cli {

namespace {

class IoError : public Error {
 public:
  using Error::Error;
};

struct EquationFlags {
  int n = 2;
  double p = 0.0;
  double q = 0.0;
};

void add_equation_flags(CLI::App* cmd, EquationFlags& eq) {
  cmd->add_option("--n", eq.n, "Degree n >= 2")->required();
  cmd->add_option("--p", eq.p, "Coefficient p in x^n - p x + q")->required();
  cmd->add_option("--q", eq.q, "Coefficient q in x^n - p x + q")->required();
}

/// Writes to `path`, or to `out` when path is "-".
void write_output(const std::string& path, const std::string& content, std::ostream& out) {
  if (path == "-") {
    out << content;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file << content;
  if (!file) throw IoError("failed writing '" + path + "'");
}

double parse_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size() || !std::isfinite(v)) {
    throw FormatError("not a number: '" + s + "'");
  }
  return v;
}

/// "lo:hi:step" or "a,b,c" (or a single number).
std::vector<double> parse_slopes(const std::string& spec) {
  std::vector<double> slopes;
  if (spec.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
    if (parts.size() != 3) throw FormatError("slope range must be lo:hi:step");
    const double lo = parse_double(parts[0]);
    const double hi = parse_double(parts[1]);
    const double step = parse_double(parts[2]);
    if (!(step > 0.0) || lo > hi) throw FormatError("slope range needs lo <= hi and step > 0");
    const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    if (count > 10000000) throw FormatError("slope range too large");
    for (std::size_t i = 0; i < count; ++i) slopes.push_back(lo + static_cast<double>(i) * step);
  } else {
    std::stringstream ss(spec);
    for (std::string part; std::getline(ss, part, ',');) slopes.push_back(parse_double(part));
  }
  if (slopes.empty()) throw FormatError("no slopes given");
  return slopes;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  api::ServiceConfig config;
  try {
    config = api::ServiceConfig::from_env();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  CLI::App app{"Envelope solving machine for x^n - p x + q = 0", "envsolve"};
  app.require_subcommand(1);

  EquationFlags eq;
  double tol = config.tol;
  double boundary_tol = config.boundary_tol;

  auto* solve_cmd = app.add_subcommand("solve", "Solve x^n - p x + q = 0; prints a JSON root report");
  add_equation_flags(solve_cmd, eq);
  solve_cmd->add_option("--tol", tol, "Root tolerance (relative)");
  solve_cmd->add_option("--boundary-tol", boundary_tol, "Relative band around the envelope");

  auto* classify_cmd = app.add_subcommand("classify", "Count real roots from the envelope position");
  add_equation_flags(classify_cmd, eq);
  classify_cmd->add_option("--boundary-tol", boundary_tol, "Relative band around the envelope");

  plot::PlotSpec plot_spec;
  plot_spec.samples = config.samples;
  std::string plot_kind = "envelope";
  std::optional<double> plot_p;
  std::optional<double> plot_q;
  std::string plot_out;
  auto* plot_cmd = app.add_subcommand("plot", "Write a deterministic SVG figure");
  plot_cmd->add_option("--kind", plot_kind, "line-family | envelope | tangent | duality");
  plot_cmd->add_option("--n", plot_spec.n, "Degree n >= 2");
  plot_cmd->add_option("--p", plot_p, "Point p (tangent, duality)");
  plot_cmd->add_option("--q", plot_q, "Point q (tangent, duality)");
  plot_cmd->add_option("--xmin", plot_spec.x_range.lo);
  plot_cmd->add_option("--xmax", plot_spec.x_range.hi);
  plot_cmd->add_option("--ymin", plot_spec.y_range.lo);
  plot_cmd->add_option("--ymax", plot_spec.y_range.hi);
  plot_cmd->add_option("--samples", plot_spec.samples, "Points per envelope branch");
  plot_cmd->add_option("--width", plot_spec.width);
  plot_cmd->add_option("--height", plot_spec.height);
  plot_cmd->add_option("--family-min", plot_spec.family_min);
  plot_cmd->add_option("--family-max", plot_spec.family_max);
  plot_cmd->add_option("--family-step", plot_spec.family_step);
  plot_cmd->add_option("--tol", tol, "Root tolerance (relative)");
  plot_cmd->add_option("--boundary-tol", boundary_tol);
  plot_cmd->add_option("--out", plot_out, "Output SVG path ('-' for stdout)")->required();

  int env_n = 2;
  double pmin = 0.0;
  double pmax = 0.0;
  int env_samples = config.samples;
  std::string env_out;
  auto* env_cmd = app.add_subcommand("envelope-csv", "Sample the envelope branch(es) to CSV");
  env_cmd->add_option("--n", env_n, "Degree n >= 2")->required();
  env_cmd->add_option("--pmin", pmin)->required();
  env_cmd->add_option("--pmax", pmax)->required();
  env_cmd->add_option("--samples", env_samples);
  env_cmd->add_option("--out", env_out, "Output CSV path ('-' for stdout)")->required();

  std::string leg_in;
  std::string leg_out;
  std::string leg_slopes;
  bool leg_check = false;
  double leg_tol = 1e-2;
  auto* leg_cmd = app.add_subcommand("legendre", "Discrete Legendre transform of sampled x,y CSV");
  leg_cmd->add_option("--in", leg_in, "Input CSV (x,y)")->required();
  leg_cmd->add_option("--out", leg_out, "Output CSV ('-' for stdout)")->required();
  leg_cmd->add_option("--slopes", leg_slopes,
                      "lo:hi:step or a,b,c (default: uniform over the secant range)");
  leg_cmd->add_flag("--check", leg_check, "Report the biconjugate deviation");
  leg_cmd->add_option("--tol", leg_tol, "Tolerance for --check");

  std::string bind_host = "127.0.0.1";
  int port = 8080;
  std::string static_dir;
  auto* serve_cmd = app.add_subcommand("serve", "Run the JSON HTTP API");
  serve_cmd->add_option("--bind", bind_host);
  serve_cmd->add_option("--port", port);
  serve_cmd->add_option("--static-dir", static_dir, "Directory mounted at / (explorer bundle)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*solve_cmd) {
      const api::json req{{"n", eq.n}, {"p", eq.p}, {"q", eq.q}, {"tol", tol}, {"boundary_tol", boundary_tol}};
      out << api::solve_payload(req, config).dump() << '\n';
    } else if (*classify_cmd) {
      const api::json req{{"n", eq.n}, {"p", eq.p}, {"q", eq.q}, {"boundary_tol", boundary_tol}};
      out << api::classify_payload(req, config).dump() << '\n';
    } else if (*plot_cmd) {
      const auto kind = plot::kind_from_string(plot_kind);
      if (!kind) throw FormatError("unknown plot kind '" + plot_kind + "'");
      if (plot_p.has_value() != plot_q.has_value()) throw FormatError("--p and --q go together");
      plot_spec.kind = *kind;
      if (plot_p) plot_spec.params = PlanePoint(*plot_p, *plot_q);
      plot_spec.tol = tol;
      plot_spec.boundary_tol = boundary_tol;
      write_output(plot_out, plot::render_svg(plot_spec), out);
    } else if (*env_cmd) {
      std::ostringstream csv_text;
      csv::write_envelope(csv_text, csv::envelope_table(env_n, pmin, pmax, env_samples));
      write_output(env_out, csv_text.str(), out);
    } else if (*leg_cmd) {
      std::ifstream in(leg_in, std::ios::binary);
      if (!in) throw IoError("cannot open '" + leg_in + "'");
      const SampledFunction f = csv::read_sampled(in);
      const std::vector<double> slopes = leg_slopes.empty()
                                             ? uniform_slopes(secant_slope_domain(f), f.size())
                                             : parse_slopes(leg_slopes);
      std::ostringstream csv_text;
      csv::write_sampled(csv_text, discrete_legendre(f, slopes));
      write_output(leg_out, csv_text.str(), out);
      if (leg_check) {
        const InvolutionResult r = involution_check(f, leg_tol);
        const api::json summary{{"involution", {{"max_deviation", r.max_deviation},
                                                {"passed", r.passed},
                                                {"tol", leg_tol}}}};
        (leg_out == "-" ? err : out) << summary.dump() << '\n';
        if (!r.passed) return kFailure;
      }
    } else if (*serve_cmd) {
      std::optional<std::filesystem::path> dir;
      if (!static_dir.empty()) dir = static_dir;
      Server server(config, dir);
      const int bound = server.bind(bind_host, port);
      if (bound < 0) throw IoError("cannot bind " + bind_host + ":" + std::to_string(port));
      err << "serving on http://" << bind_host << ':' << bound << '\n';
      if (!server.listen()) throw IoError("server stopped unexpectedly");
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kConvergence;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kOk;
}

}  // namespace envsolve::cli
