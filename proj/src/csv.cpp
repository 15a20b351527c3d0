#include "envsolve/csv.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "envsolve/batch.hpp"
#include "envsolve/errors.hpp"

namespace envsolve::csv {

std::string format_number(double value, int significant_digits) {
  if (value == 0.0) value = 0.0;  // drops the sign of -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant_digits, value);
  return buf;
}

void write_sampled(std::ostream& out, const SampledFunction& f) {
  out << "x,y\n";
  const auto xs = f.xs();
  const auto ys = f.ys();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out << format_number(xs[i], 17) << ',' << format_number(ys[i], 17) << '\n';
  }
}

namespace {

double parse_field(const std::string& field, std::size_t line_no) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(field, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  while (used < field.size() && (field[used] == ' ' || field[used] == '\r')) ++used;
  if (used == 0 || used != field.size() || !std::isfinite(v)) {
    throw FormatError("line " + std::to_string(line_no) + ": not a finite number: '" + field + "'");
  }
  return v;
}

}  // namespace

SampledFunction read_sampled(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError("empty CSV input");
  {
    std::istringstream header(line);
    std::string a;
    std::string b;
    if (!std::getline(header, a, ',') || !std::getline(header, b) || b.find(',') != std::string::npos) {
      throw FormatError("CSV header must have exactly two columns");
    }
  }
  std::vector<double> xs;
  std::vector<double> ys;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
      throw FormatError("line " + std::to_string(line_no) + ": expected two fields");
    }
    xs.push_back(parse_field(line.substr(0, comma), line_no));
    ys.push_back(parse_field(line.substr(comma + 1), line_no));
  }
  if (xs.size() < 3) throw FormatError("sampled function needs at least 3 rows");
  try {
    return SampledFunction(std::move(xs), std::move(ys));
  } catch (const DomainError& e) {
    throw FormatError(e.what());
  }
}

EnvelopeTable envelope_table(int n, double pmin, double pmax, int samples) {
  if (samples < 1) throw DomainError("samples must be >= 1");
  if (!std::isfinite(pmin) || !std::isfinite(pmax) || pmin > pmax) {
    throw DomainError("p range must satisfy pmin <= pmax");
  }
  if (samples > 1 && pmin == pmax) throw DomainError("p range is empty");
  const EnvelopeSpec plus(n, Branch::Plus);
  if (!plus.in_domain(pmin)) {
    throw DomainError("envelope of odd degree is only defined for p >= 0");
  }
  EnvelopeTable table{n, {}, {}, {}};
  table.ps.resize(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    table.ps[i] = samples == 1 ? pmin : pmin + (pmax - pmin) * i / (samples - 1);
  }
  table.plus = batch::envelope_samples(plus, table.ps);
  if (n % 2 != 0) table.minus = batch::envelope_samples(EnvelopeSpec(n, Branch::Minus), table.ps);
  return table;
}

void write_envelope(std::ostream& out, const EnvelopeTable& table) {
  const bool two_branches = !table.minus.empty();
  out << (two_branches ? "p,e_plus,e_minus\n" : "p,e_plus\n");
  for (std::size_t i = 0; i < table.ps.size(); ++i) {
    out << format_number(table.ps[i], 12) << ',' << format_number(table.plus[i], 12);
    if (two_branches) out << ',' << format_number(table.minus[i], 12);
    out << '\n';
  }
}

}  // namespace envsolve::csv
