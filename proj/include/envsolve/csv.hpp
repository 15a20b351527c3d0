#pragma once

// CSV files: '.' decimal separator, ',' field separator, '\n' line endings,
// mandatory header row.

#include <iosfwd>
#include <string>
#include <vector>

#include "envsolve/legendre.hpp"

namespace envsolve::csv {

/// printf-style %.<digits>g with negative zero printed as 0.
std::string format_number(double value, int significant_digits);

/// Header "x,y"; values at full precision so a read-back is lossless.
void write_sampled(std::ostream& out, const SampledFunction& f);

/// Reads a two-column file with a header row. Needs >= 3 data rows.
/// Throws FormatError on malformed content.
SampledFunction read_sampled(std::istream& in);

struct EnvelopeTable {
  int n;
  std::vector<double> ps;
  std::vector<double> plus;
  std::vector<double> minus;  // empty for even n
};

/// `samples` uniform values of p over [pmin, pmax] (just pmin when samples is 1).
/// Throws DomainError for odd n with pmin < 0.
EnvelopeTable envelope_table(int n, double pmin, double pmax, int samples);

/// Header "p,e_plus" (even n) or "p,e_plus,e_minus" (odd n); 12 significant digits.
void write_envelope(std::ostream& out, const EnvelopeTable& table);

}  // namespace envsolve::csv
