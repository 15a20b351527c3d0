#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "envsolve/errors.hpp"
#include "envsolve/numeric.hpp"
#include "envsolve/plot.hpp"
#include "envsolve/roots.hpp"

namespace envsolve::plot {

namespace {

constexpr std::array<std::pair<PlotKind, std::string_view>, 4> kKindNames{{
    {PlotKind::LineFamily, "LineFamily"},
    {PlotKind::Envelope, "Envelope"},
    {PlotKind::TangentConstruction, "TangentConstruction"},
    {PlotKind::Duality, "Duality"},
}};

constexpr double kMargin = 40.0;
// Keeps far-off-screen vertices finite and short; the clip path hides them.
constexpr double kPixelLimit = 1e6;

std::string num(double v) {
  v = std::clamp(v, -kPixelLimit, kPixelLimit);
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

std::string label_num(double v) {
  if (std::abs(v) < 5e-7) v = 0.0;
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

/// Maps data coordinates into one pane of the picture.
struct Frame {
  double left;
  double width;
  double height;
  Range xr;
  Range yr;
  std::string clip_id;

  double sx(double x) const {
    return left + kMargin + (x - xr.lo) / (xr.hi - xr.lo) * (width - 2 * kMargin);
  }
  double sy(double y) const {
    return height - kMargin - (y - yr.lo) / (yr.hi - yr.lo) * (height - 2 * kMargin);
  }
};

class SvgWriter {
 public:
  SvgWriter(int width, int height) {
    out_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
         << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
         << "<rect class=\"background\" x=\"0\" y=\"0\" width=\"" << width << "\" height=\""
         << height << "\" fill=\"white\"/>\n";
  }

  void raw(const std::string& s) { out_ << s; }

  void line(const char* cls, double x1, double y1, double x2, double y2, const char* style,
            const std::string& extra = {}) {
    out_ << "<line class=\"" << cls << '"' << extra << " x1=\"" << num(x1) << "\" y1=\""
         << num(y1) << "\" x2=\"" << num(x2) << "\" y2=\"" << num(y2) << "\" " << style
         << "/>\n";
  }

  void circle(const char* cls, double cx, double cy, double r, const char* style) {
    out_ << "<circle class=\"" << cls << "\" cx=\"" << num(cx) << "\" cy=\"" << num(cy)
         << "\" r=\"" << num(r) << "\" " << style << "/>\n";
  }

  void text(const char* cls, double x, double y, const std::string& body) {
    out_ << "<text class=\"" << cls << "\" x=\"" << num(x) << "\" y=\"" << num(y)
         << "\" font-family=\"sans-serif\" font-size=\"11\">" << body << "</text>\n";
  }

  void path(const char* cls, const std::vector<std::pair<double, double>>& pts,
            const char* style, const std::string& extra = {}) {
    if (pts.empty()) return;
    out_ << "<path class=\"" << cls << '"' << extra << " d=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      out_ << (i == 0 ? "M" : " L") << num(pts[i].first) << ',' << num(pts[i].second);
    }
    out_ << "\" fill=\"none\" " << style << "/>\n";
  }

  std::string finish() {
    out_ << "</svg>\n";
    return out_.str();
  }

 private:
  std::ostringstream out_;
};

void draw_frame(SvgWriter& svg, const Frame& f, const char* x_name, const char* y_name) {
  const double x0 = f.left + kMargin;
  const double x1 = f.left + f.width - kMargin;
  const double y0 = kMargin;
  const double y1 = f.height - kMargin;
  std::ostringstream clip;
  clip << "<clipPath id=\"" << f.clip_id << "\"><rect x=\"" << num(x0) << "\" y=\"" << num(y0)
       << "\" width=\"" << num(x1 - x0) << "\" height=\"" << num(y1 - y0) << "\"/></clipPath>\n";
  svg.raw("<defs>" + clip.str() + "</defs>\n");
  svg.raw("<g class=\"axes\">\n");
  if (f.yr.lo <= 0.0 && 0.0 <= f.yr.hi) {
    svg.line("axis", x0, f.sy(0.0), x1, f.sy(0.0), "stroke=\"#888\" stroke-width=\"1\"");
  }
  if (f.xr.lo <= 0.0 && 0.0 <= f.xr.hi) {
    svg.line("axis", f.sx(0.0), y0, f.sx(0.0), y1, "stroke=\"#888\" stroke-width=\"1\"");
  }
  svg.text("axis-label", x1 - 10.0, y1 + 16.0, x_name);
  svg.text("axis-label", x0 - 16.0, y0 + 4.0, y_name);
  svg.raw("</g>\n");
}

void open_clip(SvgWriter& svg, const Frame& f) {
  svg.raw("<g clip-path=\"url(#" + f.clip_id + ")\">\n");
}

void close_clip(SvgWriter& svg) { svg.raw("</g>\n"); }

void draw_envelope(SvgWriter& svg, const Frame& f, int n, int samples) {
  const bool odd = n % 2 != 0;
  const double lo = odd ? std::max(0.0, f.xr.lo) : f.xr.lo;
  const double hi = f.xr.hi;
  if (!(lo < hi)) return;
  std::vector<Branch> branches{Branch::Plus};
  if (odd) branches.push_back(Branch::Minus);
  for (Branch b : branches) {
    const EnvelopeSpec spec(n, b);
    std::vector<std::pair<double, double>> pts;
    pts.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
      const double p = i + 1 == samples ? hi : lo + (hi - lo) * i / (samples - 1);
      pts.emplace_back(f.sx(p), f.sy(envelope_value(spec, p)));
    }
    svg.path("envelope-branch", pts, "stroke=\"#1f4e9c\" stroke-width=\"2\"",
             b == Branch::Plus ? " data-branch=\"plus\"" : " data-branch=\"minus\"");
  }
}

// Integer roots x = k marked at their touch points so roots can be read off.
void draw_rescale_labels(SvgWriter& svg, const Frame& f, int n) {
  const int kmax = 64;
  for (int k = -kmax; k <= kmax; ++k) {
    const PlanePoint t = envelope_touch_point(n, k);
    if (t.p() < f.xr.lo || t.p() > f.xr.hi || t.q() < f.yr.lo || t.q() > f.yr.hi) continue;
    svg.circle("rescale-tick", f.sx(t.p()), f.sy(t.q()), 2.0, "fill=\"#1f4e9c\"");
    svg.text("rescale-label", f.sx(t.p()) + 4.0, f.sy(t.q()) - 4.0, "x=" + std::to_string(k));
  }
}

void draw_full_line(SvgWriter& svg, const Frame& f, const char* cls, const Line& l,
                    const char* style, const std::string& extra) {
  svg.line(cls, f.sx(f.xr.lo), f.sy(l.at(f.xr.lo)), f.sx(f.xr.hi), f.sy(l.at(f.xr.hi)), style,
           extra);
}

std::vector<double> solved_roots(const PlotSpec& spec) {
  const EquationParams eq(spec.n, spec.params->p(), spec.params->q());
  SolveOptions opt;
  opt.tol = spec.tol;
  opt.boundary_tol = spec.boundary_tol;
  std::vector<double> roots;
  for (const Root& r : solve(eq, opt).roots) roots.push_back(r.value);
  return roots;
}

void draw_tangents(SvgWriter& svg, const Frame& f, const PlotSpec& spec,
                   const std::vector<double>& roots) {
  for (double r : roots) {
    draw_full_line(svg, f, "tangent", family_line(spec.n, r),
                   "stroke=\"#c0392b\" stroke-width=\"1.5\"", " data-root=\"" + label_num(r) + "\"");
  }
  for (double r : roots) {
    const PlanePoint t = envelope_touch_point(spec.n, r);
    svg.circle("touch-point", f.sx(t.p()), f.sy(t.q()), 3.5, "fill=\"#c0392b\"");
    svg.text("root-label", f.sx(t.p()) + 5.0, f.sy(t.q()) + 14.0, "x=" + label_num(r));
  }
  const PlanePoint& pt = *spec.params;
  svg.circle("point", f.sx(pt.p()), f.sy(pt.q()), 4.0, "fill=\"black\"");
}

std::size_t family_size(const PlotSpec& spec) {
  return static_cast<std::size_t>(
             std::floor((spec.family_max - spec.family_min) / spec.family_step + 1e-9)) +
         1;
}

}  // namespace

std::string_view to_string(PlotKind kind) noexcept {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "Unknown";
}

std::optional<PlotKind> kind_from_string(std::string_view name) noexcept {
  for (const auto& [k, s] : kKindNames) {
    if (s == name) return k;
  }
  if (name == "line-family") return PlotKind::LineFamily;
  if (name == "envelope") return PlotKind::Envelope;
  if (name == "tangent" || name == "tangent-construction") return PlotKind::TangentConstruction;
  if (name == "duality") return PlotKind::Duality;
  return std::nullopt;
}

void validate(const PlotSpec& spec) {
  if (spec.n < 2) throw DomainError("degree n must be >= 2");
  if (!all_finite(spec.x_range.lo, spec.x_range.hi, spec.y_range.lo, spec.y_range.hi) ||
      !(spec.x_range.lo < spec.x_range.hi) || !(spec.y_range.lo < spec.y_range.hi)) {
    throw DomainError("plot ranges must be finite and nonempty");
  }
  if (spec.samples < 16) throw DomainError("samples must be >= 16");
  if (spec.width < 2 * kMargin + 1 || spec.height < 2 * kMargin + 1) {
    throw DomainError("width and height must exceed " + std::to_string(2 * int(kMargin)) + " px");
  }
  if (spec.kind == PlotKind::LineFamily) {
    if (!all_finite(spec.family_min, spec.family_max, spec.family_step) ||
        !(spec.family_step > 0.0) || spec.family_min > spec.family_max) {
      throw DomainError("family range needs min <= max and step > 0");
    }
    if (family_size(spec) > 10000) throw DomainError("too many family lines requested");
  }
  if ((spec.kind == PlotKind::TangentConstruction || spec.kind == PlotKind::Duality) &&
      !spec.params) {
    throw DomainError(std::string(to_string(spec.kind)) + " plot needs a point (p,q)");
  }
}

std::string render_svg(const PlotSpec& spec) {
  validate(spec);
  SvgWriter svg(spec.width, spec.height);

  switch (spec.kind) {
    case PlotKind::LineFamily: {
      const Frame f{0.0, double(spec.width), double(spec.height), spec.x_range, spec.y_range,
                    "plot-area"};
      draw_frame(svg, f, "p", "q");
      open_clip(svg, f);
      const std::size_t count = family_size(spec);
      for (std::size_t i = 0; i < count; ++i) {
        const double x = spec.family_min + static_cast<double>(i) * spec.family_step;
        draw_full_line(svg, f, "family-line", family_line(spec.n, x),
                       "stroke=\"#555\" stroke-width=\"1\"", " data-x=\"" + label_num(x) + "\"");
      }
      close_clip(svg);
      break;
    }
    case PlotKind::Envelope: {
      const Frame f{0.0, double(spec.width), double(spec.height), spec.x_range, spec.y_range,
                    "plot-area"};
      draw_frame(svg, f, "p", "q");
      open_clip(svg, f);
      draw_envelope(svg, f, spec.n, spec.samples);
      draw_rescale_labels(svg, f, spec.n);
      close_clip(svg);
      break;
    }
    case PlotKind::TangentConstruction: {
      const Frame f{0.0, double(spec.width), double(spec.height), spec.x_range, spec.y_range,
                    "plot-area"};
      const std::vector<double> roots = solved_roots(spec);
      draw_frame(svg, f, "p", "q");
      open_clip(svg, f);
      draw_envelope(svg, f, spec.n, spec.samples);
      draw_rescale_labels(svg, f, spec.n);
      draw_tangents(svg, f, spec, roots);
      close_clip(svg);
      break;
    }
    case PlotKind::Duality: {
      const double half = spec.width / 2.0;
      const Frame left{0.0, half, double(spec.height), spec.x_range, spec.y_range, "pq-plane"};
      const Frame right{half, half, double(spec.height), spec.x_range, spec.y_range, "mn-plane"};
      const std::vector<double> roots = solved_roots(spec);

      draw_frame(svg, left, "p", "q");
      open_clip(svg, left);
      draw_envelope(svg, left, spec.n, spec.samples);
      draw_tangents(svg, left, spec, roots);
      close_clip(svg);

      draw_frame(svg, right, "m", "n");
      open_clip(svg, right);
      std::vector<std::pair<double, double>> curve;
      for (int i = 0; i < spec.samples; ++i) {
        const double m = spec.x_range.lo + (spec.x_range.hi - spec.x_range.lo) * i / (spec.samples - 1);
        const PlanePoint d = dual_of_line(family_line(spec.n, m));
        curve.emplace_back(right.sx(d.p()), right.sy(d.q()));
      }
      svg.path("dual-curve", curve, "stroke=\"#1f4e9c\" stroke-width=\"2\"");
      draw_full_line(svg, right, "dual-line", dual_of_point(*spec.params),
                     "stroke=\"black\" stroke-width=\"1.5\"", {});
      for (double r : roots) {
        const PlanePoint d = dual_of_line(family_line(spec.n, r));
        svg.circle("dual-point", right.sx(d.p()), right.sy(d.q()), 3.5, "fill=\"#c0392b\"");
      }
      close_clip(svg);
      break;
    }
  }
  return svg.finish();
}

}  // namespace envsolve::plot
