#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "envsolve/envelope.hpp"

namespace envsolve::plot {

enum class PlotKind { LineFamily, Envelope, TangentConstruction, Duality };

std::string_view to_string(PlotKind kind) noexcept;
/// Accepts "LineFamily" or "line-family" style names (and "tangent" for
/// TangentConstruction).
std::optional<PlotKind> kind_from_string(std::string_view name) noexcept;

struct Range {
  double lo;
  double hi;
};

struct PlotSpec {
  PlotKind kind = PlotKind::Envelope;
  int n = 2;
  std::optional<PlanePoint> params;  // (p,q); required for tangent and duality plots
  Range x_range{-4.0, 4.0};          // p axis (m axis in the dual pane)
  Range y_range{-4.0, 4.0};          // q axis (n axis in the dual pane)
  int samples = 512;
  int width = 640;
  int height = 480;
  // Members of the line family drawn by LineFamily plots.
  double family_min = -2.0;
  double family_max = 2.0;
  double family_step = 0.25;
  double tol = 1e-12;
  double boundary_tol = 1e-9;
};

/// Throws DomainError describing the first violated constraint.
void validate(const PlotSpec& spec);

/// Deterministic SVG: fixed viewBox, 6-decimal coordinates, layers emitted in
/// ascending family-parameter order, no timestamps.
///
/// Element classes: family-line, envelope-branch, point, tangent, touch-point,
/// root-label, rescale-tick, rescale-label, dual-curve, dual-line, dual-point.
std::string render_svg(const PlotSpec& spec);

}  // namespace envsolve::plot
