#ifndef SEQCHAOS_SVG_PLOT_HPP
#define SEQCHAOS_SVG_PLOT_HPP

#include <cstddef>
#include <optional>
#include <string>

#include "seqchaos/analysis.hpp"
#include "seqchaos/spectrum.hpp"

namespace seqchaos {

enum class PlotMode { scatter, stem };
enum class SpectrumRange { half, full };

struct AxisRange {
  double min = 0;
  double max = 1;
};

struct PlotSpec {
  int width = 800;
  int height = 600;
  int margin = 64;
  double point_radius = 1.2;
  std::string title;
  std::string x_label;
  std::string y_label;
  PlotMode mode = PlotMode::scatter;
  /// Explicit windows; points outside are left out of the drawing.
  std::optional<AxisRange> x_range;
  std::optional<AxisRange> y_range;
  /// Draw the reference line y = x (return maps).
  bool diagonal = false;

  /// Throws Error unless width and height exceed twice the margin and ranges are non-empty.
  void validate() const;
};

/// Scatter plots above this many points keep every ceil(n / kMaxPlotPoints)-th point.
inline constexpr std::size_t kMaxPlotPoints = 200'000;

/// Standalone SVG 1.1 document. Deterministic: same input, same bytes.
/// In scatter mode every kept point is one <circle>; in stem mode one <line class="stem">.
/// Throws EmptyData when no point is left to draw.
std::string render_scatter(const ScatterSet<double>& points, const PlotSpec& spec);

/// Stem plot of amplitudes[k] against k, k = 0 .. floor(N/2) (half) or 0 .. N-1 (full).
std::string render_spectrum(const Spectrum<double>& spectrum, const PlotSpec& spec,
                            SpectrumRange range = SpectrumRange::half);

/// Round tick step (1, 2 or 5 times a power of ten) giving roughly `target` intervals over span.
double nice_tick_step(double span, int target = 5);

}  // namespace seqchaos

#endif  // SEQCHAOS_SVG_PLOT_HPP
