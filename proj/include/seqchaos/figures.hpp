#ifndef SEQCHAOS_FIGURES_HPP
#define SEQCHAOS_FIGURES_HPP

#include <cstddef>
#include <string>

#include "seqchaos/pipeline.hpp"
#include "seqchaos/svg_plot.hpp"

namespace seqchaos {

enum class FigureId { fig1 = 1, fig2, fig3, fig4, fig5, fig6, fig7, fig8, fig9 };

/// "fig1" .. "fig9"; throws UnknownFigure otherwise.
FigureId parse_figure(const std::string& name);
std::string figure_name(FigureId id);

struct FigureSettings {
  std::size_t prime_count = kDefaultPrimeCount;
  std::size_t digit_count = kDefaultDigitCount;
  /// Magnified window of the prime return map (fig2).
  AxisRange prime_zoom{10'000, 10'200};
  /// Magnified window of the derivative return map (fig5), applied to both axes.
  AxisRange derivative_zoom{0, 3};
};

struct FigureOutput {
  std::string csv;
  std::string svg;
};

/// fig1 prime return map, fig2 its zoom, fig3 D_k vs k, fig4 (D_k, D_k+1), fig5 its zoom,
/// fig6 amplitude spectrum of D, fig7 pi digits vs k, fig8 digit return map,
/// fig9 amplitude spectrum of the digits.
FigureOutput make_figure(FigureId id, const FigureSettings& settings = {});

}  // namespace seqchaos

#endif  // SEQCHAOS_FIGURES_HPP
