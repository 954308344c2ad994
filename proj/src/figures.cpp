#include "seqchaos/figures.hpp"

#include <sstream>

#include "seqchaos/errors.hpp"

namespace seqchaos {

namespace {

std::string csv_text(const CsvTable& table) {
  std::ostringstream out;
  write_csv(table, out);
  return out.str();
}

PlotSpec spec_for(std::string title, std::string x_label, std::string y_label) {
  PlotSpec spec;
  spec.title = std::move(title);
  spec.x_label = std::move(x_label);
  spec.y_label = std::move(y_label);
  return spec;
}

FigureOutput return_map_figure(const Sequence& seq, const std::optional<AxisRange>& x_zoom,
                               const std::optional<AxisRange>& y_zoom, std::string title) {
  const auto points = window(return_map(seq.values, seq.column()), x_zoom, y_zoom);
  PlotSpec spec = spec_for(std::move(title), seq.symbol + "_k", seq.symbol + "_k+1");
  spec.diagonal = true;
  spec.x_range = x_zoom;
  spec.y_range = y_zoom;
  return {csv_text(return_map_table(seq, points)), render_scatter(points, spec)};
}

FigureOutput spectrum_figure(const Sequence& seq, std::string title) {
  const auto spectrum = dft_amplitude(seq.values);
  const PlotSpec spec = spec_for(std::move(title), "k", "|Y[k]|");
  return {csv_text(spectrum_table(spectrum)), render_spectrum(spectrum, spec, SpectrumRange::half)};
}

FigureOutput series_figure(const Sequence& seq, std::string title) {
  PlotSpec spec = spec_for(std::move(title), "k", seq.column());
  spec.point_radius = 0.8;
  return {csv_text(sequence_table(seq)),
          render_scatter(indexed_points(seq.values, seq.first_index, seq.column()), spec)};
}

}  // namespace

FigureId parse_figure(const std::string& name) {
  if (name.size() == 4 && name.starts_with("fig") && name[3] >= '1' && name[3] <= '9') {
    return static_cast<FigureId>(name[3] - '0');
  }
  throw UnknownFigure(name);
}

std::string figure_name(FigureId id) { return "fig" + std::to_string(static_cast<int>(id)); }

FigureOutput make_figure(FigureId id, const FigureSettings& settings) {
  const std::string primes_n = std::to_string(settings.prime_count);
  const std::string digits_n = std::to_string(settings.digit_count);
  switch (id) {
    case FigureId::fig1:
      return return_map_figure(primes_sequence(settings.prime_count), std::nullopt, std::nullopt,
                               "Return map of the first " + primes_n + " primes");
    case FigureId::fig2:
      return return_map_figure(primes_sequence(settings.prime_count), settings.prime_zoom, std::nullopt,
                               "Return map of the first " + primes_n + " primes (magnified)");
    case FigureId::fig3:
      return series_figure(derivative_sequence(primes_sequence(settings.prime_count)),
                           "Ratio derivative D_k of the first " + primes_n + " primes");
    case FigureId::fig4:
      return return_map_figure(derivative_sequence(primes_sequence(settings.prime_count)),
                               std::nullopt, std::nullopt, "Return map of D_k");
    case FigureId::fig5:
      return return_map_figure(derivative_sequence(primes_sequence(settings.prime_count)),
                               settings.derivative_zoom, settings.derivative_zoom,
                               "Return map of D_k (magnified)");
    case FigureId::fig6:
      return spectrum_figure(derivative_sequence(primes_sequence(settings.prime_count)),
                             "Amplitude spectrum of D_n");
    case FigureId::fig7:
      return series_figure(digits_sequence(settings.digit_count),
                           "First " + digits_n + " decimal digits of pi");
    case FigureId::fig8:
      return return_map_figure(digits_sequence(settings.digit_count), std::nullopt, std::nullopt,
                               "Return map of the digits of pi");
    case FigureId::fig9:
      return spectrum_figure(digits_sequence(settings.digit_count),
                             "Amplitude spectrum of the digits of pi");
  }
  throw UnknownFigure(figure_name(id));
}

}  // namespace seqchaos
