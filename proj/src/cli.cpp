#include "seqchaos/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "seqchaos/errors.hpp"
#include "seqchaos/pipeline.hpp"

namespace seqchaos::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RangeFlags {
  std::optional<double> xmin, xmax, ymin, ymax;
};

void add_output_flags(CLI::App* sub, CommandConfig& cfg) {
  static const std::map<std::string, Format> kFormats{{"csv", Format::csv}, {"svg", Format::svg}};
  sub->add_option("--format", cfg.format, "Output format")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  sub->add_option("-o,--output", cfg.output, "Output path, '-' for standard output");
}

void add_source_flags(CLI::App* sub, CommandConfig& cfg, std::optional<SourceKind>& source) {
  static const std::map<std::string, SourceKind> kSources{
      {"primes", SourceKind::primes}, {"digits", SourceKind::digits}, {"derivative", SourceKind::derivative}};
  sub->add_option("--source", source, "Generated input: primes, digits or derivative (of primes)")
      ->transform(CLI::CheckedTransformer(kSources, CLI::ignore_case));
  sub->add_option("--from", cfg.input, "CSV input (single column or k,value); '-' for standard input");
  sub->add_option("--count", cfg.count, "Number of primes or digits to generate")
      ->check(CLI::PositiveNumber);
}

void add_range_flags(CLI::App* sub, RangeFlags& r) {
  sub->add_option("--xmin", r.xmin, "Lower x bound of the plotted window");
  sub->add_option("--xmax", r.xmax, "Upper x bound of the plotted window");
  sub->add_option("--ymin", r.ymin, "Lower y bound of the plotted window");
  sub->add_option("--ymax", r.ymax, "Upper y bound of the plotted window");
}

std::optional<AxisRange> make_range(const std::optional<double>& lo, const std::optional<double>& hi,
                                    const char* axis) {
  if (!lo && !hi) return std::nullopt;
  if (!lo || !hi) {
    throw UsageError(std::string("--") + axis + "min and --" + axis + "max must be given together");
  }
  if (!(*lo < *hi)) throw UsageError(std::string("--") + axis + "min must be below --" + axis + "max");
  return AxisRange{*lo, *hi};
}

std::size_t count_for(const CommandConfig& cfg, SourceKind kind) {
  if (cfg.count) return cfg.count;
  return kind == SourceKind::digits ? kDefaultDigitCount : kDefaultPrimeCount;
}

Sequence load_input(const std::string& path) {
  if (path == "-") return sequence_from_csv(std::cin);
  std::ifstream in(path);
  if (!in) throw Error("cannot open input file '" + path + "'");
  return sequence_from_csv(in);
}

Sequence derive(const Sequence& seq) {
  try {
    return derivative_sequence(seq);
  } catch (const ZeroDenominator& e) {
    throw Error(std::string(e.what()) + ", k = " +
                std::to_string(seq.first_index + static_cast<Eigen::Index>(e.index())));
  }
}

Sequence resolve_source(const CommandConfig& cfg) {
  if (cfg.input) return load_input(*cfg.input);
  switch (cfg.source) {
    case SourceKind::primes: return primes_sequence(count_for(cfg, SourceKind::primes));
    case SourceKind::digits: return digits_sequence(count_for(cfg, SourceKind::digits));
    case SourceKind::derivative: return derive(primes_sequence(count_for(cfg, SourceKind::primes)));
  }
  throw UsageError("unknown source");
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path == "-") {
    out << text;
    out.flush();
    if (!out) throw SinkFailure("write to standard output failed");
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw SinkFailure("cannot open '" + path + "' for writing");
  file << text;
  file.close();
  if (!file) throw SinkFailure("write to '" + path + "' failed");
}

std::string csv_text(const CsvTable& table) {
  std::ostringstream s;
  write_csv(table, s);
  return s.str();
}

PlotSpec plot_spec(const CommandConfig& cfg, std::string title, std::string x_label, std::string y_label) {
  PlotSpec spec;
  spec.title = std::move(title);
  spec.x_label = std::move(x_label);
  spec.y_label = std::move(y_label);
  spec.x_range = cfg.x_range;
  spec.y_range = cfg.y_range;
  return spec;
}

std::string series_output(const CommandConfig& cfg, const Sequence& seq, const std::string& title) {
  if (cfg.format == Format::csv) return csv_text(sequence_table(seq));
  return render_scatter(indexed_points(seq.values, seq.first_index, seq.column()),
                        plot_spec(cfg, title, "k", seq.column()));
}

void execute(const CommandConfig& cfg, std::ostream& out) {
  switch (cfg.subcommand) {
    case Subcommand::primes: {
      const auto seq = primes_sequence(count_for(cfg, SourceKind::primes));
      emit(series_output(cfg, seq, "Primes"), cfg.output, out);
      return;
    }
    case Subcommand::pi: {
      const auto seq = digits_sequence(count_for(cfg, SourceKind::digits));
      emit(series_output(cfg, seq, "Decimal digits of pi"), cfg.output, out);
      return;
    }
    case Subcommand::derive: {
      const auto seq = derive(resolve_source(cfg));
      emit(series_output(cfg, seq, "Ratio derivative D_k"), cfg.output, out);
      return;
    }
    case Subcommand::return_map: {
      const auto seq = resolve_source(cfg);
      const auto points = window(return_map(seq.values, seq.column()), cfg.x_range, cfg.y_range);
      if (cfg.format == Format::csv) {
        emit(csv_text(return_map_table(seq, points)), cfg.output, out);
      } else {
        PlotSpec spec = plot_spec(cfg, "Return map", seq.symbol + "_k", seq.symbol + "_k+1");
        spec.diagonal = true;
        emit(render_scatter(points, spec), cfg.output, out);
      }
      return;
    }
    case Subcommand::spectrum: {
      const auto seq = resolve_source(cfg);
      const auto spectrum = dft_amplitude(seq.values);
      if (cfg.format == Format::csv) {
        emit(csv_text(spectrum_table(spectrum)), cfg.output, out);
      } else {
        emit(render_spectrum(spectrum, plot_spec(cfg, "Amplitude spectrum", "k", "|Y[k]|"), cfg.range),
             cfg.output, out);
      }
      return;
    }
    case Subcommand::figure: {
      const FigureId id = parse_figure(cfg.figure);
      const FigureOutput fig = make_figure(id, cfg.figure_settings);
      const std::filesystem::path dir(cfg.out_dir);
      std::error_code ec;
      std::filesystem::create_directories(dir, ec);
      const std::string stem = figure_name(id);
      const std::string svg_path = (dir / (stem + ".svg")).string();
      const std::string csv_path = (dir / (stem + ".csv")).string();
      emit(fig.svg, svg_path, out);
      emit(fig.csv, csv_path, out);
      out << "wrote " << svg_path << "\nwrote " << csv_path << "\n";
      return;
    }
  }
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CommandConfig cfg;
  RangeFlags ranges;
  std::optional<SourceKind> source;
  std::optional<std::size_t> figure_primes, figure_digits;

  CLI::App app{"Prime and pi-digit sequence analysis: return maps, ratio derivatives, amplitude spectra",
               "seqchaos"};
  app.require_subcommand(1, 1);

  auto* primes = app.add_subcommand("primes", "First N primes (segmented sieve)");
  primes->add_option("--count", cfg.count, "Number of primes (default 100000)")->check(CLI::PositiveNumber);
  add_output_flags(primes, cfg);

  auto* pi = app.add_subcommand("pi", "First N decimal digits of pi after the decimal point");
  pi->add_option("--count", cfg.count, "Number of digits (default 50000)")->check(CLI::PositiveNumber);
  add_output_flags(pi, cfg);

  auto* derive_cmd = app.add_subcommand("derive", "Ratio derivative D_k of a sequence");
  add_source_flags(derive_cmd, cfg, source);
  add_output_flags(derive_cmd, cfg);

  auto* rmap = app.add_subcommand("return-map", "Return map (v_k, v_k+1) of a sequence");
  add_source_flags(rmap, cfg, source);
  add_range_flags(rmap, ranges);
  add_output_flags(rmap, cfg);

  auto* spec_cmd = app.add_subcommand("spectrum", "Normalised DFT amplitude spectrum of a sequence");
  add_source_flags(spec_cmd, cfg, source);
  static const std::map<std::string, SpectrumRange> kRanges{{"half", SpectrumRange::half},
                                                            {"full", SpectrumRange::full}};
  spec_cmd->add_option("--range", cfg.range, "Plotted harmonics: half (0..N/2) or full (0..N-1)")
      ->transform(CLI::CheckedTransformer(kRanges, CLI::ignore_case));
  add_output_flags(spec_cmd, cfg);

  auto* fig = app.add_subcommand("figure", "Write <name>.svg and <name>.csv for fig1..fig9");
  fig->add_option("name", cfg.figure, "fig1 .. fig9")->required();
  fig->add_option("--out-dir", cfg.out_dir, "Directory for the output files");
  fig->add_option("--primes", figure_primes, "Override the number of primes (default 100000)")
      ->check(CLI::PositiveNumber);
  fig->add_option("--digits", figure_digits, "Override the number of digits (default 50000)")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 1;
  }

  const std::map<CLI::App*, Subcommand> kinds{
      {primes, Subcommand::primes}, {pi, Subcommand::pi},
      {derive_cmd, Subcommand::derive}, {rmap, Subcommand::return_map},
      {spec_cmd, Subcommand::spectrum}, {fig, Subcommand::figure}};
  for (const auto& [sub, kind] : kinds) {
    if (sub->parsed()) cfg.subcommand = kind;
  }
  cfg.source = source.value_or(cfg.subcommand == Subcommand::spectrum ? SourceKind::derivative
                                                                      : SourceKind::primes);

  try {
    cfg.x_range = make_range(ranges.xmin, ranges.xmax, "x");
    cfg.y_range = make_range(ranges.ymin, ranges.ymax, "y");
    if (figure_primes) cfg.figure_settings.prime_count = *figure_primes;
    if (figure_digits) cfg.figure_settings.digit_count = *figure_digits;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  }

  try {
    execute(cfg, out);
  } catch (const UnknownFigure& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace seqchaos::cli
