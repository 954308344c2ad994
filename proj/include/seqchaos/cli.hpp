#ifndef SEQCHAOS_CLI_HPP
#define SEQCHAOS_CLI_HPP

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>

#include "seqchaos/figures.hpp"
#include "seqchaos/svg_plot.hpp"

namespace seqchaos::cli {

enum class Subcommand { primes, pi, derive, return_map, spectrum, figure };
enum class Format { csv, svg };
enum class SourceKind { primes, digits, derivative };

struct CommandConfig {
  Subcommand subcommand = Subcommand::primes;
  /// 0 selects the default for the source (100000 primes, 50000 digits).
  std::size_t count = 0;
  SourceKind source = SourceKind::primes;
  /// CSV input instead of a generated source; "-" is standard input.
  std::optional<std::string> input;
  /// "-" is standard output.
  std::string output = "-";
  Format format = Format::csv;
  std::optional<AxisRange> x_range;
  std::optional<AxisRange> y_range;
  SpectrumRange range = SpectrumRange::half;
  std::string figure;
  std::string out_dir = ".";
  FigureSettings figure_settings;
};

/// Exit codes: 0 success, 1 usage error, 2 runtime error. Messages go to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace seqchaos::cli

#endif  // SEQCHAOS_CLI_HPP
