#ifndef SEQCHAOS_PIPELINE_HPP
#define SEQCHAOS_PIPELINE_HPP

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <string>

#include "seqchaos/analysis.hpp"
#include "seqchaos/csv.hpp"
#include "seqchaos/spectrum.hpp"
#include "seqchaos/svg_plot.hpp"

namespace seqchaos {

inline constexpr std::size_t kDefaultPrimeCount = 100'000;
inline constexpr std::size_t kDefaultDigitCount = 50'000;

/// A named numeric sequence indexed k = first_index, first_index + 1, ...
/// `exact` is present when every value is an integer, so differences can be taken exactly.
struct Sequence {
  std::string symbol;  // "x" for primes, "X" for digits, "D" for ratio derivatives
  Eigen::Index first_index = 1;
  Series<double> values;
  std::optional<Series<std::int64_t>> exact;

  Eigen::Index size() const { return values.size(); }
  std::string column() const { return symbol + "_k"; }
};

Sequence primes_sequence(std::size_t count);
Sequence digits_sequence(std::size_t count);
/// Ratio derivative of `source`; k of the first value is source.first_index + 1.
Sequence derivative_sequence(const Sequence& source);

/// Reads a single-column file (values) or a two-column k,value file.
Sequence sequence_from_csv(std::istream& in);

/// Points kept by an optional x/y window (inclusive bounds).
ScatterSet<double> window(const ScatterSet<double>& set, const std::optional<AxisRange>& x,
                          const std::optional<AxisRange>& y);

/// Header "k,<symbol>_k".
CsvTable sequence_table(const Sequence& seq);
/// Header "<symbol>_k,<symbol>_k+1"; integer cells when the source is integral.
CsvTable return_map_table(const Sequence& seq, const ScatterSet<double>& points);
/// Header "k,re,im,amplitude", always the full k = 0 .. N-1 range.
CsvTable spectrum_table(const Spectrum<double>& spectrum);

}  // namespace seqchaos

#endif  // SEQCHAOS_PIPELINE_HPP
