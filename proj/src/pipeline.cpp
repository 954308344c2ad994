#include "seqchaos/pipeline.hpp"

#include <cmath>
#include <vector>

#include "seqchaos/errors.hpp"
#include "seqchaos/pi_digits.hpp"
#include "seqchaos/primes.hpp"

namespace seqchaos {

namespace {

Sequence integral_sequence(std::string symbol, const std::vector<std::int64_t>& v,
                           Eigen::Index first_index) {
  Sequence s;
  s.symbol = std::move(symbol);
  s.first_index = first_index;
  Series<std::int64_t> exact(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) exact[static_cast<Eigen::Index>(i)] = v[i];
  s.values = exact.cast<double>();
  s.exact = std::move(exact);
  return s;
}

CsvCell cell(const Sequence& seq, double v) {
  if (seq.exact) return static_cast<std::int64_t>(std::llround(v));
  return v;
}

}  // namespace

Sequence primes_sequence(std::size_t count) {
  const auto primes = sieve_primes(count);
  std::vector<std::int64_t> v(primes.values.begin(), primes.values.end());
  return integral_sequence("x", v, 1);
}

Sequence digits_sequence(std::size_t count) {
  const auto digits = pi_digits_spigot(count);
  std::vector<std::int64_t> v(digits.digits.begin(), digits.digits.end());
  return integral_sequence("X", v, 1);
}

Sequence derivative_sequence(const Sequence& source) {
  RatioSeries<double> ratio = source.exact ? ratio_derivative(*source.exact, source.symbol)
                                           : ratio_derivative(source.values, source.symbol);
  Sequence s;
  s.symbol = "D";
  s.first_index = source.first_index + 1;
  s.values = std::move(ratio.values);
  return s;
}

Sequence sequence_from_csv(std::istream& in) {
  const CsvTable table = parse_csv(in);
  if (table.header.empty() || table.header.size() > 2) {
    throw ParseError("expected a single-column or k,value two-column file");
  }
  const std::size_t col = table.header.size() - 1;
  std::string symbol = table.header[col];
  if (symbol.size() > 2 && symbol.ends_with("_k")) symbol.resize(symbol.size() - 2);
  if (symbol.empty()) symbol = "v";

  Eigen::Index first_index = 1;
  if (col == 1 && !table.rows.empty()) {
    const auto* k = std::get_if<std::int64_t>(&table.rows.front()[0]);
    if (!k) throw ParseError("first column must hold integer indices k");
    first_index = static_cast<Eigen::Index>(*k);
  }

  bool integral = true;
  for (const auto& row : table.rows) integral = integral && std::holds_alternative<std::int64_t>(row[col]);
  if (integral) {
    std::vector<std::int64_t> v;
    v.reserve(table.rows.size());
    for (const auto& row : table.rows) v.push_back(std::get<std::int64_t>(row[col]));
    return integral_sequence(symbol, v, first_index);
  }
  Sequence s;
  s.symbol = symbol;
  s.first_index = first_index;
  s.values.resize(static_cast<Eigen::Index>(table.rows.size()));
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& c = table.rows[i][col];
    s.values[static_cast<Eigen::Index>(i)] = std::holds_alternative<double>(c)
                                                 ? std::get<double>(c)
                                                 : static_cast<double>(std::get<std::int64_t>(c));
  }
  return s;
}

ScatterSet<double> window(const ScatterSet<double>& set, const std::optional<AxisRange>& x,
                          const std::optional<AxisRange>& y) {
  if (!x && !y) return set;
  const auto in = [](double v, const std::optional<AxisRange>& r) {
    return !r || (v >= r->min && v <= r->max);
  };
  std::vector<Eigen::Index> rows;
  for (Eigen::Index i = 0; i < set.size(); ++i) {
    if (in(set.points(i, 0), x) && in(set.points(i, 1), y)) rows.push_back(i);
  }
  ScatterSet<double> out;
  out.source_label = set.source_label;
  out.points.resize(static_cast<Eigen::Index>(rows.size()), 2);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out.points.row(static_cast<Eigen::Index>(r)) = set.points.row(rows[r]);
  }
  return out;
}

CsvTable sequence_table(const Sequence& seq) {
  CsvTable t;
  t.header = {"k", seq.column()};
  t.rows.reserve(static_cast<std::size_t>(seq.size()));
  for (Eigen::Index i = 0; i < seq.size(); ++i) {
    t.rows.push_back({static_cast<std::int64_t>(seq.first_index + i), cell(seq, seq.values[i])});
  }
  return t;
}

CsvTable return_map_table(const Sequence& seq, const ScatterSet<double>& points) {
  CsvTable t;
  t.header = {seq.symbol + "_k", seq.symbol + "_k+1"};
  t.rows.reserve(static_cast<std::size_t>(points.size()));
  for (Eigen::Index i = 0; i < points.size(); ++i) {
    t.rows.push_back({cell(seq, points.points(i, 0)), cell(seq, points.points(i, 1))});
  }
  return t;
}

CsvTable spectrum_table(const Spectrum<double>& spectrum) {
  CsvTable t;
  t.header = {"k", "re", "im", "amplitude"};
  t.rows.reserve(static_cast<std::size_t>(spectrum.size()));
  for (Eigen::Index k = 0; k < spectrum.size(); ++k) {
    t.rows.push_back({static_cast<std::int64_t>(k), spectrum.harmonics[k].real(),
                      spectrum.harmonics[k].imag(), spectrum.amplitudes[k]});
  }
  return t;
}

}  // namespace seqchaos
