#ifndef SEQCHAOS_CSV_HPP
#define SEQCHAOS_CSV_HPP

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace seqchaos {

/// Integers are kept apart from reals so that indices and primes print without an exponent.
using CsvCell = std::variant<std::int64_t, double>;

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<CsvCell>> rows;

  friend bool operator==(const CsvTable&, const CsvTable&) = default;
};

/// Shortest decimal text that parses back to the same double ("1.6666666666666667" for 5/3).
std::string format_real(double value);
std::string format_cell(const CsvCell& cell);

/// RFC-4180 style, LF line endings, '.' decimal separator. Throws SinkFailure if a row length
/// differs from the header or the stream fails.
void write_csv(const CsvTable& table, std::ostream& sink);

/// Inverse of write_csv. Cells without '.', 'e', "inf" or "nan" parse as integers.
CsvTable parse_csv(std::istream& source);

}  // namespace seqchaos

#endif  // SEQCHAOS_CSV_HPP
