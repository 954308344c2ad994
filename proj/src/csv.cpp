#include "seqchaos/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <system_error>

#include "seqchaos/errors.hpp"

namespace seqchaos {

namespace {

std::string quote_if_needed(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (const char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> split_record(const std::string& line) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        current += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        current += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  fields.push_back(std::move(current));
  return fields;
}

CsvCell parse_cell(const std::string& text, std::size_t line_no) {
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (text.find_first_of(".eEnNiI") == std::string::npos) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec == std::errc() && ptr == last) return v;
  }
  double d = 0;
  const auto [ptr, ec] = std::from_chars(first, last, d);
  if (ec != std::errc() || ptr != last) {
    throw ParseError("line " + std::to_string(line_no) + ": '" + text + "' is not a number");
  }
  return d;
}

}  // namespace

std::string format_real(double value) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  std::string text(buf.data(), ptr);
  // Keep reals distinguishable from integer cells: 2.0 prints as "2.0", not "2".
  if (text.find_first_of(".eEnNiI") == std::string::npos) text += ".0";
  return text;
}

std::string format_cell(const CsvCell& cell) {
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return std::to_string(*i);
  return format_real(std::get<double>(cell));
}

void write_csv(const CsvTable& table, std::ostream& sink) {
  std::string text;
  for (std::size_t c = 0; c < table.header.size(); ++c) {
    if (c) text += ',';
    text += quote_if_needed(table.header[c]);
  }
  text += '\n';
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    if (row.size() != table.header.size()) {
      throw SinkFailure("row " + std::to_string(r) + " has " + std::to_string(row.size()) +
                        " cells, header has " + std::to_string(table.header.size()));
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) text += ',';
      text += format_cell(row[c]);
    }
    text += '\n';
  }
  sink.write(text.data(), static_cast<std::streamsize>(text.size()));
  sink.flush();
  if (!sink) throw SinkFailure("write to CSV sink failed");
}

CsvTable parse_csv(std::istream& source) {
  CsvTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(source, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1) {
      table.header = split_record(line);
      continue;
    }
    if (line.empty()) continue;
    const auto fields = split_record(line);
    if (fields.size() != table.header.size()) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " +
                       std::to_string(table.header.size()) + " cells, got " +
                       std::to_string(fields.size()));
    }
    std::vector<CsvCell> row;
    row.reserve(fields.size());
    for (const auto& f : fields) row.push_back(parse_cell(f, line_no));
    table.rows.push_back(std::move(row));
  }
  if (line_no == 0) throw ParseError("empty CSV input (header row is mandatory)");
  return table;
}

}  // namespace seqchaos
