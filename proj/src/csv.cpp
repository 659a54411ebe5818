#include "xihd/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "xihd/error.hpp"

namespace xihd {

CsvTable parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;  // distinguishes an empty last line from an empty field
  std::size_t line = 1;

  auto end_field = [&] {
    record.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_record = [&] {
    end_field();
    records.push_back(std::move(record));
    record.clear();
  };

  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field.empty()) {
          throw Error(ErrorCode::ParseError,
                      "unexpected quote inside unquoted field on line " + std::to_string(line));
        }
        in_quotes = true;
        field_started = true;
        break;
      case ',':
        end_field();
        field_started = true;
        break;
      case '\r':
        if (i + 1 < text.size() && text[i + 1] == '\n') break;
        [[fallthrough]];
      case '\n':
        end_record();
        ++line;
        break;
      default:
        field.push_back(c);
        field_started = true;
    }
  }
  if (in_quotes) throw Error(ErrorCode::ParseError, "unterminated quoted field");
  if (field_started || !record.empty()) end_record();

  // Blank lines carry no data.
  std::erase_if(records, [](const auto& r) { return r.size() == 1 && r.front().empty(); });
  if (records.empty()) throw Error(ErrorCode::ParseError, "input has no header row");

  CsvTable table;
  table.header = std::move(records.front());
  for (std::size_t r = 1; r < records.size(); ++r) {
    if (records[r].size() != table.header.size()) {
      throw Error(ErrorCode::ParseError,
                  "data row " + std::to_string(r) + " has " + std::to_string(records[r].size()) +
                      " fields, header has " + std::to_string(table.header.size()));
    }
    table.rows.push_back(std::move(records[r]));
  }
  return table;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::IoError, "failed reading '" + path.string() + "'");
  return buffer.str();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

DataMatrix to_data_matrix(const CsvTable& table) {
  const std::size_t n = table.rows.size();
  const std::size_t p = table.header.size();
  std::vector<double> values(n * p);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < p; ++k) {
      std::string_view cell = trim(table.rows[i][k]);
      if (cell.starts_with('+')) cell.remove_prefix(1);
      double value = 0.0;
      const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
      const std::string where =
          "row " + std::to_string(i + 1) + ", column '" + table.header[k] + "'";
      if (cell.empty() || ec != std::errc() || ptr != cell.data() + cell.size()) {
        throw Error(ErrorCode::NonNumericCell,
                    where + ": '" + table.rows[i][k] + "' is not a number");
      }
      if (!std::isfinite(value)) throw Error(ErrorCode::NonFiniteValue, where + " is not finite");
      values[k * n + i] = value;
    }
  }
  return DataMatrix(n, p, std::move(values), table.header);
}

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string xi_matrix_to_csv(const XiMatrix& xi, const std::vector<std::string>& labels) {
  std::string out;
  for (const auto& label : labels) {
    out += ',';
    out += csv_escape(label);
  }
  out += '\n';
  char buf[40];
  for (std::size_t k = 0; k < xi.p(); ++k) {
    out += csv_escape(labels[k]);
    for (std::size_t l = 0; l < xi.p(); ++l) {
      out += ',';
      if (k == l) continue;
      std::snprintf(buf, sizeof buf, "%.17g", xi.at(k, l));
      out += buf;
    }
    out += '\n';
  }
  return out;
}

}  // namespace xihd
