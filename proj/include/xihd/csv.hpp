#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "xihd/chatterjee.hpp"
#include "xihd/data_matrix.hpp"

namespace xihd {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// RFC 4180: comma separated, double-quoted fields with "" escapes, CRLF or LF
// line endings, first record is the header. Throws ParseError on unbalanced
// quotes or rows whose width differs from the header.
CsvTable parse_csv(std::string_view text);

// Throws IoError when the file cannot be read.
std::string read_text_file(const std::filesystem::path& path);

// Converts every cell to a double. Empty or non-numeric cells throw
// NonNumericCell; NaN/inf throw NonFiniteValue. Both name the row and column.
DataMatrix to_data_matrix(const CsvTable& table);

// Quotes a field when it contains a comma, quote or line break.
std::string csv_escape(std::string_view field);

// Square matrix with labelled rows and columns; the diagonal cells are empty.
// Values are written with 17 significant digits so they re-read exactly.
std::string xi_matrix_to_csv(const XiMatrix& xi, const std::vector<std::string>& labels);

}  // namespace xihd
