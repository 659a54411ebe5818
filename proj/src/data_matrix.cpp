#include "xihd/data_matrix.hpp"

#include <cmath>

#include "xihd/error.hpp"

namespace xihd {

std::vector<std::string> default_labels(std::size_t p) {
  std::vector<std::string> labels;
  labels.reserve(p);
  for (std::size_t k = 0; k < p; ++k) labels.push_back("X" + std::to_string(k + 1));
  return labels;
}

DataMatrix::DataMatrix(std::size_t n, std::size_t p)
    : n_(n), p_(p), values_(n * p, 0.0), labels_(default_labels(p)) {}

DataMatrix::DataMatrix(std::size_t n, std::size_t p, std::vector<double> column_major,
                       std::vector<std::string> labels)
    : n_(n), p_(p), values_(std::move(column_major)), labels_(std::move(labels)) {
  if (values_.size() != n * p) {
    throw Error(ErrorCode::LengthMismatch, "data holds " + std::to_string(values_.size()) +
                                               " values, expected " + std::to_string(n * p));
  }
  if (labels_.empty()) {
    labels_ = default_labels(p);
  } else if (labels_.size() != p) {
    throw Error(ErrorCode::LengthMismatch, "got " + std::to_string(labels_.size()) +
                                               " labels for " + std::to_string(p) + " columns");
  }
}

DataMatrix DataMatrix::from_columns(const std::vector<std::vector<double>>& columns,
                                    std::vector<std::string> labels) {
  const std::size_t p = columns.size();
  const std::size_t n = p == 0 ? 0 : columns.front().size();
  std::vector<double> values;
  values.reserve(n * p);
  for (std::size_t k = 0; k < p; ++k) {
    if (columns[k].size() != n) {
      throw Error(ErrorCode::LengthMismatch,
                  "column " + std::to_string(k + 1) + " has " + std::to_string(columns[k].size()) +
                      " values, expected " + std::to_string(n));
    }
    values.insert(values.end(), columns[k].begin(), columns[k].end());
  }
  return DataMatrix(n, p, std::move(values), std::move(labels));
}

void DataMatrix::require_finite() const {
  for (std::size_t k = 0; k < p_; ++k) {
    for (std::size_t i = 0; i < n_; ++i) {
      if (!std::isfinite(at(i, k))) {
        throw Error(ErrorCode::NonFiniteValue, "column '" + labels_[k] + "' row " +
                                                   std::to_string(i + 1) + " is not finite");
      }
    }
  }
}

}  // namespace xihd
