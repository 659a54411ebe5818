#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace xihd {

// An n x p sample: n observations of a p-dimensional vector. Storage is
// column-major since every downstream computation works a column at a time.
class DataMatrix {
 public:
  DataMatrix() = default;

  // Zero-filled matrix with default labels X1..Xp.
  DataMatrix(std::size_t n, std::size_t p);

  // `column_major` must hold n*p values; `labels` must be empty (defaults are
  // generated) or hold exactly p entries.
  DataMatrix(std::size_t n, std::size_t p, std::vector<double> column_major,
             std::vector<std::string> labels = {});

  static DataMatrix from_columns(const std::vector<std::vector<double>>& columns,
                                 std::vector<std::string> labels = {});

  std::size_t n() const noexcept { return n_; }
  std::size_t p() const noexcept { return p_; }

  std::span<const double> column(std::size_t k) const {
    return {values_.data() + k * n_, n_};
  }
  std::span<double> column(std::size_t k) { return {values_.data() + k * n_, n_}; }

  double at(std::size_t row, std::size_t k) const { return values_[k * n_ + row]; }
  double& at(std::size_t row, std::size_t k) { return values_[k * n_ + row]; }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t k) const { return labels_[k]; }

  // Throws NonFiniteValue naming the first offending cell.
  void require_finite() const;

 private:
  std::size_t n_ = 0;
  std::size_t p_ = 0;
  std::vector<double> values_;
  std::vector<std::string> labels_;
};

std::vector<std::string> default_labels(std::size_t p);

}  // namespace xihd
