#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "xihd/data_matrix.hpp"

namespace xihd {

// Ranks 1..n; always a permutation of {1, ..., n}.
using RankVector = std::vector<std::int32_t>;

// ranks[i] = #{j : x[j] <= x[i]}. Throws TiesPresent on duplicate values and
// NonFiniteValue on NaN or infinities.
RankVector rank_vector(std::span<const double> x);

// Ranks of y listed in increasing order of x (the concomitant ranks).
RankVector concomitant_ranks(std::span<const double> x, std::span<const double> y);

// 1 - 3 s / (n^2 - 1) for the integer sum s of absolute consecutive rank
// differences. Shared by every route that computes the coefficient so that
// they agree bit for bit.
double xi_from_abs_diff_sum(std::int64_t abs_diff_sum, std::size_t n) noexcept;

// Chatterjee's coefficient of y on x via the sorted concomitant ranks.
// O(n log n). Requires n >= 2.
double xi_pair(std::span<const double> x, std::span<const double> y);

// Same coefficient via the right-neighbour index: for each i, N(i) is the
// observation with the next larger x value (or i itself for the maximum), and
// the statistic sums |R_i - R_N(i)| over ranks of y. Uses neither sorting nor
// rank_vector; O(n^2). Kept as a cross-check of xi_pair.
double xi_pair_neighbor(std::span<const double> x, std::span<const double> y);

// p x p matrix of coefficients xi[k][l] = xi_pair(column k, column l). The
// diagonal is undefined and stored as a quiet NaN.
class XiMatrix {
 public:
  XiMatrix() = default;
  XiMatrix(std::size_t n, std::size_t p);

  std::size_t n() const noexcept { return n_; }
  std::size_t p() const noexcept { return p_; }

  double at(std::size_t k, std::size_t l) const { return values_[k * p_ + l]; }
  void set(std::size_t k, std::size_t l, double xi) { values_[k * p_ + l] = xi; }

  static constexpr double undefined() noexcept { return std::numeric_limits<double>::quiet_NaN(); }

 private:
  std::size_t n_ = 0;
  std::size_t p_ = 0;
  std::vector<double> values_;
};

// All ordered-pair coefficients. Each conditioning column is sorted once and
// reused for every target column. Output does not depend on `threads`.
XiMatrix xi_matrix(const DataMatrix& data, unsigned threads = 1);

// Replaces each column by its ranks with ties broken uniformly at random.
// Column k uses RandomStream(seed, k), so the result depends only on the data
// and the seed.
DataMatrix randomize_ties(const DataMatrix& data, std::uint64_t seed);

}  // namespace xihd
