#include "xihd/chatterjee.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "xihd/error.hpp"
#include "xihd/parallel.hpp"
#include "xihd/rng.hpp"

namespace xihd {

namespace {

void require_finite(std::span<const double> x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i])) {
      throw Error(ErrorCode::NonFiniteValue, "value at position " + std::to_string(i + 1) +
                                                 " is not finite");
    }
  }
}

void require_same_length(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::LengthMismatch, "lengths " + std::to_string(x.size()) + " and " +
                                               std::to_string(y.size()) + " differ");
  }
}

void require_pair_size(std::size_t n) {
  if (n < 2) {
    throw Error(ErrorCode::DomainTooSmall, "coefficient requires n >= 2, got " + std::to_string(n));
  }
}

// Indices of x in increasing order of value. Throws TiesPresent when two
// values coincide.
std::vector<std::int32_t> sorted_order(std::span<const double> x) {
  require_finite(x);
  std::vector<std::int32_t> order(x.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::int32_t a, std::int32_t b) { return x[a] < x[b]; });
  for (std::size_t r = 1; r < order.size(); ++r) {
    if (x[order[r - 1]] == x[order[r]]) {
      throw Error(ErrorCode::TiesPresent, "value " + std::to_string(x[order[r]]) +
                                              " occurs more than once (positions " +
                                              std::to_string(std::min(order[r - 1], order[r]) + 1) +
                                              " and " +
                                              std::to_string(std::max(order[r - 1], order[r]) + 1) + ")");
    }
  }
  return order;
}

RankVector ranks_from_order(const std::vector<std::int32_t>& order) {
  RankVector ranks(order.size());
  for (std::size_t r = 0; r < order.size(); ++r) ranks[order[r]] = static_cast<std::int32_t>(r + 1);
  return ranks;
}

std::int64_t abs_diff_sum_along(const std::vector<std::int32_t>& order, const RankVector& ranks) {
  std::int64_t sum = 0;
  for (std::size_t i = 1; i < order.size(); ++i) {
    const std::int32_t d = ranks[order[i]] - ranks[order[i - 1]];
    sum += d < 0 ? -d : d;
  }
  return sum;
}

}  // namespace

RankVector rank_vector(std::span<const double> x) { return ranks_from_order(sorted_order(x)); }

RankVector concomitant_ranks(std::span<const double> x, std::span<const double> y) {
  require_same_length(x, y);
  const auto order = sorted_order(x);
  const auto y_ranks = rank_vector(y);
  RankVector out(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) out[i] = y_ranks[order[i]];
  return out;
}

double xi_from_abs_diff_sum(std::int64_t abs_diff_sum, std::size_t n) noexcept {
  const auto nn = static_cast<std::int64_t>(n);
  return 1.0 - static_cast<double>(3 * abs_diff_sum) / static_cast<double>(nn * nn - 1);
}

double xi_pair(std::span<const double> x, std::span<const double> y) {
  require_same_length(x, y);
  require_pair_size(x.size());
  const auto conc = concomitant_ranks(x, y);
  std::int64_t sum = 0;
  for (std::size_t i = 1; i < conc.size(); ++i) sum += std::abs(conc[i] - conc[i - 1]);
  return xi_from_abs_diff_sum(sum, x.size());
}

double xi_pair_neighbor(std::span<const double> x, std::span<const double> y) {
  require_same_length(x, y);
  require_pair_size(x.size());
  require_finite(x);
  require_finite(y);
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (x[i] == x[j] || y[i] == y[j]) {
        throw Error(ErrorCode::TiesPresent, "positions " + std::to_string(i + 1) + " and " +
                                                std::to_string(j + 1) + " are tied");
      }
    }
  }
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t neighbor = i;
    for (std::size_t j = 0; j < n; ++j) {
      if (x[j] > x[i] && (neighbor == i || x[j] < x[neighbor])) neighbor = j;
    }
    std::int64_t rank_i = 0;
    std::int64_t rank_neighbor = 0;
    for (std::size_t j = 0; j < n; ++j) {
      rank_i += y[j] <= y[i];
      rank_neighbor += y[j] <= y[neighbor];
    }
    sum += rank_i > rank_neighbor ? rank_i - rank_neighbor : rank_neighbor - rank_i;
  }
  return xi_from_abs_diff_sum(sum, n);
}

XiMatrix::XiMatrix(std::size_t n, std::size_t p) : n_(n), p_(p), values_(p * p, 0.0) {
  for (std::size_t k = 0; k < p; ++k) values_[k * p + k] = undefined();
}

XiMatrix xi_matrix(const DataMatrix& data, unsigned threads) {
  const std::size_t n = data.n();
  const std::size_t p = data.p();
  require_pair_size(n);

  std::vector<std::vector<std::int32_t>> orders(p);
  std::vector<RankVector> ranks(p);
  for (std::size_t k = 0; k < p; ++k) {
    try {
      orders[k] = sorted_order(data.column(k));
    } catch (const Error& e) {
      throw Error(e.code(), "column '" + data.label(k) + "': " + e.what());
    }
    ranks[k] = ranks_from_order(orders[k]);
  }

  XiMatrix xi(n, p);
  parallel_for(p, threads, [&](std::size_t k) {
    for (std::size_t l = 0; l < p; ++l) {
      if (l == k) continue;
      xi.set(k, l, xi_from_abs_diff_sum(abs_diff_sum_along(orders[k], ranks[l]), n));
    }
  });
  return xi;
}

DataMatrix randomize_ties(const DataMatrix& data, std::uint64_t seed) {
  const std::size_t n = data.n();
  std::vector<double> values;
  values.reserve(n * data.p());
  std::vector<std::pair<double, std::uint64_t>> keyed(n);
  std::vector<std::int32_t> order(n);
  for (std::size_t k = 0; k < data.p(); ++k) {
    const auto col = data.column(k);
    try {
      require_finite(col);
    } catch (const Error& e) {
      throw Error(e.code(), "column '" + data.label(k) + "': " + e.what());
    }
    RandomStream stream(seed, k);
    for (std::size_t i = 0; i < n; ++i) keyed[i] = {col[i], stream.next_u64()};
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::int32_t a, std::int32_t b) { return keyed[a] < keyed[b]; });
    std::vector<double> ranked(n);
    for (std::size_t r = 0; r < n; ++r) ranked[order[r]] = static_cast<double>(r + 1);
    values.insert(values.end(), ranked.begin(), ranked.end());
  }
  return DataMatrix(n, data.p(), std::move(values), data.labels());
}

}  // namespace xihd
