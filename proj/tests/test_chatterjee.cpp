#include <gtest/gtest.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "xihd/chatterjee.hpp"
#include "xihd/error.hpp"

using namespace xihd;

namespace {

std::vector<double> random_column(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> normal;
  std::vector<double> v(n);
  for (auto& x : v) x = normal(rng);
  return v;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an xihd::Error";
  return ErrorCode::IoError;
}

}  // namespace

TEST(RankVector, DefinitionExamples) {
  EXPECT_EQ(rank_vector(std::vector{0.3, 0.1, 0.2}), (RankVector{3, 1, 2}));
  EXPECT_EQ(rank_vector(std::vector{1.0, 2.0, 3.0, 4.0}), (RankVector{1, 2, 3, 4}));
}

TEST(RankVector, RejectsTiesAndNonFinite) {
  EXPECT_EQ(code_of([] { rank_vector(std::vector{5.0, 5.0, 1.0}); }), ErrorCode::TiesPresent);
  EXPECT_EQ(code_of([] { rank_vector(std::vector<double>{1.0, NAN, 2.0}); }), ErrorCode::NonFiniteValue);
  EXPECT_EQ(code_of([] { rank_vector(std::vector<double>{1.0, INFINITY}); }), ErrorCode::NonFiniteValue);
}

TEST(RankVector, AlwaysAPermutation) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto x = random_column(rng, 1 + trial % 60);
    auto ranks = rank_vector(x);
    // Counting definition.
    for (std::size_t i = 0; i < x.size(); ++i) {
      const auto count = std::count_if(x.begin(), x.end(), [&](double v) { return v <= x[i]; });
      ASSERT_EQ(ranks[i], count);
    }
    std::sort(ranks.begin(), ranks.end());
    for (std::size_t i = 0; i < ranks.size(); ++i) ASSERT_EQ(ranks[i], static_cast<int>(i + 1));
  }
}

TEST(ConcomitantRanks, Examples) {
  EXPECT_EQ(concomitant_ranks(std::vector{0.3, 0.1, 0.2}, std::vector{10.0, 30.0, 20.0}),
            (RankVector{3, 2, 1}));
  EXPECT_EQ(concomitant_ranks(std::vector{1.0, 2.0, 3.0}, std::vector{1.0, 2.0, 3.0}),
            (RankVector{1, 2, 3}));
  EXPECT_EQ(concomitant_ranks(std::vector{1.0, 2.0, 3.0, 4.0}, std::vector{2.0, 1.0, 4.0, 3.0}),
            (RankVector{2, 1, 4, 3}));
}

TEST(ConcomitantRanks, Errors) {
  EXPECT_EQ(code_of([] { concomitant_ranks(std::vector{1.0, 2.0}, std::vector{1.0}); }),
            ErrorCode::LengthMismatch);
  EXPECT_EQ(code_of([] { concomitant_ranks(std::vector{1.0, 2.0}, std::vector{3.0, 3.0}); }),
            ErrorCode::TiesPresent);
}

TEST(XiPair, HandComputedValues) {
  const std::vector<double> id5{1, 2, 3, 4, 5};
  EXPECT_DOUBLE_EQ(xi_pair(id5, id5), 0.5);
  EXPECT_DOUBLE_EQ(xi_pair(std::vector{1.0, 2.0, 3.0, 4.0}, std::vector{2.0, 1.0, 4.0, 3.0}), 0.0);
  EXPECT_DOUBLE_EQ(xi_pair(std::vector{1.0, 2.0, 3.0}, std::vector{3.0, 1.0, 2.0}), -0.125);
}

TEST(XiPair, NeedsTwoObservations) {
  EXPECT_EQ(code_of([] { xi_pair(std::vector{1.0}, std::vector{2.0}); }), ErrorCode::DomainTooSmall);
  EXPECT_EQ(code_of([] { xi_pair_neighbor(std::vector{1.0}, std::vector{2.0}); }),
            ErrorCode::DomainTooSmall);
  EXPECT_EQ(code_of([] { xi_pair_neighbor(std::vector{1.0, 1.0}, std::vector{2.0, 3.0}); }),
            ErrorCode::TiesPresent);
}

TEST(XiPairNeighbor, MatchesHandValues) {
  const std::vector<double> id5{1, 2, 3, 4, 5};
  EXPECT_DOUBLE_EQ(xi_pair_neighbor(id5, id5), 0.5);
  EXPECT_DOUBLE_EQ(xi_pair_neighbor(std::vector{1.0, 2.0, 3.0, 4.0}, std::vector{2.0, 1.0, 4.0, 3.0}),
                   0.0);
  EXPECT_DOUBLE_EQ(xi_pair_neighbor(std::vector{1.0, 2.0, 3.0}, std::vector{3.0, 1.0, 2.0}), -0.125);
}

TEST(XiPairNeighbor, BitIdenticalToSortedRoute) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 2 + trial % 30;
    const auto x = random_column(rng, n);
    const auto y = random_column(rng, n);
    ASSERT_EQ(xi_pair(x, y), xi_pair_neighbor(x, y)) << "n=" << n;
  }
}

TEST(XiPair, BoundsAndMonotoneAttainment) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 2 + trial % 40;
    const auto x = random_column(rng, n);
    const auto y = random_column(rng, n);
    const double upper = static_cast<double>(n - 2) / static_cast<double>(n + 1);
    const double xi = xi_pair(x, y);
    ASSERT_GE(xi, -1.0);
    ASSERT_LE(xi, upper + 1e-15);

    std::vector<double> increasing(n), decreasing(n);
    for (std::size_t i = 0; i < n; ++i) {
      increasing[i] = std::atan(x[i]);
      decreasing[i] = -x[i] * x[i] * x[i];
    }
    ASSERT_NEAR(xi_pair(x, increasing), upper, 1e-15);
    ASSERT_NEAR(xi_pair(x, decreasing), upper, 1e-15);
  }
}

TEST(XiPair, InvariantUnderIncreasingMaps) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 5 + trial % 50;
    const auto x = random_column(rng, n);
    const auto y = random_column(rng, n);
    std::vector<double> fx(n), gy(n);
    std::transform(x.begin(), x.end(), fx.begin(), [](double v) { return std::exp(v); });
    std::transform(y.begin(), y.end(), gy.begin(), [](double v) { return v * v * v; });
    ASSERT_EQ(xi_pair(fx, gy), xi_pair(x, y));
  }
}

TEST(XiPair, IsNotSymmetric) {
  // Noisy even function: y depends on x but x is not a function of y.
  std::mt19937_64 rng(3);
  std::normal_distribution<double> normal;
  std::vector<double> x(200), y(200);
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = normal(rng);
    y[i] = x[i] * x[i] + 0.05 * normal(rng);
  }
  const double forward = xi_pair(x, y);
  const double backward = xi_pair(y, x);
  EXPECT_NE(forward, backward);
  EXPECT_GT(forward, 0.7);
  EXPECT_LT(backward, 0.5);
}

TEST(XiMatrix, TwoIdenticalColumns) {
  const std::vector<double> id5{1, 2, 3, 4, 5};
  const auto data = DataMatrix::from_columns({id5, id5});
  const auto xi = xi_matrix(data);
  EXPECT_DOUBLE_EQ(xi.at(0, 1), 0.5);
  EXPECT_DOUBLE_EQ(xi.at(1, 0), 0.5);
  EXPECT_TRUE(std::isnan(xi.at(0, 0)));
  EXPECT_TRUE(std::isnan(xi.at(1, 1)));
}

TEST(XiMatrix, EntriesMatchPairwiseCoefficient) {
  std::mt19937_64 rng(17);
  std::vector<std::vector<double>> cols;
  for (int k = 0; k < 7; ++k) cols.push_back(random_column(rng, 23));
  const auto data = DataMatrix::from_columns(cols);
  const auto xi = xi_matrix(data);
  for (std::size_t k = 0; k < 7; ++k) {
    for (std::size_t l = 0; l < 7; ++l) {
      if (k == l) continue;
      EXPECT_EQ(xi.at(k, l), xi_pair(cols[k], cols[l]));
      EXPECT_EQ(xi.at(k, l), xi_pair_neighbor(cols[k], cols[l]));
    }
  }
}

TEST(XiMatrix, RankInvariantAndScheduleIndependent) {
  std::mt19937_64 rng(99);
  const auto x = random_column(rng, 40);
  auto ex = x;
  std::transform(ex.begin(), ex.end(), ex.begin(), [](double v) { return std::exp(v); });
  const auto a = xi_matrix(DataMatrix::from_columns({x, x}));
  const auto b = xi_matrix(DataMatrix::from_columns({x, ex}));
  EXPECT_EQ(a.at(0, 1), b.at(0, 1));
  EXPECT_EQ(a.at(1, 0), b.at(1, 0));

  std::vector<std::vector<double>> cols;
  for (int k = 0; k < 30; ++k) cols.push_back(random_column(rng, 35));
  const auto data = DataMatrix::from_columns(cols);
  const auto serial = xi_matrix(data, 1);
  const auto parallel = xi_matrix(data, 4);
  for (std::size_t k = 0; k < 30; ++k) {
    for (std::size_t l = 0; l < 30; ++l) {
      if (k != l) ASSERT_EQ(serial.at(k, l), parallel.at(k, l));
    }
  }
}

TEST(XiMatrix, TiedColumnIsNamed) {
  const auto data = DataMatrix::from_columns({{1, 2, 3}, {4, 4, 5}}, {"a", "bee"});
  try {
    xi_matrix(data);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TiesPresent);
    EXPECT_NE(std::string(e.what()).find("bee"), std::string::npos);
  }
}

TEST(RandomizeTies, DeterministicPermutationRanks) {
  const auto data = DataMatrix::from_columns({{1, 1, 1, 2, 2}, {3, 1, 2, 5, 4}});
  const auto a = randomize_ties(data, 42);
  const auto b = randomize_ties(data, 42);
  for (std::size_t k = 0; k < 2; ++k) {
    std::vector<double> col(a.column(k).begin(), a.column(k).end());
    EXPECT_TRUE(std::equal(col.begin(), col.end(), b.column(k).begin()));
    // Tied values stay below the larger distinct ones.
    std::vector<double> sorted = col;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) EXPECT_EQ(sorted[i], static_cast<double>(i + 1));
  }
  for (std::size_t i = 0; i < 3; ++i) EXPECT_LE(a.at(i, 0), 3.0);
  // Untied column keeps its ranks.
  EXPECT_EQ(a.at(0, 1), 3.0);
  EXPECT_EQ(a.at(3, 1), 5.0);
  EXPECT_NO_THROW(xi_matrix(a));
}

TEST(XiMatrix, CostGrowsNearLinearlyInN) {
  // Soft check of the O(n log n) per-pair cost: doubling n four times should
  // not inflate run time anywhere near quadratically.
  std::mt19937_64 rng(1);
  auto time_for = [&](std::size_t n) {
    std::vector<std::vector<double>> cols;
    for (int k = 0; k < 20; ++k) cols.push_back(random_column(rng, n));
    const auto data = DataMatrix::from_columns(cols);
    const auto start = std::chrono::steady_clock::now();
    for (int rep = 0; rep < 3; ++rep) xi_matrix(data);
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };
  const double small = time_for(2000);
  const double large = time_for(32000);
  EXPECT_LT(large / small, 64.0);  // quadratic growth would be ~256x
}
