#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "xihd/calibration.hpp"
#include "xihd/error.hpp"
#include "xihd/independence_test.hpp"
#include "xihd/null_moments.hpp"

using namespace xihd;

namespace {

XiMatrix filled(std::size_t n, std::size_t p, double value) {
  XiMatrix xi(n, p);
  for (std::size_t k = 0; k < p; ++k) {
    for (std::size_t l = 0; l < p; ++l) {
      if (k != l) xi.set(k, l, value);
    }
  }
  return xi;
}

DataMatrix gaussian_data(std::mt19937_64& rng, std::size_t n, std::size_t p) {
  std::normal_distribution<double> normal;
  DataMatrix data(n, p);
  for (std::size_t k = 0; k < p; ++k) {
    for (std::size_t i = 0; i < n; ++i) data.at(i, k) = normal(rng);
  }
  return data;
}

// Two-column-block data where column 0 is a noiseless W-shape of column 1.
DataMatrix w_shaped_data(std::mt19937_64& rng, std::size_t n, std::size_t p) {
  auto data = gaussian_data(rng, n, p);
  for (std::size_t i = 0; i < n; ++i) {
    const double v = data.at(i, 1);
    data.at(i, 0) = v < 0 ? std::fabs(v + 0.5) : std::fabs(v - 0.5);
  }
  return data;
}

}  // namespace

TEST(QuadraticStat, CentredAtNullMean) {
  // Every squared entry equal to u_n puts the sum exactly at mu_np.
  const auto xi = filled(50, 20, std::sqrt(u_n(50)));
  EXPECT_NEAR(quadratic_stat(xi), 0.0, 1e-12);
}

TEST(QuadraticStat, ZeroMatrix) {
  const auto xi = filled(50, 20, 0.0);
  const auto m = stat_moments(50, 20);
  EXPECT_DOUBLE_EQ(quadratic_stat(xi), -m.mu_np / std::sqrt(m.sigma_np2));
}

TEST(QuadraticStat, RejectsSmallSamples) {
  try {
    quadratic_stat(filled(4, 10, 0.0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DomainTooSmall);
  }
  EXPECT_THROW(extreme_stat(filled(4, 10, 0.0)), Error);
  EXPECT_THROW(screening_set(filled(50, 1, 0.0)), Error);
}

TEST(ExtremeStat, ZeroAndSingleEntry) {
  EXPECT_DOUBLE_EQ(extreme_stat(filled(5, 100, 0.0)), -cp(100));
  auto xi = filled(5, 100, 0.0);
  xi.set(0, 1, -0.5);
  EXPECT_NEAR(extreme_stat(xi), -12.053389158646888889, 1e-12);
}

TEST(Screening, EmptyForZeroMatrix) {
  const auto set = screening_set(filled(50, 100, 0.0));
  EXPECT_TRUE(set.empty());
  EXPECT_NEAR(set.threshold, 0.50625796915509855890, 1e-12);
  EXPECT_EQ(j0(filled(50, 100, 0.0)), 0.0);
}

TEST(Screening, SingleStrongPair) {
  auto xi = filled(50, 100, 0.0);
  xi.set(0, 1, 0.9);
  const auto set = screening_set(xi);
  ASSERT_EQ(set.pairs.size(), 1u);
  EXPECT_EQ(set.pairs[0], (ScreenedPair{0, 1, 0.9}));
  EXPECT_NEAR(j0(xi), 10652.864572055872546, 1e-8);
  EXPECT_GT(j0(xi), std::sqrt(9900.0) * delta_np(50, 100) * delta_np(50, 100));
}

TEST(Screening, StrictInequalityAndOrdering) {
  auto xi = filled(50, 10, 0.0);
  const double threshold = screening_threshold(50, 10);
  xi.set(3, 1, threshold);  // boundary: not screened
  xi.set(5, 2, -0.95);
  xi.set(2, 5, 0.8);
  xi.set(0, 9, 0.7);
  const auto set = screening_set(xi);
  ASSERT_EQ(set.pairs.size(), 3u);
  EXPECT_EQ(set.pairs[0].k, 0u);
  EXPECT_EQ(set.pairs[1].k, 2u);
  EXPECT_EQ(set.pairs[2].k, 5u);
  for (const auto& pair : set.pairs) {
    EXPECT_NE(pair.k, pair.l);
    EXPECT_GT(std::fabs(pair.xi), set.threshold);
  }
}

TEST(Evaluate, DecisionRuleAtBoundary) {
  // A statistic exactly at the critical value is not rejected.
  auto xi = filled(50, 100, 0.0);
  const double target = gumbel_quantile(0.05) + cp(100);
  // Choose |xi| so that xi^2 / u_n == target up to rounding, then check the
  // decision agrees with the comparison actually made.
  xi.set(0, 1, std::sqrt(target * u_n(50)));
  const auto report = evaluate(xi, TestKind::Extreme, 0.05);
  EXPECT_EQ(report.reject, report.statistic > report.threshold);
}

TEST(RunTests, ReportInvariantsOnRandomData) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const auto data = trial % 2 ? gaussian_data(rng, 30, 25) : w_shaped_data(rng, 30, 25);
    const auto reports = run_tests(data, kAllTestKinds, 0.05);
    ASSERT_EQ(reports.size(), 3u);
    const auto& quad = reports[0];
    const auto& ext = reports[1];
    const auto& enh = reports[2];
    for (const auto& r : reports) {
      EXPECT_EQ(r.reject, r.statistic > r.threshold);
      EXPECT_EQ(r.reject, r.p_value < r.alpha);
      EXPECT_GE(r.p_value, 0.0);
      EXPECT_LE(r.p_value, 1.0);
      EXPECT_EQ(r.n, 30u);
      EXPECT_EQ(r.p, 25u);
      EXPECT_FALSE(r.seed.has_value());
    }
    EXPECT_EQ(quad.kind, TestKind::Quadratic);
    EXPECT_EQ(ext.kind, TestKind::Extreme);
    EXPECT_NEAR(quad.threshold, 1.6448536269514727, 1e-12);
    EXPECT_NEAR(ext.threshold, 2.7162190705550930, 1e-12);
    EXPECT_TRUE(quad.screened_pairs.empty());
    EXPECT_EQ(quad.j0, 0.0);
    EXPECT_GE(enh.j0, 0.0);
    EXPECT_GE(enh.statistic, quad.statistic);
    EXPECT_EQ(enh.statistic, enh.j0 + quad.statistic);
    EXPECT_EQ(enh.screened, !enh.screened_pairs.empty());
    if (enh.screened_pairs.empty()) EXPECT_EQ(enh.statistic, quad.statistic);
    const double thr = screening_threshold(30, 25);
    for (const auto& pair : enh.screened_pairs) EXPECT_GT(std::fabs(pair.xi), thr);
  }
}

TEST(RunTests, WShapeIsScreened) {
  std::mt19937_64 rng(12);
  const auto data = w_shaped_data(rng, 100, 50);
  const auto reports = run_tests(data, kAllTestKinds, 0.05);
  ASSERT_FALSE(reports[2].screened_pairs.empty());
  EXPECT_EQ(reports[2].screened_pairs.front().k, 1u);
  EXPECT_EQ(reports[2].screened_pairs.front().l, 0u);
  EXPECT_TRUE(reports[1].reject);
  EXPECT_TRUE(reports[2].reject);
  EXPECT_LT(reports[2].p_value, reports[0].p_value);
}

TEST(RunTests, ExtremeStatInvariantUnderMonotoneTransforms) {
  std::mt19937_64 rng(21);
  const auto data = w_shaped_data(rng, 40, 12);
  DataMatrix transformed = data;
  for (std::size_t k = 0; k < transformed.p(); k += 2) {
    for (auto& v : transformed.column(k)) v = std::exp(v);
  }
  const auto a = run_test(data, TestKind::Extreme, 0.05);
  const auto b = run_test(transformed, TestKind::Extreme, 0.05);
  EXPECT_EQ(a.statistic, b.statistic);
}

TEST(RunTests, DataContractErrors) {
  std::mt19937_64 rng(2);
  auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::IoError;
  };
  EXPECT_EQ(code([&] { run_test(gaussian_data(rng, 4, 10), TestKind::Quadratic, 0.05); }),
            ErrorCode::DomainTooSmall);
  EXPECT_EQ(code([&] { run_test(gaussian_data(rng, 10, 1), TestKind::Quadratic, 0.05); }),
            ErrorCode::DomainTooSmall);
  EXPECT_EQ(code([&] { run_test(gaussian_data(rng, 10, 3), TestKind::Quadratic, 1.0); }),
            ErrorCode::DomainError);

  auto tied = gaussian_data(rng, 10, 3);
  tied.at(4, 2) = tied.at(7, 2);
  EXPECT_EQ(code([&] { run_test(tied, TestKind::Quadratic, 0.05); }), ErrorCode::TiesPresent);
  const auto report = run_test(tied, TestKind::Enhanced, 0.05, 99);
  ASSERT_TRUE(report.seed.has_value());
  EXPECT_EQ(*report.seed, 99u);
  EXPECT_EQ(report, run_test(tied, TestKind::Enhanced, 0.05, 99));

  auto nonfinite = gaussian_data(rng, 10, 3);
  nonfinite.at(0, 0) = NAN;
  EXPECT_EQ(code([&] { run_test(nonfinite, TestKind::Quadratic, 0.05); }),
            ErrorCode::NonFiniteValue);
}

TEST(TestKindNames, ParseAndPrint) {
  for (TestKind kind : kAllTestKinds) EXPECT_EQ(parse_test_kind(to_string(kind)), kind);
  EXPECT_EQ(parse_test_kind("J_E"), TestKind::Enhanced);
  EXPECT_EQ(parse_test_kind("m_xi"), TestKind::Extreme);
  EXPECT_FALSE(parse_test_kind("pearson").has_value());
}
