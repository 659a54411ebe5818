#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "xihd/independence_test.hpp"
#include "xihd/models.hpp"

namespace xihd {

struct SimSpec {
  ModelSpec model;
  std::size_t n = 50;
  std::size_t p = 100;
  std::size_t reps = 1000;
  double alpha = 0.05;
  std::uint64_t seed = 0;
  std::vector<TestKind> tests{std::begin(kAllTestKinds), std::end(kAllTestKinds)};
};

struct TestTally {
  TestKind kind = TestKind::Quadratic;
  std::size_t rejections = 0;
  double frequency = 0.0;  // rejections / reps
};

struct SimResult {
  SimSpec spec;
  std::vector<TestTally> tallies;  // in the order of spec.tests
  std::size_t nonempty_screens = 0;
  double freq_nonempty_screen = 0.0;
  double wall_time_seconds = 0.0;

  // Frequency for `kind`, if that test was run.
  std::optional<double> frequency(TestKind kind) const;
};

// Replicate r draws its data from RandomStream(spec.seed, r). Rejections are
// tallied per replicate and summed in index order, so results are identical
// for any thread count.
SimResult run_simulation(const SimSpec& spec, unsigned threads = 1);

}  // namespace xihd
