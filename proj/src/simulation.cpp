#include "xihd/simulation.hpp"

#include <chrono>
#include <string>

#include "xihd/error.hpp"
#include "xihd/parallel.hpp"

namespace xihd {

std::optional<double> SimResult::frequency(TestKind kind) const {
  for (const auto& tally : tallies) {
    if (tally.kind == kind) return tally.frequency;
  }
  return std::nullopt;
}

SimResult run_simulation(const SimSpec& spec, unsigned threads) {
  if (spec.reps < 1) throw Error(ErrorCode::DomainTooSmall, "reps must be >= 1");
  if (!(spec.alpha > 0.0 && spec.alpha < 1.0)) {
    throw Error(ErrorCode::DomainError, "alpha must lie in (0, 1), got " + std::to_string(spec.alpha));
  }
  const auto start = std::chrono::steady_clock::now();
  const ModelSampler sampler(spec.model, spec.n, spec.p);

  const std::size_t tests = spec.tests.size();
  // Row r holds the decisions of replicate r, followed by the screening flag.
  std::vector<unsigned char> outcomes(spec.reps * (tests + 1), 0);

  parallel_for(spec.reps, threads, [&](std::size_t rep) {
    RandomStream stream(spec.seed, rep);
    const DataMatrix data = sampler.draw(stream);
    const XiMatrix xi = xi_matrix(data);
    unsigned char* row = outcomes.data() + rep * (tests + 1);
    for (std::size_t t = 0; t < tests; ++t) row[t] = evaluate(xi, spec.tests[t], spec.alpha).reject;
    row[tests] = !screening_set(xi).empty();
  });

  SimResult result;
  result.spec = spec;
  result.tallies.resize(tests);
  for (std::size_t t = 0; t < tests; ++t) result.tallies[t].kind = spec.tests[t];
  for (std::size_t rep = 0; rep < spec.reps; ++rep) {
    const unsigned char* row = outcomes.data() + rep * (tests + 1);
    for (std::size_t t = 0; t < tests; ++t) result.tallies[t].rejections += row[t];
    result.nonempty_screens += row[tests];
  }
  const double reps = static_cast<double>(spec.reps);
  for (auto& tally : result.tallies) tally.frequency = static_cast<double>(tally.rejections) / reps;
  result.freq_nonempty_screen = static_cast<double>(result.nonempty_screens) / reps;
  result.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace xihd
