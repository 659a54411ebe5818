#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "xihd/independence_test.hpp"
#include "xihd/null_moments.hpp"
#include "xihd/simulation.hpp"

namespace xihd {

// Flat object whose keys are the TestReport field names. Screened pairs use
// one-based column indices; when `labels` is given each pair also carries
// "k_label"/"l_label". A missing seed is written as null.
nlohmann::json to_json(const TestReport& report, const std::vector<std::string>* labels = nullptr);

// Inverse of to_json; label fields are ignored. Throws ParseError on a
// malformed document.
TestReport test_report_from_json(const nlohmann::json& doc);

// Wall time is only included when `with_timing` is set, so that repeated runs
// serialize identically.
nlohmann::json to_json(const SimResult& result, bool with_timing = false);

struct MomentTable {
  std::int64_t n = 0;
  std::int64_t p = 0;
  NullMoments null;
  StatMoments stat;
  double c_p = 0.0;
  double delta_np = 0.0;
};

// Throws DomainTooSmall below the test floor (n >= 5, p >= 2).
MomentTable moment_table(std::int64_t n, std::int64_t p);
nlohmann::json to_json(const MomentTable& table);

}  // namespace xihd
