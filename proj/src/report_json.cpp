#include "xihd/report_json.hpp"

#include "xihd/calibration.hpp"
#include "xihd/error.hpp"

namespace xihd {

nlohmann::json to_json(const TestReport& report, const std::vector<std::string>* labels) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& pair : report.screened_pairs) {
    nlohmann::json entry = {{"k", pair.k + 1}, {"l", pair.l + 1}, {"xi", pair.xi}};
    if (labels != nullptr) {
      entry["k_label"] = labels->at(pair.k);
      entry["l_label"] = labels->at(pair.l);
    }
    pairs.push_back(std::move(entry));
  }
  nlohmann::json doc = {
      {"kind", std::string(to_string(report.kind))},
      {"statistic", report.statistic},
      {"p_value", report.p_value},
      {"reject", report.reject},
      {"alpha", report.alpha},
      {"n", report.n},
      {"p", report.p},
      {"threshold", report.threshold},
      {"screened_pairs", std::move(pairs)},
      {"j0", report.j0},
      {"screened", report.screened},
  };
  doc["seed"] = report.seed ? nlohmann::json(*report.seed) : nlohmann::json(nullptr);
  return doc;
}

TestReport test_report_from_json(const nlohmann::json& doc) {
  try {
    TestReport report;
    const auto kind = parse_test_kind(doc.at("kind").get<std::string>());
    if (!kind) throw Error(ErrorCode::ParseError, "unknown test kind");
    report.kind = *kind;
    report.statistic = doc.at("statistic").get<double>();
    report.p_value = doc.at("p_value").get<double>();
    report.reject = doc.at("reject").get<bool>();
    report.alpha = doc.at("alpha").get<double>();
    report.n = doc.at("n").get<std::size_t>();
    report.p = doc.at("p").get<std::size_t>();
    report.threshold = doc.at("threshold").get<double>();
    report.j0 = doc.at("j0").get<double>();
    report.screened = doc.at("screened").get<bool>();
    for (const auto& entry : doc.at("screened_pairs")) {
      const auto k = entry.at("k").get<std::size_t>();
      const auto l = entry.at("l").get<std::size_t>();
      if (k == 0 || l == 0) throw Error(ErrorCode::ParseError, "pair indices are one-based");
      report.screened_pairs.push_back({k - 1, l - 1, entry.at("xi").get<double>()});
    }
    if (!doc.at("seed").is_null()) report.seed = doc.at("seed").get<std::uint64_t>();
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed report: ") + e.what());
  }
}

nlohmann::json to_json(const SimResult& result, bool with_timing) {
  nlohmann::json freqs = nlohmann::json::object();
  nlohmann::json counts = nlohmann::json::object();
  for (const auto& tally : result.tallies) {
    freqs[std::string(to_string(tally.kind))] = tally.frequency;
    counts[std::string(to_string(tally.kind))] = tally.rejections;
  }
  nlohmann::json doc = {
      {"model", std::string(to_string(result.spec.model.id))},
      {"model_param", result.spec.model.param},
      {"n", result.spec.n},
      {"p", result.spec.p},
      {"reps", result.spec.reps},
      {"alpha", result.spec.alpha},
      {"seed", result.spec.seed},
      {"rejection_frequency", std::move(freqs)},
      {"rejections", std::move(counts)},
      {"freq_nonempty_screen", result.freq_nonempty_screen},
      {"nonempty_screens", result.nonempty_screens},
  };
  if (with_timing) doc["wall_time"] = result.wall_time_seconds;
  return doc;
}

MomentTable moment_table(std::int64_t n, std::int64_t p) {
  MomentTable table;
  table.n = n;
  table.p = p;
  table.stat = stat_moments(n, p);  // enforces n >= 5, p >= 2
  table.null = null_moments(n);
  table.c_p = cp(p);
  table.delta_np = delta_np(n, p);
  return table;
}

nlohmann::json to_json(const MomentTable& table) {
  return {
      {"n", table.n},
      {"p", table.p},
      {"u_n", table.null.u_n},
      {"v_n2", table.null.v_n2},
      {"cov_n", table.null.cov_n},
      {"mu_np", table.stat.mu_np},
      {"sigma_np2", table.stat.sigma_np2},
      {"c_p", table.c_p},
      {"delta_np", table.delta_np},
  };
}

}  // namespace xihd
