#include "xihd/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "xihd/csv.hpp"
#include "xihd/error.hpp"
#include "xihd/independence_test.hpp"
#include "xihd/models.hpp"
#include "xihd/parallel.hpp"
#include "xihd/report_json.hpp"
#include "xihd/simulation.hpp"

namespace xihd {

namespace {

struct RunConfig {
  std::string input_path;
  double alpha = 0.05;
  std::vector<std::string> kinds;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> models;
  std::vector<std::size_t> ns;
  std::vector<std::size_t> ps;
  std::size_t reps = 1000;
  std::uint64_t sim_seed = 1;
  std::optional<double> model_param;
  bool full_grid = false;
  bool timing = false;
  std::int64_t moments_n = 0;
  std::int64_t moments_p = 0;
  std::string output;
  std::string format = "json";
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::IoError:
    case ErrorCode::ParseError:
    case ErrorCode::InvalidConfig:
      return kExitIoOrParse;
    default:
      return kExitDataContract;
  }
}

std::string format_double(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

// Writes to stdout, or to `path` through a temporary file renamed into place.
void emit(const RunConfig& config, const std::string& text, std::ostream& out) {
  if (config.output.empty() || config.output == "-") {
    out << text;
    return;
  }
  const std::filesystem::path target(config.output);
  std::filesystem::path temp = target;
  temp += ".tmp";
  {
    std::ofstream file(temp, std::ios::binary | std::ios::trunc);
    if (!file) throw Error(ErrorCode::IoError, "cannot write '" + temp.string() + "'");
    file << text;
    file.flush();
    if (!file) throw Error(ErrorCode::IoError, "failed writing '" + temp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(temp, target, ec);
  if (ec) {
    std::filesystem::remove(temp, ec);
    throw Error(ErrorCode::IoError, "cannot replace '" + target.string() + "'");
  }
}

std::vector<TestKind> resolve_kinds(const std::vector<std::string>& names) {
  if (names.empty()) return {std::begin(kAllTestKinds), std::end(kAllTestKinds)};
  std::vector<TestKind> kinds;
  for (const auto& name : names) {
    const auto kind = parse_test_kind(name);
    if (!kind) throw Error(ErrorCode::ParseError, "unknown test kind '" + name + "'");
    kinds.push_back(*kind);
  }
  return kinds;
}

DataMatrix load_data(const RunConfig& config) {
  return to_data_matrix(parse_csv(read_text_file(config.input_path)));
}

void require_test_shape(const DataMatrix& data) {
  if (data.n() < kMinTestRows) {
    throw Error(ErrorCode::DomainTooSmall, "need at least " + std::to_string(kMinTestRows) +
                                               " data rows, got " + std::to_string(data.n()));
  }
  if (data.p() < kMinTestColumns) {
    throw Error(ErrorCode::DomainTooSmall, "need at least " + std::to_string(kMinTestColumns) +
                                               " columns, got " + std::to_string(data.p()));
  }
}

int cmd_test(const RunConfig& config, std::ostream& out) {
  const auto kinds = resolve_kinds(config.kinds);
  const DataMatrix data = load_data(config);
  require_test_shape(data);
  const auto reports = run_tests(data, kinds, config.alpha, config.seed, configured_threads());

  std::string text;
  if (config.format == "json") {
    nlohmann::json doc;
    doc["input"] = config.input_path;
    doc["columns"] = data.labels();
    doc["reports"] = nlohmann::json::array();
    for (const auto& report : reports) doc["reports"].push_back(to_json(report, &data.labels()));
    text = doc.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << "n = " << data.n() << ", p = " << data.p() << ", alpha = " << config.alpha;
    if (config.seed) os << ", tie-breaking seed = " << *config.seed;
    os << "\n";
    char line[160];
    std::snprintf(line, sizeof line, "%-10s %16s %14s %12s  %s\n", "test", "statistic", "p_value",
                  "threshold", "decision");
    os << line;
    for (const auto& r : reports) {
      std::snprintf(line, sizeof line, "%-10s %16.6g %14.6g %12.6g  %s\n",
                    std::string(to_string(r.kind)).c_str(), r.statistic, r.p_value, r.threshold,
                    r.reject ? "reject" : "accept");
      os << line;
    }
    for (const auto& r : reports) {
      if (r.kind != TestKind::Enhanced) continue;
      os << "screened pairs: " << r.screened_pairs.size() << " (J_0 = " << r.j0 << ")\n";
      for (const auto& pair : r.screened_pairs) {
        os << "  " << data.label(pair.k) << " -> " << data.label(pair.l) << "  xi = "
           << format_double("%.6f", pair.xi) << "\n";
      }
      break;
    }
    text = os.str();
  }
  emit(config, text, out);
  return kExitOk;
}

int cmd_xi(const RunConfig& config, std::ostream& out) {
  const DataMatrix data = load_data(config);
  if (data.n() < 2 || data.p() < 2) {
    throw Error(ErrorCode::DomainTooSmall, "need at least 2 rows and 2 columns");
  }
  data.require_finite();
  const XiMatrix xi = config.seed ? xi_matrix(randomize_ties(data, *config.seed), configured_threads())
                                  : xi_matrix(data, configured_threads());
  emit(config, xi_matrix_to_csv(xi, data.labels()), out);
  return kExitOk;
}

int cmd_moments(const RunConfig& config, std::ostream& out) {
  const MomentTable table = moment_table(config.moments_n, config.moments_p);
  std::string text;
  if (config.format == "json") {
    text = to_json(table).dump(2) + "\n";
  } else {
    const std::pair<const char*, double> rows[] = {
        {"u_n", table.null.u_n},         {"v_n2", table.null.v_n2},
        {"cov_n", table.null.cov_n},     {"mu_np", table.stat.mu_np},
        {"sigma_np2", table.stat.sigma_np2}, {"c_p", table.c_p},
        {"delta_np", table.delta_np}};
    std::ostringstream os;
    os << "n = " << table.n << ", p = " << table.p << "\n";
    for (const auto& [name, value] : rows) {
      char line[96];
      std::snprintf(line, sizeof line, "%-10s %.17g\n", name, value);
      os << line;
    }
    text = os.str();
  }
  emit(config, text, out);
  return kExitOk;
}

int cmd_simulate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto kinds = resolve_kinds(config.kinds);
  std::vector<ModelSpec> models;
  for (const auto& name : config.models) {
    const auto id = parse_model_id(name);
    if (!id) throw Error(ErrorCode::ParseError, "unknown model '" + name + "'");
    ModelSpec spec = default_model(*id);
    if (config.model_param) spec.param = *config.model_param;
    models.push_back(spec);
  }
  std::vector<std::size_t> ns = config.ns.empty() ? std::vector<std::size_t>{50, 100} : config.ns;
  std::vector<std::size_t> ps = config.ps;
  if (ps.empty()) {
    ps = {100, 200};
    if (config.full_grid) ps.insert(ps.end(), {400, 800});
  }

  std::vector<SimSpec> specs;
  for (const auto& model : models) {
    for (std::size_t n : ns) {
      for (std::size_t p : ps) {
        check_shape(model, n, p);
        SimSpec spec;
        spec.model = model;
        spec.n = n;
        spec.p = p;
        spec.reps = config.reps;
        spec.alpha = config.alpha;
        spec.seed = config.sim_seed;
        spec.tests = kinds;
        specs.push_back(spec);
      }
    }
  }
  if (config.reps < 1) throw Error(ErrorCode::DomainTooSmall, "--reps must be >= 1");

  const unsigned threads = configured_threads();
  std::vector<SimResult> results;
  for (const auto& spec : specs) {
    results.push_back(run_simulation(spec, threads));
    if (config.timing) {
      err << to_string(spec.model.id) << " n=" << spec.n << " p=" << spec.p << ": "
          << format_double("%.2f", results.back().wall_time_seconds) << " s\n";
    }
  }

  std::string text;
  if (config.format == "json") {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& result : results) doc.push_back(to_json(result, config.timing));
    text = doc.dump(2) + "\n";
  } else {
    std::ostringstream os;
    char line[160];
    std::snprintf(line, sizeof line, "%-6s %5s %5s %6s %7s %7s %7s %7s\n", "model", "n", "p",
                  "reps", "J_xi", "M_xi", "J_E", "P(S!=0)");
    os << line;
    auto cell = [](const std::optional<double>& f) {
      return f ? format_double("%.3f", *f) : std::string("-");
    };
    for (const auto& r : results) {
      std::snprintf(line, sizeof line, "%-6s %5zu %5zu %6zu %7s %7s %7s %7.3f\n",
                    std::string(to_string(r.spec.model.id)).c_str(), r.spec.n, r.spec.p,
                    r.spec.reps, cell(r.frequency(TestKind::Quadratic)).c_str(),
                    cell(r.frequency(TestKind::Extreme)).c_str(),
                    cell(r.frequency(TestKind::Enhanced)).c_str(), r.freq_nonempty_screen);
      os << line;
    }
    text = os.str();
  }
  emit(config, text, out);
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Mutual independence tests for the columns of a data matrix",
               "xihd"};
  app.require_subcommand(1);

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", config.format, "Output format")
        ->check(CLI::IsMember({"json", "table"}));
    sub->add_option("-o,--output", config.output, "Write to this path instead of stdout");
  };
  auto add_alpha = [&](CLI::App* sub) {
    sub->add_option("--alpha", config.alpha, "Significance level in (0, 1)")
        ->check(CLI::Validator(
            [](std::string& text) -> std::string {
              double v = 0.0;
              if (!CLI::detail::lexical_cast(text, v) || !(v > 0.0 && v < 1.0)) {
                return "alpha must lie strictly between 0 and 1";
              }
              return {};
            },
            "(0,1)"));
  };

  auto* test = app.add_subcommand("test", "Run independence tests on a CSV file");
  test->add_option("input", config.input_path, "CSV file, header row then numeric rows")
      ->required();
  add_alpha(test);
  test->add_option("--kind", config.kinds, "quadratic, extreme, enhanced (default: all)")
      ->delimiter(',');
  test->add_option("--break-ties", config.seed, "Break ties at random with this seed");
  add_format(test);

  auto* simulate = app.add_subcommand("simulate", "Monte-Carlo rejection frequencies");
  simulate->add_option("--model", config.models, "Model id(s), E1a..E3d")
      ->required()
      ->delimiter(',');
  simulate->add_option("--n", config.ns, "Sample size(s) (default 50,100)")->delimiter(',');
  simulate->add_option("--p", config.ps, "Dimension(s) (default 100,200)")->delimiter(',');
  simulate->add_option("--reps", config.reps, "Replicates per setting");
  simulate->add_option("--seed", config.sim_seed, "Master seed");
  simulate->add_option("--param", config.model_param, "Override the model parameter");
  simulate->add_option("--kind", config.kinds, "Tests to run (default: all)")->delimiter(',');
  simulate->add_flag("--full-grid", config.full_grid, "Default p grid also covers 400 and 800");
  simulate->add_flag("--timing", config.timing, "Report wall time per setting");
  add_alpha(simulate);
  add_format(simulate);

  auto* xi = app.add_subcommand("xi", "Export the matrix of pairwise coefficients as CSV");
  xi->add_option("input", config.input_path, "CSV file")->required();
  xi->add_option("--break-ties", config.seed, "Break ties at random with this seed");
  xi->add_option("-o,--output", config.output, "Write to this path instead of stdout");

  auto* moments = app.add_subcommand("moments", "Print the exact null constants");
  moments->add_option("--n", config.moments_n, "Sample size")->required();
  moments->add_option("--p", config.moments_p, "Dimension")->required();
  add_format(moments);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream cli_out;
    std::ostringstream cli_err;
    const int status = app.exit(e, cli_out, cli_err);
    out << cli_out.str();
    err << cli_err.str();
    return status == 0 ? kExitOk : kExitIoOrParse;
  }

  try {
    if (test->parsed()) return cmd_test(config, out);
    if (simulate->parsed()) return cmd_simulate(config, out, err);
    if (xi->parsed()) return cmd_xi(config, out);
    if (moments->parsed()) return cmd_moments(config, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitIoOrParse;
  }
  return kExitIoOrParse;
}

}  // namespace xihd
