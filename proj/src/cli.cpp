#include "gmbt/cli.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "gmbt/csv.hpp"
#include "gmbt/errors.hpp"
#include "gmbt/report.hpp"
#include "gmbt/stat_tests.hpp"

namespace gmbt {

using json = nlohmann::json;

namespace {

std::string fmt9(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", value);
  return buf;
}

bool write_output(const std::string& path, const std::string& content,
                  std::ostream& out, std::ostream& err) {
  if (path.empty()) {
    out << content;
    return true;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    err << "cannot open output file: " << path << "\n";
    return false;
  }
  file << content;
  return file.good();
}

}  // namespace

PowerScenario scenario_from_json_text(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw DomainError(std::string("config is not valid JSON: ") + e.what());
  }

  PowerScenario scenario;
  const json& family = j.at("family");
  const std::string type = family.at("type").get<std::string>();
  if (type == "lognormal_ratio") {
    LogNormalRatioFamily f;
    f.theta_r = family.value("theta_r", f.theta_r);
    f.rho = family.value("rho", f.rho);
    if (!(f.theta_r > 0.0)) throw DomainError("config: theta_r must be > 0");
    if (!(f.rho >= -1.0 && f.rho <= 1.0)) throw DomainError("config: rho must be in [-1, 1]");
    scenario.family = f;
  } else if (type == "gamma_fixed_shape") {
    GammaFixedShapeFamily f;
    f.a = family.value("a", f.a);
    f.b_s = family.value("b_s", f.b_s);
    if (!(f.a > 0.0) || !(f.b_s > 0.0)) throw DomainError("config: a and b_s must be > 0");
    scenario.family = f;
  } else if (type == "gamma_fixed_rate") {
    GammaFixedRateFamily f;
    f.b = family.value("b", f.b);
    f.a_r = family.value("a_r", f.a_r);
    if (!(f.b > 0.0) || !(f.a_r > 0.0)) throw DomainError("config: b and a_r must be > 0");
    scenario.family = f;
  } else {
    throw DomainError("config: unknown family type '" + type + "'");
  }

  if (j.contains("beta_grid")) {
    scenario.beta_grid = j.at("beta_grid").get<std::vector<double>>();
    for (double beta : scenario.beta_grid) {
      if (!(beta > -1.0)) throw DomainError("config: every beta must be > -1");
    }
  }
  scenario.n = j.value("n", scenario.n);
  scenario.reps = j.value("reps", scenario.reps);
  scenario.alpha = j.value("alpha", scenario.alpha);
  scenario.seed = j.value("seed", scenario.seed);
  if (j.contains("gate_policy")) {
    const std::string policy = j.at("gate_policy").get<std::string>();
    if (policy == "exclude_from_rejection") {
      scenario.gate_policy = GatePolicy::ExcludeFromRejection;
    } else if (policy == "count_as_rejection") {
      scenario.gate_policy = GatePolicy::CountAsRejection;
    } else {
      throw DomainError("config: unknown gate_policy '" + policy + "'");
    }
  }
  if (scenario.n < 3) throw DomainError("config: n must be >= 3");
  if (scenario.reps < 1) throw DomainError("config: reps must be >= 1");
  if (!(scenario.alpha > 0.0 && scenario.alpha < 1.0)) {
    throw DomainError("config: alpha must be in (0, 1)");
  }
  return scenario;
}

std::string power_curve_to_csv(const std::vector<PowerPoint>& points) {
  std::ostringstream out;
  out << "beta,reject_rate_accuracy,reject_rate_binomial,normality_gate_rate,"
         "mc_std_err_accuracy,mc_std_err_binomial,mc_std_err_gate\n";
  for (const PowerPoint& p : points) {
    out << fmt9(p.beta) << ',' << fmt9(p.reject_rate_accuracy) << ','
        << fmt9(p.reject_rate_binomial) << ',' << fmt9(p.normality_gate_rate) << ','
        << fmt9(p.mc_std_err_accuracy) << ',' << fmt9(p.mc_std_err_binomial) << ','
        << fmt9(p.mc_std_err_gate) << '\n';
  }
  return out.str();
}

std::string table1_to_csv(const std::vector<Table1Row>& rows) {
  std::ostringstream out;
  out << "case,a,b,n,reject_pct\n";
  for (const Table1Row& row : rows) {
    out << row.case_id << ',' << fmt9(row.a) << ',' << fmt9(row.b) << ','
        << row.n << ',' << fmt9(row.reject_pct) << '\n';
  }
  return out.str();
}

int cmd_test(const TestCommandOptions& options, std::ostream& out, std::ostream& err) {
  try {
    if (options.format != "text" && options.format != "structured") {
      err << "unknown format '" << options.format << "' (expected text or structured)\n";
      return 1;
    }
    if (!(options.alpha > 0.0 && options.alpha < 1.0)) {
      err << "alpha must be in (0, 1)\n";
      return 1;
    }
    const InputData input = read_input_csv(options.input_path);
    std::vector<double> observed, forecast;
    observed.reserve(input.records.size());
    forecast.reserve(input.records.size());
    for (const InputRecord& record : input.records) {
      observed.push_back(record.observed);
      forecast.push_back(record.forecast);
    }
    const RatioSample sample = make_ratio_sample(observed, forecast);
    const AccuracyVerdict verdict = accuracy_test(sample, options.alpha);
    const TestReport binomial = binomial_sign_test(sample.ratios, options.alpha);
    const ReportDocument report = build_report(options.input_path, input.digest,
                                               sample, verdict, binomial,
                                               options.alpha);
    const std::string rendered =
        options.format == "structured" ? to_json_string(report) : to_text(report);
    if (!write_output(options.output_path, rendered, out, err)) return 1;
    return exit_code_for(report.accuracy.outcome);
  } catch (const DegenerateError& e) {
    err << "degenerate sample: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 1;
  }
}

int cmd_power(const PowerCommandOptions& options, std::ostream& out, std::ostream& err) {
  try {
    std::ifstream config_file(options.config_path, std::ios::binary);
    if (!config_file) {
      err << "cannot open config file: " << options.config_path << "\n";
      return 1;
    }
    std::ostringstream raw;
    raw << config_file.rdbuf();
    PowerScenario scenario = scenario_from_json_text(raw.str());
    if (options.seed) scenario.seed = *options.seed;
    if (options.reps) scenario.reps = *options.reps;
    if (scenario.reps < 1) {
      err << "reps must be >= 1\n";
      return 1;
    }
    const std::vector<PowerPoint> curve = run_power_curve(scenario, options.threads);
    if (!write_output(options.output_path, power_curve_to_csv(curve), out, err)) {
      return 1;
    }
    return 0;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 1;
  }
}

int cmd_table1(const Table1CommandOptions& options, std::ostream& out,
               std::ostream& err) {
  try {
    if (options.reps < 1) {
      err << "reps must be >= 1\n";
      return 1;
    }
    const std::vector<Table1Row> rows =
        run_table1(options.reps, options.seed, options.threads);
    if (!write_output(options.output_path, table1_to_csv(rows), out, err)) return 1;
    return 0;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 1;
  }
}

}  // namespace gmbt
