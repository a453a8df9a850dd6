#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gmbt/cli.hpp"
#include "gmbt/version.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Forecast accuracy backtesting: geometric-mean accuracy test, "
               "binomial sign test, and Monte Carlo power studies"};
  app.set_version_flag("--version",
                       std::string(gmbt::kToolName) + " " + gmbt::kToolVersion);
  app.require_subcommand(1);

  gmbt::TestCommandOptions test_options;
  CLI::App* test = app.add_subcommand(
      "test", "Run the accuracy and binomial tests on an observed/forecast file");
  test->add_option("input", test_options.input_path,
                   "Input file (CSV with header period,observed,forecast)")
      ->required();
  test->add_option("--alpha", test_options.alpha, "Test level")->capture_default_str();
  test->add_option("--format", test_options.format, "Report format: text|structured")
      ->capture_default_str();
  test->add_option("--output", test_options.output_path,
                   "Write the report here instead of stdout");

  gmbt::PowerCommandOptions power_options;
  std::uint64_t power_seed = 0;
  std::int64_t power_reps = 0;
  CLI::App* power = app.add_subcommand(
      "power", "Estimate power curves for a scenario config and emit CSV");
  power->add_option("--config", power_options.config_path, "Scenario config (JSON)")
      ->required();
  power->add_option("--output", power_options.output_path,
                    "Write the CSV table here instead of stdout");
  CLI::Option* seed_opt =
      power->add_option("--seed", power_seed, "Override the config seed");
  CLI::Option* reps_opt =
      power->add_option("--reps", power_reps, "Override the config replication count");
  power->add_option("--threads", power_options.threads,
                    "Worker threads (0 = hardware concurrency)")
      ->capture_default_str();

  gmbt::Table1CommandOptions table1_options;
  CLI::App* table1 = app.add_subcommand(
      "table1", "Shapiro-Wilk rejection rates for gamma-ratio log samples (12 rows)");
  table1->add_option("--reps", table1_options.reps, "Replications per row")
      ->capture_default_str();
  table1->add_option("--output", table1_options.output_path,
                     "Write the CSV table here instead of stdout");
  table1->add_option("--seed", table1_options.seed, "RNG seed")->capture_default_str();
  table1->add_option("--threads", table1_options.threads,
                     "Worker threads (0 = hardware concurrency)")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (test->parsed()) {
    return gmbt::cmd_test(test_options, std::cout, std::cerr);
  }
  if (power->parsed()) {
    if (*seed_opt) power_options.seed = power_seed;
    if (*reps_opt) power_options.reps = power_reps;
    return gmbt::cmd_power(power_options, std::cout, std::cerr);
  }
  if (table1->parsed()) {
    return gmbt::cmd_table1(table1_options, std::cout, std::cerr);
  }
  return 1;
}
