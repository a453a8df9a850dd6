#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "gmbt/power.hpp"

namespace gmbt {

struct TestCommandOptions {
  std::string input_path;
  double alpha = 0.05;
  std::string format = "text";  // "text" | "structured"
  std::string output_path;      // empty -> stdout
};

struct PowerCommandOptions {
  std::string config_path;
  std::string output_path;  // empty -> stdout
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> reps;
  int threads = 0;  // 0 -> hardware concurrency
};

struct Table1CommandOptions {
  std::int64_t reps = 100000;
  std::string output_path;  // empty -> stdout
  std::uint64_t seed = 1;
  int threads = 0;
};

/// Parses a scenario config document (JSON mirroring PowerScenario).
/// Throws DomainError on unknown families or invalid values.
PowerScenario scenario_from_json_text(const std::string& json_text);

std::string power_curve_to_csv(const std::vector<PowerPoint>& points);
std::string table1_to_csv(const std::vector<Table1Row>& rows);

/// Exit codes: 0 = not rejected, 2 = inaccurate, 3 = normality rejected,
/// 1 = input error (diagnostic on err).
int cmd_test(const TestCommandOptions& options, std::ostream& out, std::ostream& err);

/// Exit codes: 0 = success, 1 = invalid config or I/O failure.
int cmd_power(const PowerCommandOptions& options, std::ostream& out, std::ostream& err);

/// Exit codes: 0 = success, 1 = invalid options or I/O failure.
int cmd_table1(const Table1CommandOptions& options, std::ostream& out, std::ostream& err);

}  // namespace gmbt
