#pragma once

#include <string>

#include "gmbt/stat_tests.hpp"

namespace gmbt {

/// Full analysis result for one input file. All floating-point fields are
/// stored already rounded to 9 significant digits, so the structured form
/// serializes losslessly and golden files stay stable.
struct ReportDocument {
  std::string tool;
  std::string version;
  std::string input_path;
  std::string input_digest;
  double alpha = 0.05;
  int n = 0;
  double geometric_mean = 0.0;
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  bool duplicate_ratios = false;
  int ratios_equal_to_one = 0;
  AccuracyVerdict accuracy;
  TestReport binomial;

  bool operator==(const ReportDocument&) const = default;
};

bool operator==(const TestReport& a, const TestReport& b);
bool operator==(const AccuracyVerdict& a, const AccuracyVerdict& b);

/// Rounds through a 9-significant-digit decimal representation.
double round9(double value);

ReportDocument build_report(const std::string& input_path, const std::string& digest,
                            const RatioSample& sample, const AccuracyVerdict& verdict,
                            const TestReport& binomial, double alpha);

std::string to_text(const ReportDocument& report);
std::string to_json_string(const ReportDocument& report);
ReportDocument report_from_json(const std::string& json_text);

/// test subcommand exit code: 0 not rejected, 2 inaccurate, 3 normality rejected.
int exit_code_for(AccuracyOutcome outcome);

}  // namespace gmbt
