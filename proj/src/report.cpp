#include "gmbt/report.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "gmbt/errors.hpp"
#include "gmbt/version.hpp"

namespace gmbt {

using json = nlohmann::ordered_json;

bool operator==(const TestReport& a, const TestReport& b) {
  return a.method == b.method && a.statistic == b.statistic &&
         a.p_value == b.p_value && a.alpha == b.alpha && a.reject == b.reject &&
         a.note == b.note;
}

bool operator==(const AccuracyVerdict& a, const AccuracyVerdict& b) {
  return a.normality == b.normality && a.location == b.location &&
         a.outcome == b.outcome;
}

double round9(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.8e", value);
  return std::strtod(buf, nullptr);
}

namespace {

TestReport rounded(TestReport report) {
  report.statistic = round9(report.statistic);
  report.p_value = round9(report.p_value);
  report.alpha = round9(report.alpha);
  return report;
}

json test_report_to_json(const TestReport& report) {
  json j;
  j["method"] = report.method;
  j["statistic"] = report.statistic;
  j["p_value"] = report.p_value;
  j["alpha"] = report.alpha;
  j["reject"] = report.reject;
  if (!report.note.empty()) j["note"] = report.note;
  return j;
}

TestReport test_report_from_json(const json& j) {
  TestReport report;
  report.method = j.at("method").get<std::string>();
  report.statistic = j.at("statistic").get<double>();
  report.p_value = j.at("p_value").get<double>();
  report.alpha = j.at("alpha").get<double>();
  report.reject = j.at("reject").get<bool>();
  if (j.contains("note")) report.note = j.at("note").get<std::string>();
  return report;
}

AccuracyOutcome outcome_from_string(const std::string& name) {
  if (name == "not_rejected") return AccuracyOutcome::NotRejected;
  if (name == "inaccurate") return AccuracyOutcome::Inaccurate;
  if (name == "normality_rejected") return AccuracyOutcome::NormalityRejected;
  throw DomainError("unknown accuracy outcome: " + name);
}

}  // namespace

ReportDocument build_report(const std::string& input_path, const std::string& digest,
                            const RatioSample& sample, const AccuracyVerdict& verdict,
                            const TestReport& binomial, double alpha) {
  ReportDocument doc;
  doc.tool = kToolName;
  doc.version = kToolVersion;
  doc.input_path = input_path;
  doc.input_digest = digest;
  doc.alpha = round9(alpha);
  doc.n = static_cast<int>(sample.size());
  doc.geometric_mean = round9(geometric_mean(sample));
  const auto [min_it, max_it] =
      std::minmax_element(sample.ratios.begin(), sample.ratios.end());
  doc.min_ratio = round9(*min_it);
  doc.max_ratio = round9(*max_it);
  doc.duplicate_ratios = sample.has_duplicate_ratios;
  doc.ratios_equal_to_one = sample.ratios_equal_to_one;
  doc.accuracy.normality = rounded(verdict.normality);
  if (verdict.location) doc.accuracy.location = rounded(*verdict.location);
  doc.accuracy.outcome = verdict.outcome;
  doc.binomial = rounded(binomial);
  return doc;
}

std::string to_json_string(const ReportDocument& report) {
  json j;
  j["tool"] = report.tool;
  j["version"] = report.version;
  j["input"] = {{"path", report.input_path}, {"digest", report.input_digest}};
  j["alpha"] = report.alpha;
  j["sample"] = {{"n", report.n},
                 {"geometric_mean", report.geometric_mean},
                 {"min_ratio", report.min_ratio},
                 {"max_ratio", report.max_ratio},
                 {"duplicate_ratios", report.duplicate_ratios},
                 {"ratios_equal_to_one", report.ratios_equal_to_one}};
  json accuracy;
  accuracy["outcome"] = to_string(report.accuracy.outcome);
  accuracy["normality"] = test_report_to_json(report.accuracy.normality);
  accuracy["location"] = report.accuracy.location
                             ? test_report_to_json(*report.accuracy.location)
                             : json(nullptr);
  j["accuracy"] = accuracy;
  j["binomial"] = test_report_to_json(report.binomial);
  return j.dump(2) + "\n";
}

ReportDocument report_from_json(const std::string& json_text) {
  const json j = json::parse(json_text);
  ReportDocument doc;
  doc.tool = j.at("tool").get<std::string>();
  doc.version = j.at("version").get<std::string>();
  doc.input_path = j.at("input").at("path").get<std::string>();
  doc.input_digest = j.at("input").at("digest").get<std::string>();
  doc.alpha = j.at("alpha").get<double>();
  const json& sample = j.at("sample");
  doc.n = sample.at("n").get<int>();
  doc.geometric_mean = sample.at("geometric_mean").get<double>();
  doc.min_ratio = sample.at("min_ratio").get<double>();
  doc.max_ratio = sample.at("max_ratio").get<double>();
  doc.duplicate_ratios = sample.at("duplicate_ratios").get<bool>();
  doc.ratios_equal_to_one = sample.at("ratios_equal_to_one").get<int>();
  const json& accuracy = j.at("accuracy");
  doc.accuracy.outcome = outcome_from_string(accuracy.at("outcome").get<std::string>());
  doc.accuracy.normality = test_report_from_json(accuracy.at("normality"));
  if (!accuracy.at("location").is_null()) {
    doc.accuracy.location = test_report_from_json(accuracy.at("location"));
  }
  doc.binomial = test_report_from_json(j.at("binomial"));
  return doc;
}

namespace {

std::string fmt9(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", value);
  return buf;
}

void append_test_line(std::ostringstream& out, const char* label,
                      const TestReport& report) {
  out << label << ": statistic = " << fmt9(report.statistic)
      << ", p = " << fmt9(report.p_value)
      << (report.reject ? "  [rejected]" : "  [not rejected]") << "\n";
  if (!report.note.empty()) out << "  note: " << report.note << "\n";
}

}  // namespace

std::string to_text(const ReportDocument& report) {
  std::ostringstream out;
  out << report.tool << " " << report.version << "\n";
  out << "input: " << report.input_path << " (" << report.input_digest << ")\n";
  out << "n = " << report.n << ", alpha = " << fmt9(report.alpha) << "\n";
  out << "geometric mean of observed/forecast ratios = "
      << fmt9(report.geometric_mean) << "\n";
  out << "ratio range: [" << fmt9(report.min_ratio) << ", "
      << fmt9(report.max_ratio) << "]\n";
  if (report.duplicate_ratios) {
    out << "warning: duplicate ratios present (continuous data should not "
           "collide; check input precision)\n";
  }
  append_test_line(out, "shapiro-wilk (log-ratios)", report.accuracy.normality);
  if (report.accuracy.location) {
    append_test_line(out, "t-test (mean log-ratio = 0)", *report.accuracy.location);
  } else {
    out << "t-test (mean log-ratio = 0): not run, normality rejected\n";
  }
  out << "accuracy outcome: " << to_string(report.accuracy.outcome) << "\n";
  append_test_line(out, "binomial sign test", report.binomial);
  return out.str();
}

int exit_code_for(AccuracyOutcome outcome) {
  switch (outcome) {
    case AccuracyOutcome::NotRejected: return 0;
    case AccuracyOutcome::Inaccurate: return 2;
    case AccuracyOutcome::NormalityRejected: return 3;
  }
  return 1;
}

}  // namespace gmbt
