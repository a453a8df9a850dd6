// Acceptance suite: end-to-end checks of the statistical engine against its
// frozen oracles and published reference rates. Prints one line per criterion
// and exits nonzero if any fails.

#include <cmath>
#include <cstdarg>
#include <cstdlib>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gmbt/cli.hpp"
#include "gmbt/distributions.hpp"
#include "gmbt/power.hpp"
#include "gmbt/specfn.hpp"
#include "gmbt/stat_tests.hpp"
#include "oracle_tables.hpp"
#include "reference_tables.hpp"

using namespace gmbt;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(int id, const char* name, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %2d: %s%s%s\n", pass ? "PASS" : "FAIL", id, name,
              detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

std::string fmt(const char* format, ...) {
  char buf[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof(buf), format, args);
  va_end(args);
  return buf;
}

// --- criterion 1 -----------------------------------------------------------

void criterion_binomial_oracle() {
  const double target = 0.1153183;
  const double p14 = binomial_sign_test_counts(20, 14).p_value;
  bool pass = std::abs(p14 - target) < 1e-7;
  // exhaustive enumeration: the only count above n/2 with this p-value is 14
  // (6 matches too, by the symmetry of Binomial(20, 1/2))
  int matches_above_center = 0, matched_b = -1;
  for (int b = 0; b <= 20; ++b) {
    const double p = binomial_sign_test_counts(20, b).p_value;
    if (std::abs(p - target) < 1e-7 && 2 * b > 20) {
      ++matches_above_center;
      matched_b = b;
    }
  }
  pass = pass && matches_above_center == 1 && matched_b == 14;
  report(1, "exact binomial sign-test p-value at n=20, b=14", pass,
         fmt("p=%.9f, unique match above n/2 at b=%d", p14, matched_b));
}

// --- criterion 2 -----------------------------------------------------------

void criterion_table1() {
  // externally published reference rates for these rows
  const double kReferencePct[12] = {6.94, 7.07, 6.89, 10.98, 10.98, 10.99,
                                    11.65, 6.17, 5.49, 30.33, 8.00, 6.26};
  // default is the fast reduced scale; GMBT_ACCEPT_FULL_TABLE=1 runs the
  // full 100k replications with the tighter band
  const bool full = std::getenv("GMBT_ACCEPT_FULL_TABLE") != nullptr;
  const std::int64_t reps = full ? 100000 : 20000;
  const double tolerance_pp = full ? 0.6 : 1.0;
  const std::vector<Table1Row> rows = run_table1(reps, 1, 0);
  bool pass = rows.size() == 12;
  double worst = 0.0;
  int worst_row = 0;
  for (int i = 0; i < 12 && pass; ++i) {
    const double diff = std::abs(rows[i].reject_pct - kReferencePct[i]);
    if (diff > worst) {
      worst = diff;
      worst_row = i + 1;
    }
    if (diff > tolerance_pp) pass = false;
  }
  report(2, "normality-gate rejection table reproduced", pass,
         fmt("%lld reps: worst row %d off by %.2f pp (tolerance %.1f)",
             static_cast<long long>(reps), worst_row, worst, tolerance_pp));
}

// --- criterion 3 -----------------------------------------------------------

void criterion_level_control() {
  bool pass = true;
  std::string detail;
  for (int n : {20, 100}) {
    PowerScenario scenario;
    scenario.family = LogNormalRatioFamily{1.0, 0.0};
    scenario.beta_grid = {0.0};
    scenario.n = n;
    scenario.reps = 10000;
    scenario.seed = 101;
    const PowerPoint p = run_power_point(scenario, 0);
    const bool ok = p.reject_rate_accuracy >= 0.04 && p.reject_rate_accuracy <= 0.06 &&
                    p.reject_rate_binomial <= 0.06;
    pass = pass && ok;
    detail += fmt("n=%d: accuracy=%.4f binomial=%.4f; ", n, p.reject_rate_accuracy,
                  p.reject_rate_binomial);
  }
  report(3, "type I error control at the null", pass, detail);
}

// --- criterion 4 -----------------------------------------------------------

void criterion_dominance() {
  struct Case {
    const char* label;
    ScenarioFamily family;
    int n;
    double beta;
  };
  // gamma points use n=20 from the studied sample sizes; at n=100 both tests
  // saturate near power 1 at |beta| = 0.5 and the margin vanishes
  const Case cases[] = {
      {"lognormal beta=+0.2", LogNormalRatioFamily{1.0, 0.0}, 100, 0.2},
      {"lognormal beta=-0.2", LogNormalRatioFamily{1.0, 0.0}, 100, -0.2},
      {"gamma fixed-shape beta=+0.5", GammaFixedShapeFamily{3.0, 1.0}, 20, 0.5},
      {"gamma fixed-shape beta=-0.5", GammaFixedShapeFamily{3.0, 1.0}, 20, -0.5},
      {"gamma fixed-rate beta=+0.5", GammaFixedRateFamily{3.0, 5.0}, 20, 0.5},
      {"gamma fixed-rate beta=-0.5", GammaFixedRateFamily{3.0, 5.0}, 20, -0.5},
  };
  bool pass = true;
  std::string detail;
  for (const Case& c : cases) {
    PowerScenario scenario;
    scenario.family = c.family;
    scenario.beta_grid = {c.beta};
    scenario.n = c.n;
    scenario.reps = 10000;
    scenario.seed = 202;
    const PowerPoint p = run_power_point(scenario, 0);
    const double margin = p.reject_rate_accuracy - p.reject_rate_binomial;
    const double combined = std::hypot(p.mc_std_err_accuracy, p.mc_std_err_binomial);
    if (margin <= 2.0 * combined) {
      pass = false;
      detail += fmt("%s FAILS (margin %.4f vs 2se %.4f); ", c.label, margin,
                    2.0 * combined);
    }
  }
  if (detail.empty()) detail = "accuracy power exceeds binomial power at all six points";
  report(4, "power dominance over the binomial test", pass, detail);
}

// --- criterion 5 -----------------------------------------------------------

void criterion_rate_invariance() {
  std::vector<std::vector<PowerPoint>> curves;
  std::uint64_t seed = 301;
  for (double b_s : {1.0, 5.0, 10.0}) {
    PowerScenario scenario;
    scenario.family = GammaFixedShapeFamily{3.0, b_s};
    scenario.beta_grid = {-0.5, -0.25, 0.0, 0.25, 0.5};
    scenario.n = 20;
    scenario.reps = 10000;
    scenario.seed = seed++;  // independent seeds keep the check meaningful
    curves.push_back(run_power_curve(scenario));
  }
  bool pass = true;
  double worst = 0.0;
  for (std::size_t i = 0; i < curves[0].size(); ++i) {
    for (std::size_t a = 0; a < curves.size(); ++a) {
      for (std::size_t b = a + 1; b < curves.size(); ++b) {
        const double diff = std::abs(curves[a][i].reject_rate_accuracy -
                                     curves[b][i].reject_rate_accuracy);
        const double bound = 3.0 * std::hypot(curves[a][i].mc_std_err_accuracy,
                                              curves[b][i].mc_std_err_accuracy);
        worst = std::max(worst, bound > 0 ? diff / bound : 0.0);
        if (diff > bound) pass = false;
      }
    }
  }
  report(5, "fixed-shape power curves invariant to the rate scale", pass,
         fmt("worst pairwise difference at %.2f of the 3-sigma bound", worst));
}

// --- criterion 6 -----------------------------------------------------------

void criterion_specfn() {
  using namespace gmbt::specfn;
  bool pass = true;
  std::string first_fail;
  auto check = [&](bool ok, const char* what) {
    if (!ok && pass) {
      pass = false;
      first_fail = what;
    }
  };
  for (const auto& [x, expected] : kLnGammaTable) {
    check(std::abs(ln_gamma(x) - expected) <= 1e-13 * std::max(1.0, std::abs(expected)),
          "ln_gamma");
  }
  for (const auto& [x, expected] : kDigammaTable) {
    check(std::abs(digamma(x) - expected) <= 1e-12 * std::max(1.0, std::abs(expected)),
          "digamma");
  }
  for (const auto& [x, expected] : kTrigammaTable) {
    check(std::abs(trigamma(x) - expected) <= 1e-10 * std::max(1.0, std::abs(expected)),
          "trigamma");
  }
  for (const auto& [x, a, b, expected] : kIncBetaTable) {
    if (expected < 1e-280) {
      check(reg_inc_beta(x, a, b) < 1e-280, "reg_inc_beta");
    } else {
      check(std::abs(reg_inc_beta(x, a, b) - expected) <= 1e-12 * expected,
            "reg_inc_beta");
    }
  }
  for (const auto& [p, expected] : kNormalQuantileTable) {
    check(std::abs(normal_quantile(p) - expected) < 1e-9, "normal_quantile");
  }
  for (int i = 0; i <= 200; ++i) {
    const double y = -50.0 + 0.5 * i;
    check(std::abs(digamma(inverse_digamma(y)) - y) <
              1e-11 * std::max(1.0, std::abs(y)),
          "inverse_digamma roundtrip");
  }
  report(6, "special functions match high-precision oracle tables", pass,
         pass ? fmt("%zu table points", std::size(kLnGammaTable) +
                                            std::size(kDigammaTable) +
                                            std::size(kTrigammaTable) +
                                            std::size(kIncBetaTable) +
                                            std::size(kNormalQuantileTable))
              : "first failure: " + first_fail);
}

// --- criterion 7 -----------------------------------------------------------

void criterion_t_test() {
  bool pass = true;
  const std::vector<double> closed{0.1, 0.2, 0.3};
  const TestReport closed_case = t_test_mu0(closed);
  const double expected_p = 2.0 * (1.0 - (0.5 + 3.4641016151377544 /
                                                    (2.0 * std::sqrt(2.0 + 12.0))));
  pass = pass && std::abs(closed_case.p_value - expected_p) < 1e-6;
  double worst = 0.0;
  for (const ReferenceCase& c : kTTestCases) {
    const TestReport r = t_test_mu0(c.data);
    worst = std::max(worst, std::abs(r.p_value - c.p_value));
    if (std::abs(r.p_value - c.p_value) >= 1e-9) pass = false;
  }
  report(7, "t-test p-values match closed form and reference implementation", pass,
         fmt("closed-form p=%.7f, worst reference deviation %.2e", closed_case.p_value,
             worst));
}

// --- criterion 8 -----------------------------------------------------------

void criterion_shapiro_wilk() {
  bool pass = true;
  double worst_w = 0.0, worst_p = 0.0;
  for (const ReferenceCase& c : kShapiroWilkCases) {
    const TestReport r = shapiro_wilk(c.data);
    worst_w = std::max(worst_w, std::abs(r.statistic - c.statistic));
    worst_p = std::max(worst_p, std::abs(r.p_value - c.p_value));
    if (std::abs(r.statistic - c.statistic) >= 1e-6) pass = false;
    if (std::abs(r.p_value - c.p_value) >= 1e-4) pass = false;
  }
  report(8, "Shapiro-Wilk W and p match reference implementation on 50 samples",
         pass, fmt("worst |dW|=%.2e, worst |dp|=%.2e", worst_w, worst_p));
}

// --- criterion 9 -----------------------------------------------------------

void criterion_fixture_note() {
  // The published application's raw ratios are not available, so equivalence
  // is established through criteria 1, 7 and 8 plus a synthetic fixture that
  // pins the published p-value at (n=20, b=14).
  const std::string path = std::string(GMBT_DATA_DIR) + "/example_claims.csv";
  std::ifstream in(path);
  bool pass = in.good();
  int rows = 0, above = 0;
  if (pass) {
    std::string line;
    std::getline(in, line);  // header
    std::vector<double> obs, fcst;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      ++rows;
      const auto c1 = line.find(','), c2 = line.find(',', line.find(',') + 1);
      obs.push_back(std::stod(line.substr(c1 + 1, c2 - c1 - 1)));
      fcst.push_back(std::stod(line.substr(c2 + 1)));
    }
    for (std::size_t i = 0; i < obs.size(); ++i) {
      if (obs[i] / fcst[i] > 1.0) ++above;
    }
    pass = rows == 20 && above == 14;
    if (pass) {
      const double p = binomial_sign_test_counts(20, above).p_value;
      pass = std::abs(p - 0.1153183) < 1e-7;
    }
  }
  report(9, "synthetic fixture stands in for the unpublished application data",
         pass, fmt("%d rows, %d ratios above one (raw source data unavailable)",
                   rows, above));
}

// --- criterion 10 ----------------------------------------------------------

void criterion_determinism() {
  PowerScenario scenario;
  scenario.family = GammaFixedRateFamily{3.0, 5.0};
  scenario.beta_grid = {-0.3, 0.0, 0.3};
  scenario.n = 20;
  scenario.reps = 2000;
  scenario.seed = 404;

  std::vector<std::string> tables;
  for (int threads : {1, 2, 4}) {
    tables.push_back(power_curve_to_csv(run_power_curve(scenario, threads)));
  }
  tables.push_back(power_curve_to_csv(run_power_curve(scenario, 2)));  // rerun
  bool pass = true;
  for (const std::string& t : tables) pass = pass && t == tables[0];

  const std::string t1 = table1_to_csv(run_table1(1000, 5, 1));
  const std::string t4 = table1_to_csv(run_table1(1000, 5, 4));
  pass = pass && t1 == t4;

  // the emitted files are byte-identical as well
  const fs::path p1 = fs::temp_directory_path() / "gmbt_accept_det1.csv";
  const fs::path p2 = fs::temp_directory_path() / "gmbt_accept_det2.csv";
  std::ofstream(p1, std::ios::binary) << tables[0];
  std::ofstream(p2, std::ios::binary) << tables[1];
  std::ifstream f1(p1, std::ios::binary), f2(p2, std::ios::binary);
  std::stringstream s1, s2;
  s1 << f1.rdbuf();
  s2 << f2.rdbuf();
  pass = pass && s1.str() == s2.str() && !s1.str().empty();

  report(10, "power runs are byte-identical across reruns and worker counts", pass,
         fmt("%zu-byte table stable over 4 runs at 1/2/4 workers", tables[0].size()));
}

}  // namespace

int main() {
  criterion_binomial_oracle();
  criterion_table1();
  criterion_level_control();
  criterion_dominance();
  criterion_rate_invariance();
  criterion_specfn();
  criterion_t_test();
  criterion_shapiro_wilk();
  criterion_fixture_note();
  criterion_determinism();
  if (g_failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criteria FAILED\n", g_failures);
  return 1;
}
