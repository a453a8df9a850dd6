#include "gmbt/power.hpp"

#include <cmath>
#include <future>
#include <thread>

#include "gmbt/errors.hpp"
#include "gmbt/specfn.hpp"
#include "gmbt/stat_tests.hpp"

namespace gmbt {

namespace {

int resolve_threads(int threads, std::int64_t work_items) {
  if (threads <= 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 0) threads = 1;
  }
  if (work_items < threads) threads = static_cast<int>(work_items);
  return threads;
}

void check_scenario(const PowerScenario& scenario) {
  if (scenario.n < 3) throw DomainError("power scenario: n must be >= 3");
  if (scenario.reps < 1) throw DomainError("power scenario: reps must be >= 1");
  if (scenario.reps > 0xFFFFFFFFll) {
    throw DomainError("power scenario: reps must fit in 32 bits");
  }
  if (!(scenario.alpha > 0.0 && scenario.alpha < 1.0)) {
    throw DomainError("power scenario: alpha must be in (0, 1)");
  }
  for (double beta : scenario.beta_grid) {
    if (!(beta > -1.0)) throw DomainError("power scenario: beta must be > -1");
  }
}

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> grid(count);
  for (int i = 0; i < count; ++i) {
    grid[i] = lo + (hi - lo) * i / (count - 1);
  }
  return grid;
}

double binom_std_err(std::int64_t hits, std::int64_t reps) {
  const double p = static_cast<double>(hits) / static_cast<double>(reps);
  return std::sqrt(p * (1.0 - p) / static_cast<double>(reps));
}

struct RepCounts {
  std::int64_t accuracy = 0;
  std::int64_t binomial = 0;
  std::int64_t gate = 0;

  RepCounts& operator+=(const RepCounts& other) {
    accuracy += other.accuracy;
    binomial += other.binomial;
    gate += other.gate;
    return *this;
  }
};

std::uint64_t rep_stream_id(std::size_t point_index, std::uint32_t rep) {
  return (static_cast<std::uint64_t>(point_index) << 32) | rep;
}

}  // namespace

std::vector<double> default_beta_grid(const ScenarioFamily& family) {
  const bool lognormal = std::holds_alternative<LogNormalRatioFamily>(family);
  return lognormal ? linspace(-0.2, 0.2, 21) : linspace(-0.7, 0.7, 21);
}

CalibratedPoint calibrate_scenario(const ScenarioFamily& family, double beta) {
  if (!(beta > -1.0)) throw DomainError("calibrate_scenario: beta must be > -1");
  return std::visit(
      [beta](const auto& f) -> CalibratedPoint {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, LogNormalRatioFamily>) {
          LogNormalPairParams p;
          p.s = {std::log1p(beta), f.theta_r};
          p.r = {0.0, f.theta_r};
          p.rho = {f.rho};
          return p;
        } else if constexpr (std::is_same_v<F, GammaFixedShapeFamily>) {
          GammaPairParams p;
          p.s = {f.a, f.b_s};
          p.r = {f.a, (1.0 + beta) * f.b_s};
          return p;
        } else {
          GammaPairParams p;
          const double target = std::log1p(beta) + specfn::digamma(f.a_r);
          p.s = {specfn::inverse_digamma(target), f.b};
          p.r = {f.a_r, f.b};
          return p;
        }
      },
      family);
}

double calibrated_gm_ratio(const CalibratedPoint& point) {
  if (const auto* ln = std::get_if<LogNormalPairParams>(&point)) {
    return gm_lognormal(ln->s) / gm_lognormal(ln->r);
  }
  const auto& g = std::get<GammaPairParams>(point);
  return gm_gamma_ratio(g.s, g.r);
}

std::pair<double, double> sample_pair(const CalibratedPoint& point, RngStream& stream) {
  if (const auto* ln = std::get_if<LogNormalPairParams>(&point)) {
    return sample_correlated_lognormal_pair(ln->s, ln->r, ln->rho, stream);
  }
  const auto& g = std::get<GammaPairParams>(point);
  const double s = sample_gamma(g.s, stream);
  const double r = sample_gamma(g.r, stream);
  return {s, r};
}

namespace {

RepCounts run_rep_block(const PowerScenario& scenario, const CalibratedPoint& point,
                        const ShapiroWilk& sw, std::size_t beta_index,
                        std::uint32_t rep_begin, std::uint32_t rep_end) {
  RepCounts counts;
  const int n = scenario.n;
  std::vector<double> obs(n), fcst(n);
  for (std::uint32_t rep = rep_begin; rep < rep_end; ++rep) {
    RngStream stream(scenario.seed, rep_stream_id(beta_index, rep));
    for (int i = 0; i < n; ++i) {
      const auto [s, r] = sample_pair(point, stream);
      obs[i] = s;
      fcst[i] = r;
    }
    const RatioSample sample = make_ratio_sample(obs, fcst);
    const AccuracyVerdict verdict = accuracy_test(sample, scenario.alpha, sw);
    const TestReport binomial = binomial_sign_test(sample.ratios, scenario.alpha);
    switch (verdict.outcome) {
      case AccuracyOutcome::Inaccurate:
        ++counts.accuracy;
        break;
      case AccuracyOutcome::NormalityRejected:
        ++counts.gate;
        if (scenario.gate_policy == GatePolicy::CountAsRejection) ++counts.accuracy;
        break;
      case AccuracyOutcome::NotRejected:
        break;
    }
    if (binomial.reject) ++counts.binomial;
  }
  return counts;
}

}  // namespace

PowerPoint run_power_point(const PowerScenario& scenario, std::size_t beta_index,
                           int threads) {
  check_scenario(scenario);
  const std::vector<double>& grid =
      scenario.beta_grid.empty() ? default_beta_grid(scenario.family) : scenario.beta_grid;
  if (beta_index >= grid.size()) {
    throw DomainError("run_power_point: beta index out of range");
  }
  const double beta = grid[beta_index];
  const CalibratedPoint point = calibrate_scenario(scenario.family, beta);
  const ShapiroWilk sw(scenario.n);

  const auto reps = static_cast<std::uint32_t>(scenario.reps);
  const int workers = resolve_threads(threads, scenario.reps);
  std::vector<std::future<RepCounts>> futures;
  futures.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    const auto lo = static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(reps) * w / workers);
    const auto hi = static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(reps) * (w + 1) / workers);
    futures.push_back(std::async(std::launch::async, [&, lo, hi] {
      return run_rep_block(scenario, point, sw, beta_index, lo, hi);
    }));
  }
  RepCounts counts;
  for (auto& f : futures) counts += f.get();

  PowerPoint result;
  result.beta = beta;
  result.reject_rate_accuracy =
      static_cast<double>(counts.accuracy) / static_cast<double>(reps);
  result.reject_rate_binomial =
      static_cast<double>(counts.binomial) / static_cast<double>(reps);
  result.normality_gate_rate =
      static_cast<double>(counts.gate) / static_cast<double>(reps);
  result.mc_std_err_accuracy = binom_std_err(counts.accuracy, reps);
  result.mc_std_err_binomial = binom_std_err(counts.binomial, reps);
  result.mc_std_err_gate = binom_std_err(counts.gate, reps);
  return result;
}

std::vector<PowerPoint> run_power_curve(const PowerScenario& scenario, int threads) {
  check_scenario(scenario);
  PowerScenario resolved = scenario;
  if (resolved.beta_grid.empty()) {
    resolved.beta_grid = default_beta_grid(resolved.family);
  }
  std::vector<PowerPoint> curve;
  curve.reserve(resolved.beta_grid.size());
  for (std::size_t i = 0; i < resolved.beta_grid.size(); ++i) {
    curve.push_back(run_power_point(resolved, i, threads));
  }
  return curve;
}

std::vector<Table1Row> run_table1(std::int64_t reps, std::uint64_t seed, int threads) {
  if (reps < 1 || reps > 0xFFFFFFFFll) {
    throw DomainError("run_table1: reps must be in [1, 2^32)");
  }
  struct RowSpec {
    double a, b;
    int n;
  };
  static constexpr RowSpec kRows[12] = {
      {3, 1, 20}, {3, 5, 20}, {3, 10, 20}, {3, 1, 100}, {3, 5, 100}, {3, 10, 100},
      {1, 3, 20}, {5, 3, 20}, {10, 3, 20}, {1, 3, 100}, {5, 3, 100}, {10, 3, 100},
  };

  std::vector<Table1Row> rows;
  rows.reserve(12);
  for (int row_index = 0; row_index < 12; ++row_index) {
    const RowSpec& spec = kRows[row_index];
    const GammaParams params{spec.a, spec.b};
    const ShapiroWilk sw(spec.n);

    const auto total = static_cast<std::uint32_t>(reps);
    const int workers = resolve_threads(threads, reps);
    std::vector<std::future<std::int64_t>> futures;
    futures.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      const auto lo = static_cast<std::uint32_t>(
          static_cast<std::uint64_t>(total) * w / workers);
      const auto hi = static_cast<std::uint32_t>(
          static_cast<std::uint64_t>(total) * (w + 1) / workers);
      futures.push_back(std::async(std::launch::async, [&, row_index, lo, hi] {
        std::int64_t rejections = 0;
        std::vector<double> y(spec.n);
        for (std::uint32_t rep = lo; rep < hi; ++rep) {
          RngStream stream(seed, rep_stream_id(row_index, rep));
          for (int i = 0; i < spec.n; ++i) {
            const double s = sample_gamma(params, stream);
            const double r = sample_gamma(params, stream);
            y[i] = std::log(s / r);
          }
          if (sw.test(y, 0.05).reject) ++rejections;
        }
        return rejections;
      }));
    }
    std::int64_t rejections = 0;
    for (auto& f : futures) rejections += f.get();

    Table1Row row;
    row.case_id = row_index + 1;
    row.a = spec.a;
    row.b = spec.b;
    row.n = spec.n;
    row.reject_pct = 100.0 * static_cast<double>(rejections) / static_cast<double>(reps);
    row.mc_std_err_pct = 100.0 * binom_std_err(rejections, reps);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace gmbt
