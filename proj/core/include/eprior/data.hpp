#pragma once

#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace eprior {

// Calibration could not produce a usable elastic function (quantile crossing,
// empty feasible grid, ...). Carries a machine-readable reason.
class CalibrationError : public std::runtime_error {
 public:
  explicit CalibrationError(const std::string& what) : std::runtime_error(what) {}
};

class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

struct BinarySummary {
  int n = 0;
  int responders = 0;

  double ybar() const { return static_cast<double>(responders) / n; }
  void validate() const;
};

struct NormalSummary {
  int n = 0;
  double mean = 0.0;
  double sd = 0.0;  // sample SD, divisor n-1
  std::optional<std::vector<double>> raw;

  double sample_variance() const { return sd * sd; }
  // ML variance, divisor n (the sigma-hat^2 convention).
  double ml_variance() const { return sd * sd * (n - 1.0) / n; }

  static NormalSummary from_raw(std::vector<double> values);
  void validate() const;
};

// Subject-level survival data on a time partition. The last cut point may be
// +infinity (uncensored follow-up, open last interval).
struct SurvivalData {
  std::vector<double> times;
  std::vector<int> events;      // 1 observed, 0 censored
  std::vector<double> partition;  // 0 < d_1 < ... < d_J, d_J may be inf

  int intervals() const { return static_cast<int>(partition.size()); }
  void validate() const;
};

struct IntervalSufficientStats {
  std::vector<double> events;
  std::vector<double> exposure;

  int intervals() const { return static_cast<int>(events.size()); }
  double total_events() const;
  double total_exposure() const;
};

// Per-interval event counts and exposures: e_ij = full width if the subject
// passes the interval, partial if it ends there, 0 if it never reaches it.
IntervalSufficientStats survival_sufficient_stats(const SurvivalData& data);

struct LogisticElastic {
  double a = 0.0;
  double b = 1.0;  // > 0
  double c = 1.0;  // > 0, exponent on log T
};

struct StepElastic {
  double threshold = 0.0;  // g = 1 iff T <= threshold
};

using ElasticFunction = std::variant<LogisticElastic, StepElastic>;

enum class ElasticForm { logistic, step };

struct CalibrationSpec {
  double delta = 0.0;  // clinically significant difference (endpoint scale)
  double c1 = 0.99;
  double c2 = 0.01;
  std::vector<double> q0_grid = {0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  std::vector<double> q1_grid = {0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  double w1 = 1.0;
  double w2 = 2.0;
  double eta = 0.1;
  int replicates = 10000;      // R, size of each simulated T distribution
  std::uint64_t seed = 0;
  double alt_effect = 0.0;     // theta_t - theta_c for the power scenario
  double alpha = 0.05;         // targeted type I error for the cutoff
  int search_trials = 1000;    // per-grid-point rho/psi trials
  int cutoff_trials = 10000;   // cutoff calibration trials
  int final_trials = 10000;    // winner re-evaluation trials
  ElasticForm form = ElasticForm::logistic;

  void validate() const;
};

enum class Endpoint { binary, normal, survival };

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace eprior
