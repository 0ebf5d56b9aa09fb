#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "eprior/data.hpp"

namespace eprior {

enum class Shift { none, plus, minus };

// Simulated congruence distributions for one observed/reference historical
// dataset: T_0 (congruent) and T_1^+/- (generators shifted by +-delta).
struct TSamples {
  std::vector<double> congruent;   // sorted
  std::vector<double> shift_up;    // sorted
  std::vector<double> shift_down;  // sorted
  bool clamped_up = false;         // binary theta clamped into [0.001, 0.999]
  bool clamped_down = false;
};

// R congruence values between the fixed historical dataset and freshly
// simulated current-control datasets of size n_c; deterministic given seed.
// Binary: D_c ~ Bernoulli(clamp(theta_hat +- delta)); normal: additive shift
// of the mean with the ML variance; survival: hazards scaled by delta / 1/delta.
std::vector<double> simulate_T(const BinarySummary& h, int n_c, Shift shift,
                               double delta, int replicates, std::uint64_t seed,
                               bool* clamped = nullptr);
std::vector<double> simulate_T(const NormalSummary& h, int n_c, Shift shift,
                               double delta, int replicates, std::uint64_t seed);
std::vector<double> simulate_T(const SurvivalData& h, int n_c, Shift shift,
                               double delta_hazard_ratio, int replicates,
                               std::uint64_t seed);

// U = rho - w1 psi - w2 (psi - eta) 1{psi > eta}.
double utility(double rho, double psi, double w1, double w2, double eta);

struct GridPointEval {
  double q0 = 0.0;
  double q1 = 0.0;
  bool feasible = false;
  double cutoff = 0.0;
  double rho = 0.0;
  double psi = 0.0;
  double utility = 0.0;
};

struct CalibrationResult {
  ElasticFunction elastic;     // winner, calibrated at the design anchor
  ElasticForm form = ElasticForm::logistic;
  double q0 = 0.0;
  double q1 = 0.0;             // unused for the step function
  double cutoff = 0.0;         // C, final re-evaluation
  double power_congruent = 0.0;     // rho at the winner
  double type1_incongruent = 0.0;   // psi at the winner
  double utility = 0.0;
  double t0_median = 0.0;      // congruent-case median, degenerate-T fallback
  bool clamped = false;        // any calibration shift was clamped
  std::vector<GridPointEval> grid;
};

}  // namespace eprior
