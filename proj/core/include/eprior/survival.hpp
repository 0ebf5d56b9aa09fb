#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "eprior/data.hpp"
#include "eprior/inference.hpp"

namespace eprior {

// Piecewise-constant hazard on the partition; the last interval is open-ended
// when the partition's last cut is +inf.
struct PiecewiseExponential {
  std::vector<double> partition;  // d_1 < ... < d_J (d_J may be inf)
  std::vector<double> hazard;     // per interval

  double cumulative_hazard(double t) const;
  double survival(double t) const { return std::exp(-cumulative_hazard(t)); }
  // Inverse-cumulative-hazard sampling; times beyond a finite d_J are
  // administratively censored there by the caller.
  double sample_time(std::mt19937_64& rng) const;
};

// Event time draw with administrative censoring at a finite d_J (event flag 0
// at the boundary); with d_J = inf every subject is an event.
SurvivalData sample_survival_arm(const PiecewiseExponential& model, int n,
                                 std::mt19937_64& rng);

// Deterministic "ideal" dataset: subjects placed at the (i - 1/2)/n quantiles
// of the model's time distribution.
SurvivalData ideal_survival_arm(const PiecewiseExponential& model, int n);

std::vector<double> hazard_mle(const IntervalSufficientStats& stats);

struct HazardRatioSamplerSpec {
  int burnin = 2000;
  int keep = 8000;
  double beta_prior_sd = 10.0;
  double initial_step = 0.5;
  std::uint64_t seed = 0;
};

struct HazardRatioResult {
  double prob_hr_gt1 = 0.0;   // Pr(exp(beta) > 1 | data)
  double acceptance = 0.0;
  bool acceptance_warning = false;  // outside [0.1, 0.6] after adaptation
};

// Gibbs-within-Metropolis for the proportional-hazards piecewise-exponential
// model: theta_j | beta conjugate Gamma with treatment exposure scaled by
// exp(beta); beta | theta random-walk Metropolis against its conditional
// likelihood with prior N(0, beta_prior_sd^2).
HazardRatioResult prob_hr_gt1(const GammaVector& control_prior,
                              const IntervalSufficientStats& control,
                              const IntervalSufficientStats& treatment,
                              const HazardRatioSamplerSpec& spec);

// Deterministic fast path: theta_j integrate out in closed form, leaving a
// one-dimensional beta posterior handled by Simpson quadrature. Estimates the
// same Pr(exp(beta) > 1); used inside grid searches.
double prob_hr_gt1_quadrature(const GammaVector& control_prior,
                              const IntervalSufficientStats& control,
                              const IntervalSufficientStats& treatment,
                              double beta_prior_sd = 10.0);

// |O-E|/sqrt(V) for two groups already sorted ascending by time; 0 when no
// variance accrues (degenerate).
double logrank_sorted_statistic(const std::vector<double>& times_h,
                                const std::vector<int>& events_h,
                                const std::vector<double>& times_c,
                                const std::vector<int>& events_c);

}  // namespace eprior
