#pragma once

#include <cstdint>
#include <vector>

#include "eprior/data.hpp"
#include "eprior/inference.hpp"

namespace eprior {

struct MapFitSpec {
  double tau_scale = 0.3;   // half-normal prior scale on the between-study SD
  int burnin = 2000;
  int keep = 10000;
  std::uint64_t seed = 0;
  // Per-study sampling variances: known value if > 0, else ML plug-in.
  double sigma2_known = 0.0;
};

// Meta-analytic-predictive fit: y_k ~ N(theta_k, sigma_k^2/n_k),
// theta_k ~ N(mu, tau^2), flat prior on mu, tau ~ half-normal(tau_scale).
struct MapFit {
  NormalParams predictive;                 // moment-matched N(mean, var)
  std::vector<double> theta_new_draws;     // predictive parameter draws
  double rhat = 1.0;                       // split-chain on theta_new
  bool rhat_warning = false;               // rhat > 1.05
  double pooled_sigma2 = 1.0;              // plug-in sampling variance

  // Effective historical size of the MAP prior in subject units.
  double effective_n() const { return pooled_sigma2 / predictive.variance; }
};

MapFit fit_map_prior(const std::vector<NormalSummary>& studies, const MapFitSpec& spec);

// Sample means of hypothetical current-control datasets of size n_c implied by
// the fit; input to the posterior-predictive congruence measure. Sorted.
std::vector<double> predictive_mean_draws(const MapFit& fit, int n_c,
                                          std::uint64_t seed);

// Elastic MAP prior: predictive normal with variance divided by g; g = 0 gives
// the improper flat prior.
NormalParams elastic_map_prior(const MapFit& fit, double g);

}  // namespace eprior
