#pragma once

#include <span>
#include <vector>

#include "eprior/data.hpp"

namespace eprior {

struct BetaParams {
  double alpha = 1.0;
  double beta = 1.0;

  double mean() const { return alpha / (alpha + beta); }
  double variance() const {
    const double s = alpha + beta;
    return alpha * beta / (s * s * (s + 1.0));
  }
};

struct NormalParams {
  double mean = 0.0;
  double variance = 1.0;  // +inf encodes the improper flat prior

  bool is_flat() const { return std::isinf(variance); }
  double precision() const { return is_flat() ? 0.0 : 1.0 / variance; }
};

// Normal-Inverse-Gamma: theta | sigma2 ~ N(location, sigma2 / effective_n),
// sigma2 ~ IG(ig_shape, ig_rate). `m` is the initial-prior exponent constant.
struct NormalInverseGammaParams {
  double location = 0.0;
  double effective_n = 1.0;
  double ig_shape = 1.0;
  double ig_rate = 1.0;
  double m = 2.0;

  double ig_mean() const { return ig_rate / (ig_shape - 1.0); }
  double ig_variance() const {
    return ig_rate * ig_rate / ((ig_shape - 1.0) * (ig_shape - 1.0) * (ig_shape - 2.0));
  }
};

struct GammaVector {
  std::vector<double> shape;
  std::vector<double> rate;

  int intervals() const { return static_cast<int>(shape.size()); }
};

// --- binary -----------------------------------------------------------------

// Eq.-(1)-style elastic prior: Beta((a0 + y) g, (b0 + n - y) g); the mean of
// the full posterior is kept, the variance is inflated by ~1/g. g = 0 falls
// back to the initial vague prior.
BetaParams binary_elastic_prior(double alpha0, double beta0, const BinarySummary& h,
                                double g);

BetaParams binary_posterior(const BetaParams& prior, const BinarySummary& c);

// Appendix-K1 elastic power prior: discounts only the data counts,
// Beta(g n ybar + a0, g (n - n ybar) + b0).
BetaParams elastic_power_prior_binary(double alpha0, double beta0,
                                      const BinarySummary& h, double g);

// --- normal -----------------------------------------------------------------

// N(ybar_h, sigma_hat^2 / (n_h g)) with the ML variance; g = 0 gives the
// improper flat prior.
NormalParams normal_elastic_prior(const NormalSummary& h, double g);

// Precision-weighted conjugate update with a plug-in sampling variance for the
// current arm (ML variance by default at call sites).
NormalParams normal_posterior(const NormalParams& prior, const NormalSummary& c,
                              double sigma2_plugin);

// Appendix-D joint (theta, sigma^2) elastic prior with separate discounts
// g1 (location) and g2 (scale). Requires n_h > 7 - 2m.
NormalInverseGammaParams joint_normal_elastic_prior(const NormalSummary& h, double g1,
                                                    double g2, double m);

// Appendix-D posterior; needs raw current-arm data for sum(y^2).
NormalInverseGammaParams joint_normal_posterior(const NormalInverseGammaParams& prior,
                                                const NormalSummary& c);

// Appendix-K2 location-only elastic commensurate prior and its posterior,
// N(ybar_h, 1/g + sigma_hat_h^2/n_h); formulas only, not part of calibrated
// workflows.
NormalParams elastic_commensurate_prior_normal(const NormalSummary& h, double g);
NormalParams elastic_commensurate_posterior_normal(const NormalSummary& h, double g,
                                                   const NormalSummary& c,
                                                   double sigma2_plugin);

// --- survival ---------------------------------------------------------------

// Per-interval Ga((kappa_j + events_j) g, (upsilon_j + exposure_j) g); the
// prior mean is preserved, the variance scales by 1/g. g = 0 falls back to
// Ga(kappa_j, upsilon_j).
GammaVector survival_elastic_prior(std::span<const double> kappa,
                                   std::span<const double> upsilon,
                                   const IntervalSufficientStats& h_stats, double g);

// --- multiple historical datasets (sec 2.4 / Appendix H) --------------------

// Beta case: Beta(sum alpha_k - (K-1) alpha0, sum beta_k - (K-1) beta0).
BetaParams multi_dataset_elastic_prior(std::span<const BetaParams> priors,
                                       const BetaParams& pi0);

// Normal case: precision-additive combination minus (K-1) initial precisions.
NormalParams multi_dataset_elastic_prior(std::span<const NormalParams> priors,
                                         const NormalParams& pi0);

// --- decision rules ----------------------------------------------------------

// Pr(X > Y) for independent Beta posteriors, quadrature to 1e-8.
double prob_superior_beta(const BetaParams& post_t, const BetaParams& post_c);

// Phi((mu_t - mu_c) / sqrt(v_t + v_c)).
double prob_superior_normal(const NormalParams& post_t, const NormalParams& post_c);

// Prior effective sample size g(T) * n_h.
double pess(double g, double n_h);

}  // namespace eprior
