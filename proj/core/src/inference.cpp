#include "eprior/inference.hpp"

#include <cmath>

#include "eprior/math.hpp"

namespace eprior {

BetaParams binary_elastic_prior(double alpha0, double beta0, const BinarySummary& h,
                                double g) {
  h.validate();
  if (g < 0.0 || g > 1.0) throw DataError("binary elastic prior: g outside [0,1]");
  if (g == 0.0) return {alpha0, beta0};
  return {(alpha0 + h.responders) * g, (beta0 + h.n - h.responders) * g};
}

BetaParams binary_posterior(const BetaParams& prior, const BinarySummary& c) {
  c.validate();
  return {prior.alpha + c.responders, prior.beta + c.n - c.responders};
}

BetaParams elastic_power_prior_binary(double alpha0, double beta0,
                                      const BinarySummary& h, double g) {
  h.validate();
  if (g < 0.0 || g > 1.0) throw DataError("elastic power prior: g outside [0,1]");
  return {g * h.responders + alpha0, g * (h.n - h.responders) + beta0};
}

NormalParams normal_elastic_prior(const NormalSummary& h, double g) {
  if (g < 0.0 || g > 1.0) throw DataError("normal elastic prior: g outside [0,1]");
  if (g == 0.0) return {h.mean, kInf};
  return {h.mean, h.ml_variance() / (h.n * g)};
}

NormalParams normal_posterior(const NormalParams& prior, const NormalSummary& c,
                              double sigma2_plugin) {
  if (sigma2_plugin <= 0.0) throw DataError("normal posterior: plugin variance <= 0");
  const double data_prec = c.n / sigma2_plugin;
  const double prior_prec = prior.precision();
  const double post_prec = prior_prec + data_prec;
  const double mean = (prior_prec * prior.mean + data_prec * c.mean) / post_prec;
  return {mean, 1.0 / post_prec};
}

NormalInverseGammaParams joint_normal_elastic_prior(const NormalSummary& h, double g1,
                                                    double g2, double m) {
  if (!(h.n > 7.0 - 2.0 * m))
    throw DataError("joint normal elastic prior: need n_h > 7 - 2m");
  if (g1 <= 0.0 || g1 > 1.0 || g2 <= 0.0 || g2 > 1.0)
    throw DataError("joint normal elastic prior: g1, g2 must be in (0,1]");
  const double s2 = h.ml_variance();
  const double mu_h = h.n * s2 / (h.n - 5.0 + 2.0 * m);
  const double eps2 = (h.n * s2) * (h.n * s2) /
                      (std::pow(h.n - 5.0 + 2.0 * m, 2) * ((h.n - 7.0) / 2.0 + m));
  // IG given as mean/variance; convert with variance inflated by 1/g2.
  const double var = eps2 / g2;
  NormalInverseGammaParams out;
  out.location = h.mean;
  out.effective_n = h.n * g1;
  out.ig_shape = mu_h * mu_h / var + 2.0;
  out.ig_rate = mu_h * (out.ig_shape - 1.0);
  out.m = m;
  return out;
}

NormalInverseGammaParams joint_normal_posterior(const NormalInverseGammaParams& prior,
                                                const NormalSummary& c) {
  if (!c.raw) throw DataError("joint normal posterior: raw current data required");
  c.validate();
  double sum_sq = 0.0;
  for (double y : *c.raw) sum_sq += y * y;
  const double ng = prior.effective_n;  // n_h g1
  const double yh = prior.location;
  // (n_h-7)/2 + m times g2 is recoverable as ig_shape - 2.
  const double discounted_shape = prior.ig_shape - 2.0;
  NormalInverseGammaParams out;
  out.effective_n = ng + c.n;
  out.location = (ng * yh + c.n * c.mean) / out.effective_n;
  out.ig_shape = (c.n + 4.0) / 2.0 + discounted_shape;
  out.ig_rate = (sum_sq + ng * yh * yh) / 2.0 -
                std::pow(ng * yh + c.n * c.mean, 2) / (2.0 * ng + 2.0 * c.n) +
                prior.ig_rate;
  out.m = prior.m;
  return out;
}

NormalParams elastic_commensurate_prior_normal(const NormalSummary& h, double g) {
  if (g <= 0.0) throw DataError("elastic commensurate prior: g must be > 0");
  return {h.mean, 1.0 / g + h.ml_variance() / h.n};
}

NormalParams elastic_commensurate_posterior_normal(const NormalSummary& h, double g,
                                                   const NormalSummary& c,
                                                   double sigma2_plugin) {
  const double delta = 1.0 / g + h.ml_variance() / h.n;
  const double denom = c.n * delta + sigma2_plugin;
  return {(c.n * c.mean * delta + sigma2_plugin * h.mean) / denom,
          sigma2_plugin * delta / denom};
}

GammaVector survival_elastic_prior(std::span<const double> kappa,
                                   std::span<const double> upsilon,
                                   const IntervalSufficientStats& h_stats, double g) {
  const auto J = static_cast<std::size_t>(h_stats.intervals());
  if (kappa.size() != J || upsilon.size() != J)
    throw DataError("survival elastic prior: prior length mismatch");
  if (g < 0.0 || g > 1.0) throw DataError("survival elastic prior: g outside [0,1]");
  GammaVector out;
  out.shape.resize(J);
  out.rate.resize(J);
  for (std::size_t j = 0; j < J; ++j) {
    if (kappa[j] <= 0.0 || upsilon[j] <= 0.0)
      throw DataError("survival elastic prior: kappa, upsilon must be > 0");
    if (g == 0.0) {
      out.shape[j] = kappa[j];
      out.rate[j] = upsilon[j];
    } else {
      out.shape[j] = (kappa[j] + h_stats.events[j]) * g;
      out.rate[j] = (upsilon[j] + h_stats.exposure[j]) * g;
    }
  }
  return out;
}

BetaParams multi_dataset_elastic_prior(std::span<const BetaParams> priors,
                                       const BetaParams& pi0) {
  if (priors.empty()) throw DataError("multi-dataset prior: no priors");
  const double k1 = static_cast<double>(priors.size()) - 1.0;
  double alpha = -k1 * pi0.alpha;
  double beta = -k1 * pi0.beta;
  for (const auto& p : priors) {
    alpha += p.alpha;
    beta += p.beta;
  }
  if (alpha <= 0.0 || beta <= 0.0)
    throw DataError("multi-dataset prior: combined Beta parameters nonpositive");
  return {alpha, beta};
}

NormalParams multi_dataset_elastic_prior(std::span<const NormalParams> priors,
                                         const NormalParams& pi0) {
  if (priors.empty()) throw DataError("multi-dataset prior: no priors");
  const double k1 = static_cast<double>(priors.size()) - 1.0;
  double prec = -k1 * pi0.precision();
  double wsum = -k1 * pi0.precision() * pi0.mean;
  for (const auto& p : priors) {
    prec += p.precision();
    wsum += p.precision() * p.mean;
  }
  if (prec <= 0.0)
    throw DataError("multi-dataset prior: combined precision nonpositive");
  return {wsum / prec, 1.0 / prec};
}

double prob_superior_beta(const BetaParams& post_t, const BetaParams& post_c) {
  if (post_t.alpha <= 0.0 || post_t.beta <= 0.0 || post_c.alpha <= 0.0 ||
      post_c.beta <= 0.0)
    throw DataError("prob_superior_beta: improper parameters");
  return math::prob_beta_greater(post_t.alpha, post_t.beta, post_c.alpha, post_c.beta);
}

double prob_superior_normal(const NormalParams& post_t, const NormalParams& post_c) {
  return math::normal_cdf((post_t.mean - post_c.mean) /
                          std::sqrt(post_t.variance + post_c.variance));
}

double pess(double g, double n_h) {
  if (g < 0.0 || g > 1.0) throw DataError("pess: g outside [0,1]");
  return g * n_h;
}

}  // namespace eprior
