#include "eprior/map_prior.hpp"

#include <algorithm>
#include <cmath>

#include "eprior/math.hpp"
#include "eprior/rng.hpp"

namespace eprior {

namespace {

// log p(tau | theta, mu): sum_k log N(theta_k; mu, tau^2) + log HN(tau; scale)
double log_tau_conditional(double tau, const std::vector<double>& theta, double mu,
                           double scale) {
  if (tau <= 0.0) return -kInf;
  const double k = static_cast<double>(theta.size());
  double ss = 0.0;
  for (double t : theta) ss += (t - mu) * (t - mu);
  return -k * std::log(tau) - ss / (2.0 * tau * tau) -
         tau * tau / (2.0 * scale * scale);
}

// Stepping-out slice sampler for tau (Neal 2003), support (0, inf).
double slice_tau(double tau, const std::vector<double>& theta, double mu, double scale,
                 std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::exponential_distribution<double> e1(1.0);
  const double log_y = log_tau_conditional(tau, theta, mu, scale) - e1(rng);
  const double w = scale;
  double lo = tau - w * unif(rng);
  double hi = lo + w;
  lo = std::max(lo, 1e-12);
  for (int i = 0; i < 50 && log_tau_conditional(lo, theta, mu, scale) > log_y; ++i)
    lo = std::max(lo - w, 1e-12);
  for (int i = 0; i < 50 && log_tau_conditional(hi, theta, mu, scale) > log_y; ++i)
    hi += w;
  for (int i = 0; i < 100; ++i) {
    const double prop = lo + (hi - lo) * unif(rng);
    if (log_tau_conditional(prop, theta, mu, scale) > log_y) return prop;
    if (prop < tau)
      lo = prop;
    else
      hi = prop;
  }
  return tau;
}

double split_rhat(const std::vector<double>& chain) {
  const std::size_t half = chain.size() / 2;
  if (half < 10) return 1.0;
  std::span<const double> a(chain.data(), half);
  std::span<const double> b(chain.data() + half, half);
  const double ma = math::mean(a), mb = math::mean(b);
  const double va = math::sample_variance(a), vb = math::sample_variance(b);
  const double w = 0.5 * (va + vb);
  const double mm = 0.5 * (ma + mb);
  const double bvar = (ma - mm) * (ma - mm) + (mb - mm) * (mb - mm);  // * n / (m-1)
  const double n = static_cast<double>(half);
  const double var_plus = (n - 1.0) / n * w + bvar;
  if (w <= 0.0) return 1.0;
  return std::sqrt(var_plus / w);
}

}  // namespace

MapFit fit_map_prior(const std::vector<NormalSummary>& studies, const MapFitSpec& spec) {
  if (studies.size() < 2) throw DataError("map prior: need at least 2 studies");
  const auto k = studies.size();
  std::vector<double> ybar(k), se2(k);
  double pooled_num = 0.0, pooled_den = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    ybar[i] = studies[i].mean;
    const double s2 =
        spec.sigma2_known > 0.0 ? spec.sigma2_known : studies[i].ml_variance();
    se2[i] = s2 / studies[i].n;
    pooled_num += s2 * studies[i].n;
    pooled_den += studies[i].n;
  }

  std::mt19937_64 rng = make_rng(spec.seed, stream::map_fit);
  std::normal_distribution<double> stdnorm(0.0, 1.0);

  std::vector<double> theta(ybar);
  double mu = math::mean(ybar);
  double tau = spec.tau_scale;

  MapFit fit;
  fit.theta_new_draws.reserve(spec.keep);
  const int total = spec.burnin + spec.keep;
  for (int it = 0; it < total; ++it) {
    const double tau2 = tau * tau;
    for (std::size_t i = 0; i < k; ++i) {
      const double prec = 1.0 / se2[i] + 1.0 / tau2;
      const double m = (ybar[i] / se2[i] + mu / tau2) / prec;
      theta[i] = m + stdnorm(rng) / std::sqrt(prec);
    }
    double tsum = 0.0;
    for (double t : theta) tsum += t;
    mu = tsum / k + stdnorm(rng) * tau / std::sqrt(static_cast<double>(k));
    tau = slice_tau(tau, theta, mu, spec.tau_scale, rng);
    if (it >= spec.burnin) fit.theta_new_draws.push_back(mu + stdnorm(rng) * tau);
  }

  fit.predictive.mean = math::mean(fit.theta_new_draws);
  fit.predictive.variance = math::sample_variance(fit.theta_new_draws);
  fit.rhat = split_rhat(fit.theta_new_draws);
  fit.rhat_warning = fit.rhat > 1.05;
  fit.pooled_sigma2 = pooled_num / pooled_den;
  return fit;
}

std::vector<double> predictive_mean_draws(const MapFit& fit, int n_c,
                                          std::uint64_t seed) {
  std::mt19937_64 rng = make_rng(seed, stream::map_fit, 1);
  std::normal_distribution<double> noise(0.0, std::sqrt(fit.pooled_sigma2 / n_c));
  std::vector<double> out(fit.theta_new_draws.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = fit.theta_new_draws[i] + noise(rng);
  std::sort(out.begin(), out.end());
  return out;
}

NormalParams elastic_map_prior(const MapFit& fit, double g) {
  if (g < 0.0 || g > 1.0) throw DataError("elastic map prior: g outside [0,1]");
  if (g == 0.0) return {fit.predictive.mean, kInf};
  return {fit.predictive.mean, fit.predictive.variance / g};
}

}  // namespace eprior
