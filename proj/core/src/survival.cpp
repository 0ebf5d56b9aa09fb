#include "eprior/survival.hpp"

#include <algorithm>
#include <cmath>

namespace eprior {

double PiecewiseExponential::cumulative_hazard(double t) const {
  double h = 0.0;
  double lo = 0.0;
  for (std::size_t j = 0; j < partition.size(); ++j) {
    const double hi = partition[j];
    if (t <= hi) return h + hazard[j] * (t - lo);
    h += hazard[j] * (hi - lo);
    lo = hi;
  }
  return h;
}

double PiecewiseExponential::sample_time(std::mt19937_64& rng) const {
  std::exponential_distribution<double> e1(1.0);
  double e = e1(rng);
  double lo = 0.0, h = 0.0;
  for (std::size_t j = 0; j < partition.size(); ++j) {
    const double hi = partition[j];
    const double seg = hazard[j] * (hi - lo);
    if (e < seg || j + 1 == partition.size()) return lo + e / hazard[j];
    e -= seg;
    lo = hi;
  }
  return lo;  // unreachable
}

namespace {

double invert_cum_hazard(const PiecewiseExponential& m, double e) {
  double lo = 0.0;
  for (std::size_t j = 0; j < m.partition.size(); ++j) {
    const double hi = m.partition[j];
    const double seg = m.hazard[j] * (hi - lo);
    if (e < seg || j + 1 == m.partition.size()) return lo + e / m.hazard[j];
    e -= seg;
    lo = hi;
  }
  return lo;
}

}  // namespace

SurvivalData sample_survival_arm(const PiecewiseExponential& model, int n,
                                 std::mt19937_64& rng) {
  SurvivalData out;
  out.partition = model.partition;
  out.times.resize(n);
  out.events.resize(n);
  const double d_last = model.partition.back();
  std::exponential_distribution<double> e1(1.0);
  for (int i = 0; i < n; ++i) {
    const double t = invert_cum_hazard(model, e1(rng));
    if (t < d_last) {
      out.times[i] = t;
      out.events[i] = 1;
    } else {
      out.times[i] = d_last;
      out.events[i] = 0;
    }
  }
  return out;
}

SurvivalData ideal_survival_arm(const PiecewiseExponential& model, int n) {
  SurvivalData out;
  out.partition = model.partition;
  out.times.resize(n);
  out.events.resize(n);
  const double d_last = model.partition.back();
  for (int i = 0; i < n; ++i) {
    const double u = (i + 0.5) / n;
    const double t = invert_cum_hazard(model, -std::log1p(-u));
    if (t < d_last) {
      out.times[i] = t;
      out.events[i] = 1;
    } else {
      out.times[i] = d_last;
      out.events[i] = 0;
    }
  }
  return out;
}

double logrank_sorted_statistic(const std::vector<double>& times_h,
                                const std::vector<int>& events_h,
                                const std::vector<double>& times_c,
                                const std::vector<int>& events_c) {
  const std::size_t nh = times_h.size(), nc = times_c.size();
  double at_risk = static_cast<double>(nh + nc);
  double at_risk_c = static_cast<double>(nc);
  double obs = 0.0, expct = 0.0, var = 0.0;
  std::size_t i = 0, j = 0;
  while (i < nh || j < nc) {
    double t;
    if (i < nh && (j >= nc || times_h[i] <= times_c[j]))
      t = times_h[i];
    else
      t = times_c[j];
    double deaths = 0.0, deaths_c = 0.0, leaving = 0.0, leaving_c = 0.0;
    while (i < nh && times_h[i] == t) {
      deaths += events_h[i];
      leaving += 1.0;
      ++i;
    }
    while (j < nc && times_c[j] == t) {
      deaths += events_c[j];
      deaths_c += events_c[j];
      leaving += 1.0;
      leaving_c += 1.0;
      ++j;
    }
    if (deaths > 0.0 && at_risk > 1.0) {
      const double frac = at_risk_c / at_risk;
      obs += deaths_c;
      expct += deaths * frac;
      var += deaths * frac * (1.0 - frac) * (at_risk - deaths) / (at_risk - 1.0);
    }
    at_risk -= leaving;
    at_risk_c -= leaving_c;
  }
  if (var <= 0.0) return 0.0;
  return std::abs(obs - expct) / std::sqrt(var);
}

std::vector<double> hazard_mle(const IntervalSufficientStats& stats) {
  std::vector<double> h(stats.intervals());
  for (int j = 0; j < stats.intervals(); ++j) {
    if (stats.exposure[j] <= 0.0)
      throw DataError("hazard MLE: zero exposure in an interval");
    h[j] = stats.events[j] / stats.exposure[j];
  }
  return h;
}

namespace {

// log conditional of beta given theta: beta * E_t - exp(beta) * sum theta_j x_tj
// - beta^2 / (2 sd^2), constants dropped.
struct BetaConditional {
  double total_events;
  double weighted_exposure;  // sum_j theta_j * exposure_tj
  double prior_sd;

  double operator()(double beta) const {
    return beta * total_events - std::exp(beta) * weighted_exposure -
           beta * beta / (2.0 * prior_sd * prior_sd);
  }
};

}  // namespace

HazardRatioResult prob_hr_gt1(const GammaVector& control_prior,
                              const IntervalSufficientStats& control,
                              const IntervalSufficientStats& treatment,
                              const HazardRatioSamplerSpec& spec) {
  const int J = control_prior.intervals();
  if (control.intervals() != J || treatment.intervals() != J)
    throw DataError("prob_hr_gt1: interval count mismatch");
  double pooled_events = control.total_events() + treatment.total_events();
  if (pooled_events < 1.0) throw DataError("prob_hr_gt1: no events in pooled data");

  std::mt19937_64 rng(spec.seed);
  std::normal_distribution<double> stdnorm(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  std::vector<double> theta(J, 0.0);
  double beta = 0.0;
  double step = spec.initial_step;
  const double treat_events = treatment.total_events();

  long accepted = 0, proposed = 0;
  long kept_positive = 0;
  const int total_iters = spec.burnin + spec.keep;
  for (int it = 0; it < total_iters; ++it) {
    const double eb = std::exp(beta);
    for (int j = 0; j < J; ++j) {
      const double shape = control_prior.shape[j] + control.events[j] + treatment.events[j];
      const double rate = control_prior.rate[j] + control.exposure[j] + eb * treatment.exposure[j];
      std::gamma_distribution<double> gd(shape, 1.0 / rate);
      theta[j] = gd(rng);
    }
    double wexp = 0.0;
    for (int j = 0; j < J; ++j) wexp += theta[j] * treatment.exposure[j];
    BetaConditional logp{treat_events, wexp, spec.beta_prior_sd};
    const double prop = beta + step * stdnorm(rng);
    ++proposed;
    if (std::log(unif(rng)) < logp(prop) - logp(beta)) {
      beta = prop;
      ++accepted;
    }
    if (it < spec.burnin) {
      // Robbins-Monro drift toward ~0.35 acceptance
      const double rate_now = static_cast<double>(accepted) / proposed;
      step *= std::exp((rate_now - 0.35) / std::sqrt(it + 1.0));
      step = std::clamp(step, 1e-3, 10.0);
      if ((it + 1) == spec.burnin) {
        accepted = 0;
        proposed = 0;
      }
    } else if (beta > 0.0) {
      ++kept_positive;
    }
  }
  HazardRatioResult out;
  out.prob_hr_gt1 = static_cast<double>(kept_positive) / spec.keep;
  out.acceptance = proposed > 0 ? static_cast<double>(accepted) / proposed : 0.0;
  out.acceptance_warning = out.acceptance < 0.1 || out.acceptance > 0.6;
  return out;
}

double prob_hr_gt1_quadrature(const GammaVector& control_prior,
                              const IntervalSufficientStats& control,
                              const IntervalSufficientStats& treatment,
                              double beta_prior_sd) {
  const int J = control_prior.intervals();
  const double treat_events = treatment.total_events();
  // log marginal of beta after integrating each theta_j analytically:
  // beta E_t - sum_j A_j log(rate_j + exp(beta) x_tj) - beta^2/(2 sd^2)
  auto logpost = [&](double beta) {
    double lp = beta * treat_events - beta * beta / (2.0 * beta_prior_sd * beta_prior_sd);
    const double eb = std::exp(beta);
    for (int j = 0; j < J; ++j) {
      const double shape = control_prior.shape[j] + control.events[j] + treatment.events[j];
      const double rate = control_prior.rate[j] + control.exposure[j] + eb * treatment.exposure[j];
      lp -= shape * std::log(rate);
    }
    return lp;
  };
  // coarse mode scan, then Simpson split at 0 so Pr(beta > 0) is exact
  double mode = 0.0, best = -kInf;
  for (int i = 0; i <= 64; ++i) {
    const double b = -6.0 + 12.0 * i / 64.0;
    const double v = logpost(b);
    if (v > best) {
      best = v;
      mode = b;
    }
  }
  const double h = 1e-3;
  const double curv = (logpost(mode - h) - 2.0 * best + logpost(mode + h)) / (h * h);
  const double sd = curv < 0.0 ? std::sqrt(-1.0 / curv) : 1.0;
  const double lo = mode - 10.0 * sd, hi = mode + 10.0 * sd;
  auto simpson = [&](double a, double b) {
    if (b <= a) return 0.0;
    constexpr int kPoints = 129;  // odd
    const double dx = (b - a) / (kPoints - 1);
    double s = 0.0;
    for (int i = 0; i < kPoints; ++i) {
      const double w = (i == 0 || i == kPoints - 1) ? 1.0 : (i % 2 ? 4.0 : 2.0);
      s += w * std::exp(logpost(a + i * dx) - best);
    }
    return s * dx / 3.0;
  };
  double below, above;
  if (lo >= 0.0) {
    below = 0.0;
    above = simpson(lo, hi);
  } else if (hi <= 0.0) {
    below = simpson(lo, hi);
    above = 0.0;
  } else {
    below = simpson(lo, 0.0);
    above = simpson(0.0, hi);
  }
  const double total = below + above;
  if (total <= 0.0) return lo >= 0.0 ? 1.0 : 0.0;
  return std::clamp(above / total, 0.0, 1.0);
}

}  // namespace eprior
