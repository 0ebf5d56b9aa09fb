#include "eprior/calibration.hpp"

#include <algorithm>
#include <cmath>

#include "eprior/congruence.hpp"
#include "eprior/parallel.hpp"
#include "eprior/rng.hpp"
#include "eprior/survival.hpp"

namespace eprior {

namespace {

double clamp_rate(double p, bool* clamped) {
  const double c = std::clamp(p, 0.001, 0.999);
  if (clamped && c != p) *clamped = true;
  return c;
}

std::uint64_t shift_stream(Shift s) {
  switch (s) {
    case Shift::none: return stream::t_congruent;
    case Shift::plus: return stream::t_shift_up;
    case Shift::minus: return stream::t_shift_down;
  }
  return stream::t_congruent;
}

}  // namespace

std::vector<double> simulate_T(const BinarySummary& h, int n_c, Shift shift,
                               double delta, int replicates, std::uint64_t seed,
                               bool* clamped) {
  h.validate();
  if (replicates < 100) throw DataError("simulate_T: R must be >= 100");
  double p = h.ybar();
  if (shift == Shift::plus) p += delta;
  if (shift == Shift::minus) p -= delta;
  p = clamp_rate(p, clamped);
  const std::uint64_t str = shift_stream(shift);
  std::vector<double> out(replicates);
  parallel_for(out.size(), [&](std::size_t r) {
    std::mt19937_64 rng = make_rng(seed, str, r);
    std::binomial_distribution<int> bin(n_c, p);
    const BinarySummary c{n_c, bin(rng)};
    out[r] = chi_square_congruence(h, c).T;
  });
  return out;
}

std::vector<double> simulate_T(const NormalSummary& h, int n_c, Shift shift,
                               double delta, int replicates, std::uint64_t seed) {
  if (replicates < 100) throw DataError("simulate_T: R must be >= 100");
  double mu = h.mean;
  if (shift == Shift::plus) mu += delta;
  if (shift == Shift::minus) mu -= delta;
  const double s2 = h.ml_variance();
  const std::uint64_t str = shift_stream(shift);
  std::vector<double> out(replicates);
  parallel_for(out.size(), [&](std::size_t r) {
    std::mt19937_64 rng = make_rng(seed, str, r);
    std::normal_distribution<double> mean_dist(mu, std::sqrt(s2 / n_c));
    std::chi_squared_distribution<double> chi(n_c - 1.0);
    NormalSummary c;
    c.n = n_c;
    c.mean = mean_dist(rng);
    c.sd = std::sqrt(s2 * chi(rng) / (n_c - 1.0));
    out[r] = t_congruence(h, c).T;
  });
  return out;
}

std::vector<double> simulate_T(const SurvivalData& h, int n_c, Shift shift,
                               double delta_hazard_ratio, int replicates,
                               std::uint64_t seed) {
  if (replicates < 100) throw DataError("simulate_T: R must be >= 100");
  const auto stats = survival_sufficient_stats(h);
  std::vector<double> haz = hazard_mle(stats);
  double mult = 1.0;
  if (shift == Shift::plus) mult = delta_hazard_ratio;
  if (shift == Shift::minus) mult = 1.0 / delta_hazard_ratio;
  for (double& x : haz) x *= mult;
  PiecewiseExponential model{h.partition, haz};

  // historical presorted once for the merge-based logrank
  std::vector<std::size_t> order(h.times.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return h.times[a] < h.times[b]; });
  std::vector<double> th(order.size());
  std::vector<int> eh(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    th[i] = h.times[order[i]];
    eh[i] = h.events[order[i]];
  }

  const std::uint64_t str = shift_stream(shift);
  std::vector<double> out(replicates);
  parallel_for(out.size(), [&](std::size_t r) {
    std::mt19937_64 rng = make_rng(seed, str, r);
    SurvivalData c = sample_survival_arm(model, n_c, rng);
    std::vector<std::size_t> ord(c.times.size());
    for (std::size_t i = 0; i < ord.size(); ++i) ord[i] = i;
    std::sort(ord.begin(), ord.end(),
              [&](std::size_t a, std::size_t b) { return c.times[a] < c.times[b]; });
    std::vector<double> tc(ord.size());
    std::vector<int> ec(ord.size());
    for (std::size_t i = 0; i < ord.size(); ++i) {
      tc[i] = c.times[ord[i]];
      ec[i] = c.events[ord[i]];
    }
    out[r] = logrank_sorted_statistic(th, eh, tc, ec);
  });
  return out;
}

double utility(double rho, double psi, double w1, double w2, double eta) {
  double u = rho - w1 * psi;
  if (psi > eta) u -= w2 * (psi - eta);
  return u;
}

}  // namespace eprior
