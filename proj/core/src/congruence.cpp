#include "eprior/congruence.hpp"

#include <algorithm>
#include <cmath>

#include "eprior/math.hpp"

namespace eprior {

CongruenceValue chi_square_congruence(const BinarySummary& h, const BinarySummary& c) {
  h.validate();
  c.validate();
  CongruenceValue out;
  out.kind = CongruenceKind::chi2;
  const double n_total = h.n + c.n;
  const double resp_total = h.responders + c.responders;
  if (resp_total <= 0.0 || resp_total >= n_total) {
    out.degenerate = true;
    out.T = 0.0;
    return out;
  }
  const double p_pool = resp_total / n_total;
  double T = 0.0;
  for (const BinarySummary* arm : {&h, &c}) {
    const double e1 = arm->n * p_pool;            // expected responders
    const double e0 = arm->n * (1.0 - p_pool);    // expected non-responders
    const double o1 = arm->responders;
    const double o0 = arm->n - arm->responders;
    T += (o1 - e1) * (o1 - e1) / e1 + (o0 - e0) * (o0 - e0) / e0;
  }
  out.T = T;
  return out;
}

CongruenceValue t_congruence(const NormalSummary& h, const NormalSummary& c) {
  CongruenceValue out;
  out.kind = CongruenceKind::t;
  const double df = h.n + c.n - 2.0;
  const double sp2 =
      ((c.n - 1.0) * c.sample_variance() + (h.n - 1.0) * h.sample_variance()) / df;
  const double diff = std::abs(c.mean - h.mean);
  if (sp2 <= 0.0) {
    if (diff == 0.0) {
      out.T = 0.0;
    } else {
      out.degenerate = true;
      out.T = kInf;
    }
    return out;
  }
  out.T = diff / std::sqrt(sp2 * (1.0 / h.n + 1.0 / c.n));
  return out;
}

CongruenceValue f_variance_congruence(const NormalSummary& h, const NormalSummary& c) {
  CongruenceValue out;
  out.kind = CongruenceKind::f;
  const double vh = h.sample_variance();
  const double vc = c.sample_variance();
  if (vh <= 0.0 || vc <= 0.0) {
    out.degenerate = true;
    out.T = 0.0;
    return out;
  }
  out.T = std::max(vc, vh) / std::min(vc, vh);
  return out;
}

CongruenceValue ks_congruence(std::span<const double> h_raw,
                              std::span<const double> c_raw) {
  if (h_raw.empty() || c_raw.empty())
    throw DataError("ks congruence: empty sample");
  std::vector<double> h(h_raw.begin(), h_raw.end());
  std::vector<double> c(c_raw.begin(), c_raw.end());
  std::sort(h.begin(), h.end());
  std::sort(c.begin(), c.end());
  const double nh = static_cast<double>(h.size());
  const double nc = static_cast<double>(c.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < h.size() && j < c.size()) {
    const double x = std::min(h[i], c[j]);
    while (i < h.size() && h[i] <= x) ++i;
    while (j < c.size() && c[j] <= x) ++j;
    d = std::max(d, std::abs(i / nh - j / nc));
  }
  CongruenceValue out;
  out.kind = CongruenceKind::ks;
  out.T = d;
  return out;
}

namespace {

struct Subject {
  double time;
  int event;
  int group;  // 0 historical, 1 current
};

}  // namespace

CongruenceValue logrank_congruence(const SurvivalData& h, const SurvivalData& c) {
  h.validate();
  c.validate();
  std::vector<Subject> all;
  all.reserve(h.times.size() + c.times.size());
  for (std::size_t i = 0; i < h.times.size(); ++i)
    all.push_back({h.times[i], h.events[i], 0});
  for (std::size_t i = 0; i < c.times.size(); ++i)
    all.push_back({c.times[i], c.events[i], 1});
  std::sort(all.begin(), all.end(),
            [](const Subject& a, const Subject& b) { return a.time < b.time; });

  double at_risk = static_cast<double>(all.size());
  double at_risk_c = static_cast<double>(c.times.size());
  double obs = 0.0, exp = 0.0, var = 0.0;
  std::size_t i = 0;
  while (i < all.size()) {
    std::size_t j = i;
    double deaths = 0.0, deaths_c = 0.0, leaving = 0.0, leaving_c = 0.0;
    while (j < all.size() && all[j].time == all[i].time) {
      if (all[j].event) {
        deaths += 1.0;
        deaths_c += all[j].group;
      }
      leaving += 1.0;
      leaving_c += all[j].group;
      ++j;
    }
    if (deaths > 0.0 && at_risk > 1.0) {
      const double frac = at_risk_c / at_risk;
      obs += deaths_c;
      exp += deaths * frac;
      var += deaths * frac * (1.0 - frac) * (at_risk - deaths) / (at_risk - 1.0);
    }
    at_risk -= leaving;
    at_risk_c -= leaving_c;
    i = j;
  }
  CongruenceValue out;
  out.kind = CongruenceKind::logrank;
  if (var <= 0.0) {
    out.degenerate = true;
    out.T = 0.0;
    return out;
  }
  out.T = std::abs(obs - exp) / std::sqrt(var);
  return out;
}

FisherCombined fisher_combined_congruence(std::span<const double> p_values,
                                          std::span<const double> weights) {
  if (p_values.empty()) throw DataError("fisher combination: no p-values");
  if (!weights.empty() && weights.size() != p_values.size())
    throw DataError("fisher combination: weight count mismatch");
  constexpr double p_floor = 1e-12;
  FisherCombined out;
  double s = 0.0;
  for (std::size_t i = 0; i < p_values.size(); ++i) {
    double p = p_values[i];
    if (p <= 0.0) {
      p = p_floor;
      out.floored = true;
    }
    if (p > 1.0) throw DataError("fisher combination: p-value above 1");
    const double w = weights.empty() ? 1.0 : weights[i];
    if (w < 0.0) throw DataError("fisher combination: negative weight");
    s += -2.0 * w * std::log(p);
  }
  out.statistic = s;
  const double df = 2.0 * static_cast<double>(p_values.size());
  out.p_star = math::chi_square_upper(df, s);
  out.value.kind = CongruenceKind::fisher;
  out.value.T = -std::log(std::max(out.p_star, p_floor));
  return out;
}

CongruenceValue posterior_predictive_congruence_sorted(
    std::span<const double> sorted_means, double observed_mean) {
  const auto r = static_cast<double>(sorted_means.size());
  if (r < 100) throw DataError("posterior predictive congruence: need R >= 100");
  const auto lower = std::lower_bound(sorted_means.begin(), sorted_means.end(),
                                      observed_mean);
  const auto upper = std::upper_bound(sorted_means.begin(), sorted_means.end(),
                                      observed_mean);
  const double below = static_cast<double>(lower - sorted_means.begin());
  const double above = static_cast<double>(sorted_means.end() - upper);
  const double pp = 2.0 * std::min(above / r, below / r);
  CongruenceValue out;
  out.kind = CongruenceKind::post_predictive;
  out.T = -std::log(std::max(pp, 1.0 / r));
  return out;
}

CongruenceValue posterior_predictive_congruence(std::span<const double> predictive_means,
                                                double observed_mean) {
  std::vector<double> sorted(predictive_means.begin(), predictive_means.end());
  std::sort(sorted.begin(), sorted.end());
  return posterior_predictive_congruence_sorted(sorted, observed_mean);
}

}  // namespace eprior
