#pragma once

#include <span>
#include <vector>

#include "eprior/data.hpp"

namespace eprior {

enum class CongruenceKind { chi2, t, f, ks, logrank, fisher, post_predictive };

// Larger T means less congruent. `degenerate` marks inputs carrying no usable
// evidence (all/no responders, zero pooled variance, zero events); calibration
// treats those as "no information to distinguish".
struct CongruenceValue {
  double T = 0.0;
  CongruenceKind kind = CongruenceKind::chi2;
  bool degenerate = false;
};

// Pearson chi-square on the 2x2 responders table, pooled expected counts.
CongruenceValue chi_square_congruence(const BinarySummary& h, const BinarySummary& c);

// |t| with pooled SD; s = 0 with equal means -> T = 0; s = 0 with unequal
// means -> degenerate with T = +inf.
CongruenceValue t_congruence(const NormalSummary& h, const NormalSummary& c);

// max(s_c^2, s_h^2) / min(...): T >= 1, larger = less congruent in variance.
CongruenceValue f_variance_congruence(const NormalSummary& h, const NormalSummary& c);

// Two-sample Kolmogorov-Smirnov statistic, sup |F_h - F_c| in [0,1].
CongruenceValue ks_congruence(std::span<const double> h_raw,
                              std::span<const double> c_raw);

// Absolute standardized two-group logrank statistic |O-E|/sqrt(V) with the
// hypergeometric variance at each pooled event time.
CongruenceValue logrank_congruence(const SurvivalData& h, const SurvivalData& c);

struct FisherCombined {
  CongruenceValue value;   // T = -log(p*)
  double statistic = 0.0;  // S = -2 sum w_l log p_l
  double p_star = 1.0;
  bool floored = false;    // some p was clamped at the 1e-12 floor
};

// Fisher's method over the component p-values, chi-square tail with
// df = 2 * (number of p-values); optional nonnegative weights (default 1).
FisherCombined fisher_combined_congruence(std::span<const double> p_values,
                                          std::span<const double> weights = {});

// Two-sided posterior-predictive p value against predictive mean draws;
// PP floored at 1/R so T = -log PP stays finite.
CongruenceValue posterior_predictive_congruence(std::span<const double> predictive_means,
                                                double observed_mean);

// Same, against draws already sorted ascending (hot path).
CongruenceValue posterior_predictive_congruence_sorted(
    std::span<const double> sorted_means, double observed_mean);

}  // namespace eprior
