#pragma once

#include "eprior/data.hpp"

namespace eprior {

// Discount factor g in [0,1]. Logistic: g = 1/(1 + exp(a + b (log T)^c)) with
// T = 0 mapped to the limit g = 1 (b > 0). Step: g = 1 iff T <= threshold.
double eval_elastic(const ElasticFunction& f, double T);

// Closed-form (a, b) so that g(Tq0) = c1 and g(Tq1) = c2, c = 1.
// Requires 0 < c2 < c1 < 1 and 0 < Tq0 < Tq1; throws CalibrationError on
// quantile crossing (delta too small to separate the T distributions).
LogisticElastic solve_logistic(double c1, double c2, double t_q0, double t_q1);

}  // namespace eprior
