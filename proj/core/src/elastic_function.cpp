#include "eprior/elastic_function.hpp"

#include <cmath>

namespace eprior {

namespace {

// (log T)^c extended to T < 1 as sign(log T)|log T|^c, keeping the map
// monotone for all c > 0 (odd-integer c unchanged).
double signed_pow(double x, double c) {
  if (c == 1.0) return x;
  return std::copysign(std::pow(std::abs(x), c), x);
}

}  // namespace

double eval_elastic(const ElasticFunction& f, double T) {
  if (T < 0.0) throw DataError("elastic function: T must be >= 0");
  if (std::holds_alternative<StepElastic>(f)) {
    return T <= std::get<StepElastic>(f).threshold ? 1.0 : 0.0;
  }
  const auto& lf = std::get<LogisticElastic>(f);
  if (T == 0.0) return lf.b > 0.0 ? 1.0 : 0.0;
  if (std::isinf(T)) return lf.b > 0.0 ? 0.0 : 1.0;
  const double z = lf.a + lf.b * signed_pow(std::log(T), lf.c);
  if (z > 700.0) return 0.0;
  if (z < -700.0) return 1.0;
  return 1.0 / (1.0 + std::exp(z));
}

LogisticElastic solve_logistic(double c1, double c2, double t_q0, double t_q1) {
  if (!(c2 > 0.0 && c2 < c1 && c1 < 1.0))
    throw CalibrationError("solve_logistic: need 0 < C2 < C1 < 1");
  if (!(t_q0 > 0.0 && t_q1 > 0.0))
    throw CalibrationError("solve_logistic: quantiles must be positive");
  if (!(t_q0 < t_q1))
    throw CalibrationError(
        "solve_logistic: quantile crossing (T_q0 >= T_q1); delta too small to "
        "separate congruent from incongruent at these sample sizes");
  const double l0 = std::log(t_q0);
  const double l1 = std::log(t_q1);
  const double k = std::log((1.0 - c1) * c2 / ((1.0 - c2) * c1));
  LogisticElastic f;
  f.b = k / (l0 - l1);
  f.a = std::log((1.0 - c1) / c1) - k * l0 / (l0 - l1);
  f.c = 1.0;
  return f;
}

}  // namespace eprior
