#include "eprior/data.hpp"

#include <algorithm>
#include <cmath>

#include "eprior/math.hpp"

namespace eprior {

void BinarySummary::validate() const {
  if (n < 1) throw DataError("binary summary: n must be >= 1");
  if (responders < 0 || responders > n)
    throw DataError("binary summary: responders outside [0, n]");
}

NormalSummary NormalSummary::from_raw(std::vector<double> values) {
  if (values.size() < 2) throw DataError("normal summary: need at least 2 values");
  NormalSummary s;
  s.n = static_cast<int>(values.size());
  s.mean = math::mean(values);
  s.sd = std::sqrt(math::sample_variance(values));
  s.raw = std::move(values);
  return s;
}

void NormalSummary::validate() const {
  if (n < 1) throw DataError("normal summary: n must be >= 1");
  if (sd < 0.0) throw DataError("normal summary: sd must be >= 0");
  if (raw) {
    if (static_cast<int>(raw->size()) != n)
      throw DataError("normal summary: raw length does not match n");
    const double m = math::mean(*raw);
    const double s = std::sqrt(math::sample_variance(*raw));
    const double scale = std::max({std::abs(mean), std::abs(m), 1.0});
    if (std::abs(m - mean) > 1e-10 * scale ||
        std::abs(s - sd) > 1e-10 * std::max(sd, 1.0))
      throw DataError("normal summary: mean/sd do not match raw data");
  }
}

void SurvivalData::validate() const {
  if (times.size() != events.size())
    throw DataError("survival data: times and events lengths differ");
  if (partition.empty()) throw DataError("survival data: empty partition");
  double prev = 0.0;
  for (double d : partition) {
    if (!(d > prev)) throw DataError("survival data: partition not increasing");
    prev = d;
  }
  const double d_last = partition.back();
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (times[i] < 0.0) throw DataError("survival data: negative time");
    if (times[i] > d_last) throw DataError("survival data: time exceeds d_J");
    if (events[i] != 0 && events[i] != 1)
      throw DataError("survival data: event indicator must be 0/1");
  }
}

double IntervalSufficientStats::total_events() const {
  double s = 0.0;
  for (double e : events) s += e;
  return s;
}

double IntervalSufficientStats::total_exposure() const {
  double s = 0.0;
  for (double e : exposure) s += e;
  return s;
}

IntervalSufficientStats survival_sufficient_stats(const SurvivalData& data) {
  data.validate();
  const int J = data.intervals();
  IntervalSufficientStats out;
  out.events.assign(J, 0.0);
  out.exposure.assign(J, 0.0);
  for (std::size_t i = 0; i < data.times.size(); ++i) {
    const double y = data.times[i];
    double lo = 0.0;
    for (int j = 0; j < J; ++j) {
      const double hi = data.partition[j];
      if (y > hi) {
        out.exposure[j] += hi - lo;
      } else {
        out.exposure[j] += y - lo;
        if (data.events[i] == 1) out.events[j] += 1.0;
        break;
      }
      lo = hi;
    }
  }
  return out;
}

void CalibrationSpec::validate() const {
  if (delta <= 0.0) throw DataError("calibration spec: delta must be > 0");
  if (!(c2 < c1 && c1 < 1.0 && c1 > 0.0 && c2 > 0.0))
    throw DataError("calibration spec: need 0 < C2 < C1 < 1");
  auto check_grid = [](const std::vector<double>& g, const char* name) {
    if (g.empty()) throw DataError(std::string("calibration spec: empty ") + name);
    double prev = 0.0;
    for (double q : g) {
      if (!(q > prev && q < 1.0))
        throw DataError(std::string("calibration spec: ") + name +
                        " must be ascending within (0,1)");
      prev = q;
    }
  };
  check_grid(q0_grid, "q0_grid");
  check_grid(q1_grid, "q1_grid");
  if (w1 < 0.0 || w2 < 0.0) throw DataError("calibration spec: weights must be >= 0");
  if (!(eta > 0.0 && eta < 1.0)) throw DataError("calibration spec: eta in (0,1)");
  if (replicates < 100) throw DataError("calibration spec: R must be >= 100");
}

}  // namespace eprior
