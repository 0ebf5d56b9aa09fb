#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "eprior/calibration.hpp"
#include "eprior/data.hpp"
#include "eprior/inference.hpp"
#include "eprior/map_prior.hpp"
#include "eprior/survival.hpp"

namespace eprior {

enum class HistoricalMode { fresh, reference };
enum class Coupling { coupled, decoupled };

struct OCReport {
  std::string label;
  double rejection_rate = 0.0;
  double mc_standard_error = 0.0;
  double mean_pess = 0.0;
  double cutoff = 0.0;
  int n_sims = 0;
  std::uint64_t seed = 0;
};

// One analyzed trial: the run_trial pipeline output.
struct TrialResult {
  double T = 0.0;
  bool degenerate = false;
  double g = 0.0;
  double pess = 0.0;
  double posterior_prob = 0.0;
  bool reject = false;
};

// Scenario evaluation request against a calibrated design. theta_h / theta_t
// are in endpoint units (probability, mean, or hazard multiplier).
struct EvalSpec {
  std::string label;
  double theta_h = 0.0;
  double theta_t = 0.0;
  int n_sims = 1000;
  std::uint64_t seed = 0;
  HistoricalMode historical = HistoricalMode::fresh;
};

// Anchored trial machinery one endpoint provides to the shared calibration
// and evaluation drivers. An anchor is a historical dataset (observed, or the
// idealized reference at a generator value) together with its simulated
// congruence distributions.
class TrialEngine {
 public:
  virtual ~TrialEngine() = default;

  virtual double design_theta_c() const = 0;
  virtual double null_theta_t() const = 0;
  virtual double alt_theta_t() const = 0;
  // +-delta in endpoint semantics (binary clamps, survival multiplies).
  virtual double shifted_theta(Shift s) const = 0;

  virtual int make_reference_anchor(double theta_h) = 0;
  // psi anchors: every congruence variable shifted by its own delta.
  virtual int make_shift_anchor(Shift s) { return make_reference_anchor(shifted_theta(s)); }
  virtual const TSamples& anchor_samples(int anchor) const = 0;
  virtual double anchor_t0_median(int anchor) const = 0;
  virtual double anchor_pess_base(int anchor) const = 0;

  // n independent trials: historical fixed at the anchor, current control at
  // the design theta_c, treatment at theta_t. Stores T and the decision
  // payload per replicate.
  virtual int make_pool(int anchor, double theta_t, int n, std::uint64_t stream,
                        std::uint64_t seed) = 0;
  virtual std::size_t pool_size(int pool) const = 0;
  virtual double pool_T(int pool, std::size_t i) const = 0;
  virtual bool pool_degenerate(int pool, std::size_t i) const = 0;
  virtual double pool_prob(int pool, std::size_t i, double g) const = 0;
  virtual void drop_pool(int pool) = 0;

  // Switches decision evaluation to the full samplers where the grid search
  // used a deterministic fast path (survival Gibbs).
  virtual void begin_final_phase() {}

  // One fresh-mode replicate: draws its own historical dataset, recalibrates
  // the elastic function at the fixed quantile levels, runs the trial.
  virtual TrialResult fresh_trial(double theta_h, double theta_t,
                                  const CalibrationSpec& spec, ElasticForm form,
                                  double q0, double q1, double cutoff,
                                  std::uint64_t seed, std::uint64_t replicate) = 0;

  const CalibrationSpec& spec() const { return spec_; }
  Coupling coupling() const { return coupling_; }

 protected:
  TrialEngine(CalibrationSpec spec, Coupling coupling)
      : spec_(std::move(spec)), coupling_(coupling) {
    spec_.validate();
  }

  CalibrationSpec spec_;
  Coupling coupling_;
};

// Appendix-A grid search: per feasible (q0, q1) calibrate the cutoff under the
// congruent null, estimate rho and psi (conservative max over +-delta drifts
// of the historical generator, method recalibrated at the drifted anchor),
// maximize the utility; ties break to the smallest (q0, q1) lexicographically.
CalibrationResult run_grid_search(TrialEngine& eng);

// Operating characteristics of a calibrated design under a scenario.
OCReport run_operating_characteristics(TrialEngine& eng, const CalibrationResult& cal,
                                       const EvalSpec& eval);

// Per-replicate records (posterior prob, g, decision) for external plotting.
std::vector<TrialResult> run_replicates(TrialEngine& eng, const CalibrationResult& cal,
                                        const EvalSpec& eval);

// --- endpoint engines ---------------------------------------------------------

struct BinaryEngineConfig {
  int n_h = 100;
  int n_c = 40;
  int n_t = 80;
  double theta_c = 0.4;
  double alpha0 = 0.1;
  double beta0 = 0.1;
};

std::unique_ptr<TrialEngine> make_binary_engine(const BinaryEngineConfig& cfg,
                                                const CalibrationSpec& spec,
                                                Coupling coupling);

struct NormalEngineConfig {
  int n_h = 50;
  int n_c = 25;
  int n_t = 50;
  double theta_c = 1.0;
  double sigma2 = 1.0;          // generator variance
  bool known_variance = false;  // posterior plug-in: known sigma2 vs ML
};

std::unique_ptr<TrialEngine> make_normal_engine(const NormalEngineConfig& cfg,
                                                const CalibrationSpec& spec,
                                                Coupling coupling);

struct SurvivalEngineConfig {
  int n_h = 50;
  int n_c = 25;
  int n_t = 50;
  std::vector<double> cuts = {16.0, 28.0};     // interior cut points
  double horizon = kInf;                       // finite -> administrative censoring
  std::vector<double> base_hazard = {0.01, 0.03, 0.02};
  double kappa = 0.1;
  double upsilon = 0.1;
  HazardRatioSamplerSpec sampler;
  bool gibbs_decisions = true;  // final OC decisions; the search always uses quadrature
};

std::unique_ptr<TrialEngine> make_survival_engine(const SurvivalEngineConfig& cfg,
                                                  const CalibrationSpec& spec,
                                                  Coupling coupling);

struct MapEngineConfig {
  std::vector<int> study_n = {40, 50, 45, 55};
  double between_sd = 0.1;  // generator between-study SD
  int n_c = 25;
  int n_t = 50;
  double theta_c = 1.0;
  double sigma2 = 1.0;
  MapFitSpec fit;
};

std::unique_ptr<TrialEngine> make_map_engine(const MapEngineConfig& cfg,
                                             const CalibrationSpec& spec,
                                             Coupling coupling);

// Appendix-J covariate extension: outcome y plus covariates entering only the
// congruence measure through Fisher's combination.
struct CovariateSpec {
  enum class Kind { normal, binary } kind = Kind::normal;
  double theta_c = 0.0;   // design value (mean or rate)
  double sigma2 = 1.0;    // normal only
  double delta = 0.0;     // clinically significant difference for this variable
};

struct CovariateEngineConfig {
  int n_h = 50;
  int n_c = 25;
  int n_t = 50;
  double theta_c = 1.0;   // outcome mean
  double sigma2 = 1.1;    // outcome variance
  bool known_variance = true;
  std::vector<CovariateSpec> covariates;
  bool use_covariates = true;  // false -> outcome-only congruence
};

// theta_h for anchors/evals is the outcome mean; covariate historical means
// are supplied per scenario through set_covariate_theta_h.
class CovariateEngine;
std::unique_ptr<TrialEngine> make_covariate_engine(const CovariateEngineConfig& cfg,
                                                   const CalibrationSpec& spec,
                                                   Coupling coupling,
                                                   std::vector<double> cov_theta_h);

// --- spec-level one-shot operations -------------------------------------------

struct GeneratedArm {
  std::variant<BinarySummary, NormalSummary, SurvivalData> data;
};

// Endpoint-appropriate arm generation (piecewise-exponential sampling by
// sequential interval inversion for survival); deterministic per seed.
GeneratedArm generate_binary_arm(double theta, int n, std::uint64_t seed);
GeneratedArm generate_normal_arm(double theta, double sigma2, int n, std::uint64_t seed);
GeneratedArm generate_survival_arm(const PiecewiseExponential& model, int n,
                                   std::uint64_t seed);

struct BinaryTrialDesign {
  BinarySummary historical;
  ElasticFunction elastic;
  double cutoff = 0.95;
  double alpha0 = 0.1;
  double beta0 = 0.1;
  double t0_median = 0.0;  // degenerate-T fallback location
};

TrialResult run_trial(const BinaryTrialDesign& design, const BinarySummary& control,
                      const BinarySummary& treatment);

struct NormalTrialDesign {
  NormalSummary historical;
  ElasticFunction elastic;
  double cutoff = 0.95;
  // <= 0 -> ML plug-in from each arm
  double sigma2_known = 0.0;
  double t0_median = 0.0;
};

TrialResult run_trial(const NormalTrialDesign& design, const NormalSummary& control,
                      const NormalSummary& treatment);

struct SurvivalTrialDesign {
  SurvivalData historical;
  ElasticFunction elastic;
  double cutoff = 0.95;
  double kappa = 0.1;
  double upsilon = 0.1;
  HazardRatioSamplerSpec sampler;
  double t0_median = 0.0;
};

TrialResult run_trial(const SurvivalTrialDesign& design, const SurvivalData& control,
                      const SurvivalData& treatment);

}  // namespace eprior
