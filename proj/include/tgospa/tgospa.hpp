#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "tgospa/box.hpp"
#include "tgospa/trajectory.hpp"

namespace tgospa {

struct TgospaParams {
  double p = 1.0;       // exponent, >= 1
  double c = 0.5;       // cut-off, > 0
  double gamma = 0.0;   // switching penalty, >= 0
  BaseMetric base = BaseMetric::IoUInduced;
  BoxDistance distance;  // optional override of `base`

  /// The effective base metric.
  BoxDistance metric() const { return distance ? distance : base_metric_fn(base); }

  /// Throws std::invalid_argument on out-of-domain values.
  void validate() const;

  /// gamma == 0 computes a per-step set-metric aggregate: switches are
  /// invisible, and the value is not a metric on sets of trajectories.
  bool gospa_regime() const { return gamma == 0.0; }
};

struct StepCosts {
  double localization = 0.0;
  double missed = 0.0;
  double false_alarm = 0.0;
  double switching = 0.0;  // transition into this step
};

struct TgospaResult {
  double total = 0.0;       // the metric value
  double loc_cost = 0.0;    // p-th power cost terms; their sum is total^p
  double miss_cost = 0.0;
  double false_cost = 0.0;
  double switch_cost = 0.0;
  long long n_proper = 0;
  long long n_missed = 0;
  long long n_false = 0;
  double n_switches = 0.0;  // multiples of 1/2
  double p_avg_loc = 0.0;   // (loc_cost / n_proper)^(1/p), 0 when n_proper == 0
  AssignmentMatrix assignment;
  bool is_hard = true;      // integral optimizer (always true outside the LP path)
  std::optional<std::vector<StepCosts>> per_step;
};

/// Raised when the exhaustive solver would exceed its state ceiling.
struct SolverLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when the LP backend fails to converge.
struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Distance between two sets of at most one instance each: min(c, d) when
/// both are present, 0 when both are absent, c / 2^(1/p) otherwise.
double base_distance(const std::optional<BoundingBox>& x, const std::optional<BoundingBox>& y,
                     double p, double c, const BoxDistance& d);

/// Cost of one row's assignment change between consecutive steps:
/// 0 when unchanged, 1 for a jump between two estimates, 1/2 for an
/// assignment/unassignment change.
double switch_cost(int prev, int next);

struct GospaStepResult {
  double cost = 0.0;                          // pre-root p-th power sum
  std::vector<std::pair<int, int>> matches;   // 0-based (x, y) pairs with d < c
  std::vector<int> missed;                    // 0-based x indices
  std::vector<int> false_estimates;           // 0-based y indices
};

/// Optimal single-step set assignment: each pair costs min(c, d)^p, and any
/// instance may stay unassigned at c^p / 2.
GospaStepResult gospa_step(const std::vector<BoundingBox>& xs, const std::vector<BoundingBox>& ys,
                           double p, double c, const BoxDistance& d);

/// Evaluates one assignment matrix: classifies every instance as properly
/// estimated / missed / false, accumulates the four cost terms and counts,
/// and fills the per-step breakdown. Switch counting can be disabled for
/// the per-step aggregate where temporal connections carry no meaning.
TgospaResult decompose(const TrajectorySet& ground_truth, const TrajectorySet& estimates,
                       const AssignmentMatrix& assignment, const TgospaParams& params,
                       bool count_switches = true);

struct ExactOptions {
  long long state_ceiling = 2'000'000;  // assignment columns x time steps
  int threads = 0;                      // 0: default pool, 1: serial
};

/// Predicted states x steps of the exhaustive solver; the auto solver
/// switches to the LP relaxation beyond the ceiling.
double exact_search_size(std::size_t n_ground_truth, std::size_t n_estimates, int horizon);

/// Globally optimal value via dynamic programming over time with one state
/// per injective assignment column. Ties are broken toward fewer switches,
/// then the lexicographically smallest assignment. Throws SolverLimitError
/// when columns x steps exceeds the ceiling.
TgospaResult tgospa_exact(const TrajectorySet& ground_truth, const TrajectorySet& estimates,
                          const TgospaParams& params, const ExactOptions& options = {});

/// Linear-programming relaxation: a lower bound on the exact value that
/// coincides with it whenever the optimum is integral (is_hard). Requires
/// gamma > 0; the gamma regimes at either end have dedicated fast paths.
TgospaResult tgospa_lp(const TrajectorySet& ground_truth, const TrajectorySet& estimates,
                       const TgospaParams& params);

/// gamma == 0 fast path: independent optimal set assignment per time step.
/// Exact (no relaxation); switch fields are zero by definition.
TgospaResult tgospa_gamma_zero(const TrajectorySet& ground_truth, const TrajectorySet& estimates,
                               const TgospaParams& params, int threads = 0);

/// gamma -> infinity limit: one time-invariant one-to-one matching between
/// whole trajectories (the gamma field of params is ignored).
TgospaResult tgospa_gamma_extreme(const TrajectorySet& ground_truth,
                                  const TrajectorySet& estimates, const TgospaParams& params);

}  // namespace tgospa
