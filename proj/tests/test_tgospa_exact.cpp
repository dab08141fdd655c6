#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "support/scenes.hpp"
#include "tgospa/tgospa.hpp"

using namespace tgospa;
using testsupport::random_params;
using testsupport::random_trajectory_set;

namespace {

BoundingBox box(double x) { return BoundingBox(x, 0, 1, 1); }

void check_decomposition_identity(const TgospaResult& r, double p) {
  const double sum = r.loc_cost + r.miss_cost + r.false_cost + r.switch_cost;
  CHECK(std::pow(r.total, p) == doctest::Approx(sum).epsilon(1e-9));
  CHECK(2.0 * r.n_switches == doctest::Approx(std::round(2.0 * r.n_switches)).epsilon(1e-12));
}

}  // namespace

TEST_CASE("base distance covers its three cases") {
  // transport metric on equal-size boxes: distance equals the center offset
  const auto d = base_metric_fn(BaseMetric::Wasserstein);
  const std::optional<BoundingBox> present = box(0);
  const std::optional<BoundingBox> absent;
  CHECK(base_distance(absent, absent, 1.0, 0.34, d) == 0.0);
  CHECK(base_distance(present, absent, 1.0, 0.34, d) == doctest::Approx(0.17));
  // cut-off saturates: d = 0.9 against c = 0.34
  const std::optional<BoundingBox> far = BoundingBox(0.9, 0, 1, 1);
  REQUIRE(d(*present, *far) == doctest::Approx(0.9).epsilon(1e-12));
  CHECK(base_distance(present, far, 1.0, 0.34, d) == doctest::Approx(0.34));
  // p changes the one-sided case
  CHECK(base_distance(absent, present, 2.0, 0.34, d) == doctest::Approx(0.34 / std::sqrt(2.0)));
}

TEST_CASE("switch cost enumerates its cases") {
  CHECK(switch_cost(1, 1) == 0.0);
  CHECK(switch_cost(0, 0) == 0.0);
  CHECK(switch_cost(1, 2) == 1.0);
  CHECK(switch_cost(1, 0) == 0.5);
  CHECK(switch_cost(0, 2) == 0.5);
}

TEST_CASE("params are validated") {
  TgospaParams params;
  params.p = 0.5;
  CHECK_THROWS_AS(params.validate(), std::invalid_argument);
  params.p = 1.0;
  params.c = 0.0;
  CHECK_THROWS_AS(params.validate(), std::invalid_argument);
  params.c = 0.3;
  params.gamma = -1.0;
  CHECK_THROWS_AS(params.validate(), std::invalid_argument);
  params.gamma = 0.0;
  CHECK_NOTHROW(params.validate());
  CHECK(params.gospa_regime());
}

TEST_CASE("identical sets are at distance zero") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const auto set = random_trajectory_set(rng, 3, 4);
    const auto params = random_params(rng);
    const auto r = tgospa_exact(set, set, params);
    CHECK(r.total == 0.0);
    CHECK(r.loc_cost == 0.0);
    CHECK(r.miss_cost == 0.0);
    CHECK(r.false_cost == 0.0);
    CHECK(r.switch_cost == 0.0);
    CHECK(r.n_missed == 0);
    CHECK(r.n_false == 0);
    CHECK(r.is_hard);
  }
}

TEST_CASE("all instances missed against an empty estimate set") {
  // one trajectory, five instances
  std::vector<std::pair<int, BoundingBox>> points;
  for (int k = 0; k < 5; ++k) points.emplace_back(k, box(k));
  const TrajectorySet gt({Trajectory::from_points(points)}, 4);
  const TrajectorySet empty({}, 4);
  TgospaParams params;
  params.c = 0.5;
  params.p = 1.0;
  params.gamma = 5.0;
  const auto r = tgospa_exact(gt, empty, params);
  CHECK(r.total == doctest::Approx(5 * 0.25).epsilon(1e-12));
  CHECK(r.n_missed == 5);
  CHECK(r.n_proper == 0);
  CHECK(r.n_switches == 0.0);
  check_decomposition_identity(r, params.p);
}

TEST_CASE("swap scene: switches below the crossover, missed/false above") {
  const auto scene = testsupport::scene_swap();
  TgospaParams params;
  params.c = 0.34;
  params.p = 1.0;
  params.base = BaseMetric::IoUInduced;

  params.gamma = 0.043;  // gamma < c
  auto r = tgospa_exact(scene.ground_truth, scene.estimates, params);
  CHECK(r.total == doctest::Approx(2 * params.gamma).epsilon(1e-12));
  CHECK(r.n_switches == doctest::Approx(2.0));
  CHECK(r.n_missed == 0);
  check_decomposition_identity(r, params.p);

  params.gamma = 3.4;  // gamma > c
  r = tgospa_exact(scene.ground_truth, scene.estimates, params);
  CHECK(r.total == doctest::Approx(2 * params.c).epsilon(1e-12));
  CHECK(r.n_switches == 0.0);
  CHECK(r.n_missed == 2);
  CHECK(r.n_false == 2);
  check_decomposition_identity(r, params.p);
}

TEST_CASE("exact solver equals exhaustive enumeration on tiny instances") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    const auto X = random_trajectory_set(rng, 2, 2);
    const auto Y = random_trajectory_set(rng, 2, 2);
    const auto params = random_params(rng);
    const auto r = tgospa_exact(X, Y, params);
    const double oracle = testsupport::oracle_tgospa(X, Y, params);
    CHECK(r.total == doctest::Approx(oracle).epsilon(1e-9));
    check_decomposition_identity(r, params.p);
  }
}

TEST_CASE("ties prefer fewer switches and the smallest assignment") {
  // Two co-optimal assignments: tracking either estimate at both steps or
  // jumping between them. The jump costs gamma^p extra, so the constant
  // assignment must be reported.
  const TrajectorySet gt({testsupport::two_step(0.0, 0.0)}, 1);
  const TrajectorySet est(
      {testsupport::two_step(0.0, 0.0), testsupport::two_step(0.0, 0.0)}, 1);
  TgospaParams params;
  params.c = 0.34;
  params.p = 1.0;
  params.gamma = 0.1;
  const auto r = tgospa_exact(gt, est, params);
  CHECK(r.total == doctest::Approx(2 * 0.17));  // one estimate is always false
  CHECK(r.n_switches == 0.0);
  // lexicographic preference: the first estimate is kept
  CHECK(r.assignment.at(0, 0) == 1);
  CHECK(r.assignment.at(0, 1) == 1);
}

TEST_CASE("metric axioms on random instances") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const auto X = random_trajectory_set(rng, 3, 3);
    const auto Y = random_trajectory_set(rng, 3, 3);
    const auto Z = random_trajectory_set(rng, 3, 3);
    const auto params = random_params(rng);
    const double dxy = tgospa_exact(X, Y, params).total;
    const double dyx = tgospa_exact(Y, X, params).total;
    const double dxz = tgospa_exact(X, Z, params).total;
    const double dyz = tgospa_exact(Y, Z, params).total;
    CHECK(std::abs(dxy - dyx) < 1e-9);
    CHECK(dxz <= dxy + dyz + 1e-9);
    CHECK(tgospa_exact(X, X, params).total == 0.0);
  }
}

TEST_CASE("state ceiling guards the exhaustive search") {
  std::mt19937 rng(44);
  const auto X = random_trajectory_set(rng, 3, 3, 1.0);
  const auto Y = random_trajectory_set(rng, 3, 3, 1.0);
  ExactOptions options;
  options.state_ceiling = 4;
  TgospaParams params;
  params.c = 0.5;
  CHECK_THROWS_AS(tgospa_exact(X, Y, params, options), SolverLimitError);
  try {
    tgospa_exact(X, Y, params, options);
  } catch (const SolverLimitError& e) {
    CHECK(std::string(e.what()).find("4") != std::string::npos);
  }
}

TEST_CASE("gamma monotonicity and per-step breakdown") {
  std::mt19937 rng(45);
  for (int trial = 0; trial < 25; ++trial) {
    const auto X = random_trajectory_set(rng, 3, 4);
    const auto Y = random_trajectory_set(rng, 3, 4);
    auto params = random_params(rng);
    const double g2 = params.gamma;
    const double g1 = g2 * std::uniform_real_distribution<double>(0.1, 0.9)(rng);
    params.gamma = g1;
    const auto r1 = tgospa_exact(X, Y, params);
    params.gamma = g2;
    const auto r2 = tgospa_exact(X, Y, params);
    CHECK(r1.total <= r2.total + 1e-9);

    // per-step costs sum to the globals
    REQUIRE(r2.per_step.has_value());
    double loc = 0, miss = 0, fal = 0, sw = 0;
    for (const auto& sc : *r2.per_step) {
      loc += sc.localization;
      miss += sc.missed;
      fal += sc.false_alarm;
      sw += sc.switching;
    }
    CHECK(loc == doctest::Approx(r2.loc_cost).epsilon(1e-12));
    CHECK(miss == doctest::Approx(r2.miss_cost).epsilon(1e-12));
    CHECK(fal == doctest::Approx(r2.false_cost).epsilon(1e-12));
    CHECK(sw == doctest::Approx(r2.switch_cost).epsilon(1e-12));
  }
}

TEST_CASE("p-average localization error") {
  const TrajectorySet gt({testsupport::two_step(0.0, 0.0)}, 1);
  // estimate offset by a fixed center distance at both steps
  const TrajectorySet est(
      {Trajectory::from_points(
          {{0, BoundingBox(0.3, 0, 1, 1)}, {1, BoundingBox(0.3, 0, 1, 1)}})},
      1);
  TgospaParams params;
  params.base = BaseMetric::Wasserstein;
  params.c = 1.0;
  params.p = 2.0;
  params.gamma = 0.5;
  const auto r = tgospa_exact(gt, est, params);
  CHECK(r.n_proper == 2);
  CHECK(r.p_avg_loc == doctest::Approx(0.3).epsilon(1e-9));
}
