#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "support/scenes.hpp"
#include "tgospa/tgospa.hpp"

using namespace tgospa;
using testsupport::random_params;
using testsupport::random_trajectory_set;

TEST_CASE("lp requires a positive switching penalty") {
  const auto scene = testsupport::scene_swap();
  TgospaParams params;
  params.c = 0.34;
  params.gamma = 0.0;
  CHECK_THROWS_AS(tgospa_lp(scene.ground_truth, scene.estimates, params), std::invalid_argument);
}

TEST_CASE("lp equals zero between identical sets") {
  std::mt19937 rng(51);
  for (int trial = 0; trial < 10; ++trial) {
    const auto set = random_trajectory_set(rng, 2, 3);
    const auto params = random_params(rng);
    const auto r = tgospa_lp(set, set, params);
    CHECK(r.total == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(r.is_hard);
  }
}

TEST_CASE("lp reproduces the one-missed-one-false closed form") {
  const auto scene = testsupport::scene_one_missed_one_false();
  TgospaParams params;
  params.c = 0.34;
  params.p = 1.0;
  params.gamma = 0.05;
  const auto r = tgospa_lp(scene.ground_truth, scene.estimates, params);
  CHECK(r.total == doctest::Approx(params.c).epsilon(1e-9));
  CHECK(r.is_hard);
  CHECK(r.n_missed == 1);
  CHECK(r.n_false == 1);
}

TEST_CASE("lp lower-bounds the exact value and matches when hard") {
  std::mt19937 rng(52);
  int hard_count = 0;
  const int trials = 60;
  for (int trial = 0; trial < trials; ++trial) {
    const auto X = random_trajectory_set(rng, 3, 3);
    const auto Y = random_trajectory_set(rng, 3, 3);
    const auto params = random_params(rng);
    const auto lp = tgospa_lp(X, Y, params);
    const auto exact = tgospa_exact(X, Y, params);
    CHECK(lp.total <= exact.total + 1e-9);
    if (lp.is_hard) {
      ++hard_count;
      CHECK(lp.total == doctest::Approx(exact.total).epsilon(1e-9));
      const double sum = lp.loc_cost + lp.miss_cost + lp.false_cost + lp.switch_cost;
      CHECK(std::pow(lp.total, params.p) == doctest::Approx(sum).epsilon(1e-9));
    }
  }
  CHECK(hard_count >= trials * 9 / 10);
}

TEST_CASE("lp handles empty sides without a solver run") {
  const TrajectorySet empty({}, 2);
  const TrajectorySet one(
      {Trajectory::from_points({{0, BoundingBox(0, 0, 1, 1)}, {1, BoundingBox(0, 0, 1, 1)}})}, 2);
  TgospaParams params;
  params.c = 0.5;
  params.p = 1.0;
  params.gamma = 1.0;
  const auto r = tgospa_lp(one, empty, params);
  CHECK(r.total == doctest::Approx(2 * 0.25));
  CHECK(r.n_missed == 2);
  const auto r2 = tgospa_lp(empty, one, params);
  CHECK(r2.total == doctest::Approx(2 * 0.25));
  CHECK(r2.n_false == 2);
}

TEST_CASE("lp switch accounting matches the exact solver on the swap scene") {
  const auto scene = testsupport::scene_swap();
  TgospaParams params;
  params.c = 0.34;
  params.p = 1.0;
  params.gamma = 0.043;
  const auto r = tgospa_lp(scene.ground_truth, scene.estimates, params);
  CHECK(r.total == doctest::Approx(2 * params.gamma).epsilon(1e-9));
  CHECK(r.is_hard);
  CHECK(r.n_switches == doctest::Approx(2.0));
}
