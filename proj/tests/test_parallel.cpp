#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "tgospa/hota.hpp"
#include "tgospa/parallel.hpp"
#include "tgospa/paramselect.hpp"
#include "tgospa/tgospa.hpp"

using namespace tgospa;

// The OpenMP kernels must reproduce the serial reference paths bit for bit:
// each index writes only its own slot and reductions happen serially.

TEST_CASE("parallel_for covers every index exactly once") {
  std::vector<int> hits(1000, 0);
  parallel_for(hits.size(), 0, [&](std::size_t i) { hits[i] += 1; });
  for (int h : hits) CHECK(h == 1);
}

TEST_CASE("gamma-zero sweep: serial and parallel agree exactly") {
  std::mt19937 rng(91);
  for (int trial = 0; trial < 5; ++trial) {
    const auto X = testsupport::random_trajectory_set(rng, 4, 40);
    const auto Y = testsupport::random_trajectory_set(rng, 4, 40);
    TgospaParams params = testsupport::random_params(rng);
    params.gamma = 0.0;
    const auto serial = tgospa_gamma_zero(X, Y, params, 1);
    const auto parallel = tgospa_gamma_zero(X, Y, params, 4);
    CHECK(serial.total == parallel.total);
    CHECK(serial.loc_cost == parallel.loc_cost);
    CHECK(serial.n_proper == parallel.n_proper);
    CHECK(serial.assignment == parallel.assignment);
  }
}

TEST_CASE("exact solver: serial and parallel agree exactly") {
  std::mt19937 rng(92);
  for (int trial = 0; trial < 5; ++trial) {
    const auto X = testsupport::random_trajectory_set(rng, 3, 10);
    const auto Y = testsupport::random_trajectory_set(rng, 3, 10);
    const auto params = testsupport::random_params(rng);
    const auto serial = tgospa_exact(X, Y, params, {.threads = 1});
    const auto parallel = tgospa_exact(X, Y, params, {.threads = 4});
    CHECK(serial.total == parallel.total);
    CHECK(serial.n_switches == parallel.n_switches);
    CHECK(serial.assignment == parallel.assignment);
  }
}

TEST_CASE("hota sweep: serial and parallel agree exactly") {
  std::mt19937 rng(93);
  for (int trial = 0; trial < 5; ++trial) {
    const auto X = testsupport::random_trajectory_set(rng, 4, 20);
    const auto Y = testsupport::random_trajectory_set(rng, 4, 20);
    const auto serial = hota(X, Y, {}, 1);
    const auto parallel = hota(X, Y, {}, 4);
    CHECK(serial.overall == parallel.overall);
    for (int l = 0; l < 19; ++l) CHECK(serial.per_alpha[l] == parallel.per_alpha[l]);
  }
}

TEST_CASE("distance collection: serial and parallel agree exactly") {
  std::mt19937 rng(94);
  const auto X = testsupport::random_trajectory_set(rng, 4, 60);
  const auto Y = testsupport::random_trajectory_set(rng, 4, 60);
  const auto d = base_metric_fn(BaseMetric::IoUInduced);
  CHECK(collect_assignment_distances(X, Y, 1.0, d, 1) ==
        collect_assignment_distances(X, Y, 1.0, d, 4));
}
