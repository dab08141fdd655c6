// Compares the serial reference paths (threads = 1) against the OpenMP
// kernels on synthetic workloads and checks that both produce identical
// results.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "tgospa/hota.hpp"
#include "tgospa/parallel.hpp"
#include "tgospa/paramselect.hpp"
#include "tgospa/tgospa.hpp"

namespace {

using namespace tgospa;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

TrajectorySet random_set(std::mt19937& rng, std::size_t n_traj, int horizon, double gap_prob) {
  std::uniform_real_distribution<double> pos(0.0, 60.0);
  std::uniform_real_distribution<double> extent(1.0, 6.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Trajectory> trajectories;
  for (std::size_t t = 0; t < n_traj; ++t) {
    std::vector<std::pair<int, BoundingBox>> points;
    double x = pos(rng), y = pos(rng);
    for (int k = 0; k <= horizon; ++k) {
      x += unit(rng) - 0.5;
      y += unit(rng) - 0.5;
      if (unit(rng) < gap_prob) continue;
      points.emplace_back(k, BoundingBox(x, y, extent(rng), extent(rng)));
    }
    if (!points.empty()) trajectories.push_back(Trajectory::from_points(std::move(points)));
  }
  return TrajectorySet(std::move(trajectories), horizon);
}

struct BenchCase {
  const char* name;
  double serial_s = 0;
  double parallel_s = 0;
  bool identical = false;
};

void report(const BenchCase& b) {
  std::printf("%-28s serial %8.3fs   omp(%d) %8.3fs   speedup %5.2fx   results %s\n", b.name,
              b.serial_s, hardware_threads(), b.parallel_s,
              b.parallel_s > 0 ? b.serial_s / b.parallel_s : 0.0,
              b.identical ? "identical" : "DIFFER");
}

bool same_result(const TgospaResult& a, const TgospaResult& b) {
  return a.total == b.total && a.loc_cost == b.loc_cost && a.miss_cost == b.miss_cost &&
         a.false_cost == b.false_cost && a.switch_cost == b.switch_cost &&
         a.n_proper == b.n_proper && a.assignment == b.assignment;
}

}  // namespace

int main(int argc, char** argv) {
  double scale = 1.0;
  if (argc > 1) scale = std::atof(argv[1]);

  std::mt19937 rng(7);
  TgospaParams params;
  params.c = 6.0;
  params.p = 1.5;
  params.base = BaseMetric::Wasserstein;

  {
    const int horizon = static_cast<int>(1500 * scale);
    const auto gt = random_set(rng, 6, horizon, 0.1);
    const auto est = random_set(rng, 6, horizon, 0.2);
    TgospaParams pz = params;
    pz.gamma = 0.0;
    BenchCase b{"gamma-zero per-step sweep"};
    auto t0 = Clock::now();
    const auto serial = tgospa_gamma_zero(gt, est, pz, 1);
    b.serial_s = seconds_since(t0);
    t0 = Clock::now();
    const auto parallel = tgospa_gamma_zero(gt, est, pz, 0);
    b.parallel_s = seconds_since(t0);
    b.identical = same_result(serial, parallel);
    report(b);
  }

  {
    const int horizon = static_cast<int>(400 * scale);
    const auto gt = random_set(rng, 3, horizon, 0.15);
    const auto est = random_set(rng, 3, horizon, 0.25);
    TgospaParams pe = params;
    pe.gamma = 3.0;
    ExactOptions serial_opt{.state_ceiling = 50'000'000, .threads = 1};
    ExactOptions parallel_opt{.state_ceiling = 50'000'000, .threads = 0};
    BenchCase b{"exact DP state expansion"};
    auto t0 = Clock::now();
    const auto serial = tgospa_exact(gt, est, pe, serial_opt);
    b.serial_s = seconds_since(t0);
    t0 = Clock::now();
    const auto parallel = tgospa_exact(gt, est, pe, parallel_opt);
    b.parallel_s = seconds_since(t0);
    b.identical = same_result(serial, parallel);
    report(b);
  }

  {
    const int horizon = static_cast<int>(500 * scale);
    const auto gt = random_set(rng, 8, horizon, 0.1);
    const auto est = random_set(rng, 8, horizon, 0.2);
    BenchCase b{"hota 19-threshold sweep"};
    const SimilarityFn sim = [](const BoundingBox& a, const BoundingBox& bb) {
      return iou(a, bb);
    };
    auto t0 = Clock::now();
    const auto serial = hota(gt, est, sim, 1);
    b.serial_s = seconds_since(t0);
    t0 = Clock::now();
    const auto parallel = hota(gt, est, sim, 0);
    b.parallel_s = seconds_since(t0);
    b.identical = serial.overall == parallel.overall && serial.per_alpha == parallel.per_alpha;
    report(b);
  }

  {
    const int horizon = static_cast<int>(2000 * scale);
    const auto gt = random_set(rng, 6, horizon, 0.1);
    const auto est = random_set(rng, 8, horizon, 0.2);
    BenchCase b{"distance collection"};
    const BoxDistance d = base_metric_fn(BaseMetric::Wasserstein);
    auto t0 = Clock::now();
    const auto serial = collect_assignment_distances(gt, est, 8.0, d, 1);
    b.serial_s = seconds_since(t0);
    t0 = Clock::now();
    const auto parallel = collect_assignment_distances(gt, est, 8.0, d, 0);
    b.parallel_s = seconds_since(t0);
    b.identical = serial == parallel;
    report(b);
  }
  return 0;
}
