#include <algorithm>
#include <cmath>
#include <vector>

#include "tgospa/hungarian.hpp"
#include "tgospa/parallel.hpp"
#include "tgospa/tgospa.hpp"

namespace tgospa {

GospaStepResult gospa_step(const std::vector<BoundingBox>& xs, const std::vector<BoundingBox>& ys,
                           double p, double c, const BoxDistance& d) {
  if (!(c > 0.0)) throw std::invalid_argument("gospa_step: c must be > 0");
  const std::size_t n = xs.size();
  const std::size_t m = ys.size();
  GospaStepResult result;
  if (n == 0 && m == 0) return result;

  const double half_miss = 0.5 * std::pow(c, p);
  const std::size_t dim = n + m;
  // Square layout: real pairs cost min(c, d)^p, any instance may take a
  // dummy slot at c^p / 2, dummy-dummy pairs are free.
  std::vector<std::vector<double>> cost(dim, std::vector<double>(dim, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      cost[i][j] = std::pow(std::min(c, d(xs[i], ys[j])), p);
    }
    for (std::size_t j = m; j < dim; ++j) cost[i][j] = half_miss;
  }
  for (std::size_t i = n; i < dim; ++i) {
    for (std::size_t j = 0; j < m; ++j) cost[i][j] = half_miss;
  }

  const auto solution = solve_assignment(cost);
  result.cost = solution.total;
  std::vector<char> y_matched(m, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = static_cast<std::size_t>(solution.row_to_col[i]);
    if (j < m && d(xs[i], ys[j]) < c) {
      result.matches.emplace_back(static_cast<int>(i), static_cast<int>(j));
      y_matched[j] = 1;
    } else {
      result.missed.push_back(static_cast<int>(i));
    }
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (!y_matched[j]) result.false_estimates.push_back(static_cast<int>(j));
  }
  return result;
}

TgospaResult tgospa_gamma_zero(const TrajectorySet& ground_truth, const TrajectorySet& estimates,
                               const TgospaParams& params, int threads) {
  params.validate();
  if (params.gamma != 0.0) {
    throw std::invalid_argument("tgospa_gamma_zero: gamma must be 0");
  }
  if (ground_truth.horizon() != estimates.horizon()) {
    throw std::invalid_argument("tgospa_gamma_zero: mismatched horizons");
  }
  const int K = ground_truth.horizon();
  const auto dist = params.metric();

  AssignmentMatrix assignment(ground_truth.size(), K);
  parallel_for(static_cast<std::size_t>(K) + 1, threads, [&](std::size_t ks) {
    const int k = static_cast<int>(ks);
    const auto x_inst = ground_truth.at_step(k);
    const auto y_inst = estimates.at_step(k);
    std::vector<BoundingBox> xs, ys;
    xs.reserve(x_inst.size());
    ys.reserve(y_inst.size());
    for (const auto& [i, box] : x_inst) xs.push_back(box);
    for (const auto& [j, box] : y_inst) ys.push_back(box);
    const auto step = gospa_step(xs, ys, params.p, params.c, dist);
    for (const auto& [xi, yj] : step.matches) {
      const int row = x_inst[static_cast<std::size_t>(xi)].first - 1;
      const int col = y_inst[static_cast<std::size_t>(yj)].first;
      assignment.set(static_cast<std::size_t>(row), k, col);
    }
  });
  return decompose(ground_truth, estimates, assignment, params, /*count_switches=*/false);
}

TgospaResult tgospa_gamma_extreme(const TrajectorySet& ground_truth,
                                  const TrajectorySet& estimates, const TgospaParams& params) {
  params.validate();
  if (ground_truth.horizon() != estimates.horizon()) {
    throw std::invalid_argument("tgospa_gamma_extreme: mismatched horizons");
  }
  const std::size_t nx = ground_truth.size();
  const std::size_t ny = estimates.size();
  const int K = ground_truth.horizon();
  const auto dist = params.metric();
  const double half_miss = 0.5 * std::pow(params.c, params.p);

  AssignmentMatrix assignment(nx, K);
  if (nx > 0 && ny > 0) {
    // One-to-one matching of whole trajectories; pairing cost accumulates
    // the per-step set distances, unmatched trajectories pay c^p / 2 per
    // instance via their dummy slots.
    const std::size_t dim = nx + ny;
    std::vector<std::vector<double>> cost(dim, std::vector<double>(dim, 0.0));
    for (std::size_t i = 0; i < nx; ++i) {
      for (std::size_t j = 0; j < ny; ++j) {
        double acc = 0.0;
        for (int k = 0; k <= K; ++k) {
          const auto x = ground_truth[i].at(k);
          const auto y = estimates[j].at(k);
          if (x && y) {
            acc += std::pow(std::min(params.c, dist(*x, *y)), params.p);
          } else if (x || y) {
            acc += half_miss;
          }
        }
        cost[i][j] = acc;
      }
      const double unmatched_x = half_miss * ground_truth[i].instance_count();
      for (std::size_t j = ny; j < dim; ++j) cost[i][j] = unmatched_x;
    }
    for (std::size_t j = 0; j < ny; ++j) {
      const double unmatched_y = half_miss * estimates[j].instance_count();
      for (std::size_t i = nx; i < dim; ++i) cost[i][j] = unmatched_y;
    }
    const auto solution = solve_assignment(cost);
    for (std::size_t i = 0; i < nx; ++i) {
      const std::size_t j = static_cast<std::size_t>(solution.row_to_col[i]);
      if (j < ny) {
        for (int k = 0; k <= K; ++k) assignment.set(i, k, static_cast<int>(j) + 1);
      }
    }
  }
  TgospaResult result = decompose(ground_truth, estimates, assignment, params, true);
  // Time-invariant assignments cannot switch; keep the fields exactly zero.
  result.switch_cost = 0.0;
  result.n_switches = 0.0;
  return result;
}

}  // namespace tgospa
