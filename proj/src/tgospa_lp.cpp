#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "tgospa/simplex.hpp"
#include "tgospa/tgospa.hpp"

namespace tgospa {
namespace {

constexpr double kIntegralityTol = 1e-6;

}  // namespace

TgospaResult tgospa_lp(const TrajectorySet& ground_truth, const TrajectorySet& estimates,
                       const TgospaParams& params) {
  params.validate();
  if (!(params.gamma > 0.0)) {
    throw std::invalid_argument("tgospa_lp: requires gamma > 0 (use the dedicated fast paths)");
  }
  if (ground_truth.horizon() != estimates.horizon()) {
    throw std::invalid_argument("tgospa_lp: mismatched horizons");
  }
  const std::size_t nx = ground_truth.size();
  const std::size_t ny = estimates.size();
  const int K = ground_truth.horizon();
  const std::size_t n_steps = static_cast<std::size_t>(K) + 1;

  if (nx == 0 || ny == 0) {
    // No pairings are possible; the all-unassigned matrix is optimal.
    return decompose(ground_truth, estimates, AssignmentMatrix(nx, K), params, true);
  }

  const auto dist = params.metric();
  const double half_miss = 0.5 * std::pow(params.c, params.p);
  const double gamma_p = std::pow(params.gamma, params.p);

  // Soft assignment W per step, one row/column of unassigned slots, the
  // useless corner cell dropped. Auxiliary variables e linearize the
  // temporal variation |W(k+1) - W(k)| over real pairs.
  const std::size_t cell_count = (nx + 1) * (ny + 1) - 1;
  const auto idx_w = [&](std::size_t k, std::size_t i, std::size_t j) -> int {
    return static_cast<int>(k * cell_count + i * (ny + 1) + j);
  };
  const std::size_t e_base = n_steps * cell_count;
  const auto idx_e = [&](std::size_t k, std::size_t i, std::size_t j) -> int {
    return static_cast<int>(e_base + (k * nx + i) * ny + j);
  };

  LinearProgram lp;
  lp.num_vars = static_cast<int>(e_base + (n_steps - 1) * nx * ny);
  lp.objective.assign(static_cast<std::size_t>(lp.num_vars), 0.0);

  // Pair classification reused for the fractional decomposition:
  // 0 proper-eligible, 1 pair at/past the cut-off, 2 only x present,
  // 3 only y present, 4 neither.
  std::vector<char> pair_kind(n_steps * nx * ny, 4);
  std::vector<double> pair_dist(n_steps * nx * ny, 0.0);

  for (std::size_t k = 0; k < n_steps; ++k) {
    const int kk = static_cast<int>(k);
    for (std::size_t i = 0; i < nx; ++i) {
      const auto x = ground_truth[i].at(kk);
      for (std::size_t j = 0; j < ny; ++j) {
        const auto y = estimates[j].at(kk);
        const std::size_t cell = (k * nx + i) * ny + j;
        double cost = 0.0;
        if (x && y) {
          const double dxy = dist(*x, *y);
          pair_dist[cell] = dxy;
          pair_kind[cell] = dxy < params.c ? 0 : 1;
          cost = std::pow(std::min(params.c, dxy), params.p);
        } else if (x) {
          pair_kind[cell] = 2;
          cost = half_miss;
        } else if (y) {
          pair_kind[cell] = 3;
          cost = half_miss;
        }
        lp.objective[static_cast<std::size_t>(idx_w(k, i, j))] = cost;
      }
      lp.objective[static_cast<std::size_t>(idx_w(k, i, ny))] = x ? half_miss : 0.0;
    }
    for (std::size_t j = 0; j < ny; ++j) {
      lp.objective[static_cast<std::size_t>(idx_w(k, nx, j))] =
          estimates[j].present(kk) ? half_miss : 0.0;
    }
  }
  for (std::size_t v = e_base; v < static_cast<std::size_t>(lp.num_vars); ++v) {
    lp.objective[v] = 0.5 * gamma_p;
  }

  for (std::size_t k = 0; k < n_steps; ++k) {
    for (std::size_t i = 0; i < nx; ++i) {
      LinearProgram::Row row;
      row.rel = LinearProgram::Relation::Eq;
      row.rhs = 1.0;
      for (std::size_t j = 0; j <= ny; ++j) row.coeffs.emplace_back(idx_w(k, i, j), 1.0);
      lp.rows.push_back(std::move(row));
    }
    for (std::size_t j = 0; j < ny; ++j) {
      LinearProgram::Row row;
      row.rel = LinearProgram::Relation::Eq;
      row.rhs = 1.0;
      for (std::size_t i = 0; i <= nx; ++i) row.coeffs.emplace_back(idx_w(k, i, j), 1.0);
      lp.rows.push_back(std::move(row));
    }
  }
  for (std::size_t k = 0; k + 1 < n_steps; ++k) {
    for (std::size_t i = 0; i < nx; ++i) {
      for (std::size_t j = 0; j < ny; ++j) {
        const int w_now = idx_w(k, i, j);
        const int w_next = idx_w(k + 1, i, j);
        const int e = idx_e(k, i, j);
        LinearProgram::Row up;
        up.rel = LinearProgram::Relation::LessEq;
        up.rhs = 0.0;
        up.coeffs = {{w_next, 1.0}, {w_now, -1.0}, {e, -1.0}};
        lp.rows.push_back(std::move(up));
        LinearProgram::Row down;
        down.rel = LinearProgram::Relation::LessEq;
        down.rhs = 0.0;
        down.coeffs = {{w_now, 1.0}, {w_next, -1.0}, {e, -1.0}};
        lp.rows.push_back(std::move(down));
      }
    }
  }

  const SimplexResult sol = solve_lp(lp);
  if (sol.status != SimplexResult::Status::Optimal) {
    const char* what = sol.status == SimplexResult::Status::Infeasible  ? "infeasible"
                       : sol.status == SimplexResult::Status::Unbounded ? "unbounded"
                                                                        : "iteration limit";
    throw SolverError("tgospa_lp: LP solve failed (" + std::string(what) + " after " +
                      std::to_string(sol.iterations) + " iterations)");
  }

  bool hard = true;
  for (std::size_t v = 0; v < e_base && hard; ++v) {
    const double w = sol.x[v];
    hard = std::min(std::abs(w), std::abs(w - 1.0)) <= kIntegralityTol;
  }

  if (hard) {
    AssignmentMatrix assignment(nx, K);
    for (std::size_t k = 0; k < n_steps; ++k) {
      for (std::size_t i = 0; i < nx; ++i) {
        for (std::size_t j = 0; j < ny; ++j) {
          if (sol.x[static_cast<std::size_t>(idx_w(k, i, j))] > 0.5) {
            assignment.set(i, static_cast<int>(k), static_cast<int>(j) + 1);
          }
        }
      }
    }
    TgospaResult result = decompose(ground_truth, estimates, assignment, params, true);
    result.is_hard = true;
    return result;
  }

  // Soft optimum: report the fractional decomposition; the total remains a
  // valid lower bound on the exact metric.
  TgospaResult result;
  result.is_hard = false;
  result.assignment = AssignmentMatrix(nx, K);
  double proper_mass = 0.0;
  for (std::size_t k = 0; k < n_steps; ++k) {
    for (std::size_t i = 0; i < nx; ++i) {
      for (std::size_t j = 0; j < ny; ++j) {
        const double w = sol.x[static_cast<std::size_t>(idx_w(k, i, j))];
        if (w <= 0.0) continue;
        const std::size_t cell = (k * nx + i) * ny + j;
        switch (pair_kind[cell]) {
          case 0:
            result.loc_cost += w * std::pow(pair_dist[cell], params.p);
            proper_mass += w;
            break;
          case 1:
            result.miss_cost += w * half_miss;
            result.false_cost += w * half_miss;
            break;
          case 2:
            result.miss_cost += w * half_miss;
            break;
          case 3:
            result.false_cost += w * half_miss;
            break;
          default:
            break;
        }
      }
      if (ground_truth[i].present(static_cast<int>(k))) {
        result.miss_cost += sol.x[static_cast<std::size_t>(idx_w(k, i, ny))] * half_miss;
      }
    }
    for (std::size_t j = 0; j < ny; ++j) {
      if (estimates[j].present(static_cast<int>(k))) {
        result.false_cost += sol.x[static_cast<std::size_t>(idx_w(k, nx, j))] * half_miss;
      }
    }
  }
  double e_sum = 0.0;
  for (std::size_t v = e_base; v < static_cast<std::size_t>(lp.num_vars); ++v) e_sum += sol.x[v];
  result.switch_cost = 0.5 * gamma_p * e_sum;
  result.n_switches = 0.5 * e_sum;
  result.n_proper = std::llround(proper_mass);
  result.n_missed = std::llround(result.miss_cost / half_miss);
  result.n_false = std::llround(result.false_cost / half_miss);
  result.total = std::pow(sol.objective, 1.0 / params.p);
  result.p_avg_loc =
      result.n_proper > 0
          ? std::pow(result.loc_cost / static_cast<double>(result.n_proper), 1.0 / params.p)
          : 0.0;
  return result;
}

}  // namespace tgospa
