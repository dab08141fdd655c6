#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "tgospa/parallel.hpp"
#include "tgospa/tgospa.hpp"

namespace tgospa {
namespace {

// Number of injective columns: sum over r of C(nx, r) * ny! / (ny - r)!.
double count_columns(std::size_t nx, std::size_t ny) {
  double total = 0.0;
  double choose = 1.0;   // C(nx, r)
  double arrange = 1.0;  // ny! / (ny - r)!
  for (std::size_t r = 0; r <= std::min(nx, ny); ++r) {
    total += choose * arrange;
    if (total > 1e15) return total;
    choose = choose * static_cast<double>(nx - r) / static_cast<double>(r + 1);
    arrange *= static_cast<double>(ny - r);
  }
  return total;
}

// All injective columns in lexicographically ascending order (value 0 may
// repeat; nonzero values may not).
std::vector<std::vector<int>> enumerate_columns(std::size_t nx, std::size_t ny) {
  std::vector<std::vector<int>> columns;
  std::vector<int> current(nx, 0);
  std::vector<char> used(ny + 1, 0);
  const auto recurse = [&](auto&& self, std::size_t row) -> void {
    if (row == nx) {
      columns.push_back(current);
      return;
    }
    for (int j = 0; j <= static_cast<int>(ny); ++j) {
      if (j > 0 && used[static_cast<std::size_t>(j)]) continue;
      current[row] = j;
      if (j > 0) used[static_cast<std::size_t>(j)] = 1;
      self(self, row + 1);
      if (j > 0) used[static_cast<std::size_t>(j)] = 0;
    }
  };
  recurse(recurse, 0);
  return columns;
}

int column_half_switches(const std::vector<int>& a, const std::vector<int>& b) {
  int hs = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    hs += (a[i] != 0 && b[i] != 0) ? 2 : 1;
  }
  return hs;
}

struct Value {
  double cost = 0.0;
  long long half_switches = 0;
};

// Strict improvement; equal costs prefer fewer switches. Keeping the first
// minimizer while scanning columns in ascending order yields the
// lexicographically smallest optimal assignment.
bool better(const Value& a, const Value& b) {
  if (a.cost != b.cost) return a.cost < b.cost;
  return a.half_switches < b.half_switches;
}

}  // namespace

double exact_search_size(std::size_t n_ground_truth, std::size_t n_estimates, int horizon) {
  return count_columns(n_ground_truth, n_estimates) * static_cast<double>(horizon + 1);
}

TgospaResult tgospa_exact(const TrajectorySet& ground_truth, const TrajectorySet& estimates,
                          const TgospaParams& params, const ExactOptions& options) {
  params.validate();
  if (ground_truth.horizon() != estimates.horizon()) {
    throw std::invalid_argument("tgospa_exact: mismatched horizons");
  }
  const std::size_t nx = ground_truth.size();
  const std::size_t ny = estimates.size();
  const int K = ground_truth.horizon();
  const std::size_t n_steps = static_cast<std::size_t>(K) + 1;

  const double predicted = count_columns(nx, ny) * static_cast<double>(n_steps);
  if (predicted > static_cast<double>(options.state_ceiling)) {
    throw SolverLimitError(
        "tgospa_exact: instance too large for the exact solver (" +
        std::to_string(static_cast<long long>(predicted)) + " states x steps exceeds the ceiling " +
        std::to_string(options.state_ceiling) + "); use the LP solver instead");
  }

  const std::vector<std::vector<int>> columns = enumerate_columns(nx, ny);
  const std::size_t n_cols = columns.size();
  const auto dist = params.metric();
  const double half_miss = 0.5 * std::pow(params.c, params.p);
  const double gamma_p = std::pow(params.gamma, params.p);

  // Presence masks and pair costs, laid out per step.
  std::vector<char> x_present(n_steps * std::max<std::size_t>(nx, 1), 0);
  std::vector<char> y_present(n_steps * std::max<std::size_t>(ny, 1), 0);
  std::vector<int> y_present_count(n_steps, 0);
  std::vector<double> pair_cost(n_steps * std::max<std::size_t>(nx * ny, 1), 0.0);
  for (std::size_t k = 0; k < n_steps; ++k) {
    const int kk = static_cast<int>(k);
    for (std::size_t i = 0; i < nx; ++i) {
      x_present[k * nx + i] = ground_truth[i].present(kk) ? 1 : 0;
    }
    for (std::size_t j = 0; j < ny; ++j) {
      const bool present = estimates[j].present(kk);
      y_present[k * ny + j] = present ? 1 : 0;
      y_present_count[k] += present ? 1 : 0;
    }
    for (std::size_t i = 0; i < nx; ++i) {
      const auto x = ground_truth[i].at(kk);
      for (std::size_t j = 0; j < ny; ++j) {
        const auto y = estimates[j].at(kk);
        double cost = 0.0;
        if (x && y) {
          cost = std::pow(std::min(params.c, dist(*x, *y)), params.p);
        } else if (x || y) {
          cost = half_miss;
        }
        pair_cost[(k * nx + i) * ny + j] = cost;
      }
    }
  }

  // Per-step cost of every column.
  std::vector<double> step_cost(n_steps * n_cols, 0.0);
  parallel_for(n_cols, options.threads, [&](std::size_t s) {
    const std::vector<int>& col = columns[s];
    for (std::size_t k = 0; k < n_steps; ++k) {
      double cost = 0.0;
      int assigned_present_y = 0;
      for (std::size_t i = 0; i < nx; ++i) {
        const int j = col[i];
        if (j > 0) {
          cost += pair_cost[(k * nx + i) * ny + static_cast<std::size_t>(j - 1)];
          assigned_present_y += y_present[k * ny + static_cast<std::size_t>(j - 1)];
        } else if (x_present[k * nx + i]) {
          cost += half_miss;
        }
      }
      cost += half_miss * static_cast<double>(y_present_count[k] - assigned_present_y);
      step_cost[k * n_cols + s] = cost;
    }
  });

  // Backward dynamic program: value[k][s] is the optimal cost of steps
  // k..K given column s at step k, with the switch count as tie-breaker.
  std::vector<Value> value(n_steps * n_cols);
  for (std::size_t s = 0; s < n_cols; ++s) {
    value[(n_steps - 1) * n_cols + s] = {step_cost[(n_steps - 1) * n_cols + s], 0};
  }
  for (std::size_t k = n_steps - 1; k-- > 0;) {
    parallel_for(n_cols, options.threads, [&](std::size_t s) {
      Value best;
      bool first = true;
      for (std::size_t t = 0; t < n_cols; ++t) {
        const int hs = column_half_switches(columns[s], columns[t]);
        const Value& next = value[(k + 1) * n_cols + t];
        const Value cand{gamma_p * 0.5 * hs + next.cost, next.half_switches + hs};
        if (first || better(cand, best)) {
          best = cand;
          first = false;
        }
      }
      best.cost += step_cost[k * n_cols + s];
      value[k * n_cols + s] = best;
    });
  }

  // Forward reconstruction; scanning ascending keeps the lexicographically
  // smallest co-optimal column at every step.
  std::vector<std::size_t> chosen(n_steps, 0);
  {
    Value best;
    bool first = true;
    for (std::size_t s = 0; s < n_cols; ++s) {
      if (first || better(value[s], best)) {
        best = value[s];
        chosen[0] = s;
        first = false;
      }
    }
  }
  for (std::size_t k = 1; k < n_steps; ++k) {
    const std::vector<int>& prev = columns[chosen[k - 1]];
    Value best;
    bool first = true;
    for (std::size_t t = 0; t < n_cols; ++t) {
      const int hs = column_half_switches(prev, columns[t]);
      const Value& next = value[k * n_cols + t];
      const Value cand{gamma_p * 0.5 * hs + next.cost, next.half_switches + hs};
      if (first || better(cand, best)) {
        best = cand;
        chosen[k] = t;
        first = false;
      }
    }
  }

  AssignmentMatrix assignment(nx, K);
  for (std::size_t k = 0; k < n_steps; ++k) {
    const std::vector<int>& col = columns[chosen[k]];
    for (std::size_t i = 0; i < nx; ++i) assignment.set(i, static_cast<int>(k), col[i]);
  }
  return decompose(ground_truth, estimates, assignment, params, true);
}

}  // namespace tgospa
