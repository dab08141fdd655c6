#include <cmath>
#include <stdexcept>
#include <vector>

#include "tgospa/tgospa.hpp"

namespace tgospa {

void TgospaParams::validate() const {
  if (!(p >= 1.0) || !std::isfinite(p)) {
    throw std::invalid_argument("TgospaParams: p must be finite and >= 1");
  }
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw std::invalid_argument("TgospaParams: c must be finite and > 0");
  }
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) {
    throw std::invalid_argument("TgospaParams: gamma must be finite and >= 0");
  }
}

double base_distance(const std::optional<BoundingBox>& x, const std::optional<BoundingBox>& y,
                     double p, double c, const BoxDistance& d) {
  if (x && y) return std::min(c, d(*x, *y));
  if (!x && !y) return 0.0;
  return c / std::pow(2.0, 1.0 / p);
}

double switch_cost(int prev, int next) {
  if (prev == next) return 0.0;
  if (prev != 0 && next != 0) return 1.0;
  return 0.5;
}

namespace {

int half_switches(int prev, int next) {
  if (prev == next) return 0;
  if (prev != 0 && next != 0) return 2;
  return 1;
}

}  // namespace

TgospaResult decompose(const TrajectorySet& ground_truth, const TrajectorySet& estimates,
                       const AssignmentMatrix& assignment, const TgospaParams& params,
                       bool count_switches) {
  params.validate();
  const int K = assignment.horizon();
  const std::size_t nx = assignment.rows();
  if (nx != ground_truth.size() || K != ground_truth.horizon() || K != estimates.horizon()) {
    throw std::invalid_argument("decompose: assignment shape does not match the sets");
  }
  const auto dist = params.metric();
  const double half_miss = 0.5 * std::pow(params.c, params.p);
  const double gamma_p = std::pow(params.gamma, params.p);

  TgospaResult r;
  r.assignment = assignment;
  std::vector<StepCosts> steps(static_cast<std::size_t>(K) + 1);
  std::vector<char> y_assigned(estimates.size() + 1, 0);

  std::vector<int> col = assignment.column(0);
  for (int k = 0; k <= K; ++k) {
    StepCosts& sc = steps[static_cast<std::size_t>(k)];
    std::fill(y_assigned.begin(), y_assigned.end(), 0);
    for (std::size_t i = 0; i < nx; ++i) {
      const int j = col[i];
      const auto x = ground_truth[i].at(k);
      if (j > 0) {
        y_assigned[static_cast<std::size_t>(j)] = 1;
        const auto y = estimates[static_cast<std::size_t>(j - 1)].at(k);
        if (x && y) {
          const double dxy = dist(*x, *y);
          if (dxy < params.c) {
            const double term = std::pow(dxy, params.p);
            r.loc_cost += term;
            sc.localization += term;
            ++r.n_proper;
          } else {
            // At or beyond the cut-off the pair costs a missed plus a
            // false instance.
            r.miss_cost += half_miss;
            r.false_cost += half_miss;
            sc.missed += half_miss;
            sc.false_alarm += half_miss;
            ++r.n_missed;
            ++r.n_false;
          }
        } else if (x) {
          r.miss_cost += half_miss;
          sc.missed += half_miss;
          ++r.n_missed;
        } else if (y) {
          r.false_cost += half_miss;
          sc.false_alarm += half_miss;
          ++r.n_false;
        }
      } else if (x) {
        r.miss_cost += half_miss;
        sc.missed += half_miss;
        ++r.n_missed;
      }
    }
    for (std::size_t j = 1; j <= estimates.size(); ++j) {
      if (!y_assigned[j] && estimates[j - 1].present(k)) {
        r.false_cost += half_miss;
        sc.false_alarm += half_miss;
        ++r.n_false;
      }
    }
    if (k < K) {
      const std::vector<int> next = assignment.column(k + 1);
      if (count_switches) {
        int hs = 0;
        for (std::size_t i = 0; i < nx; ++i) hs += half_switches(col[i], next[i]);
        const double cost = gamma_p * 0.5 * hs;
        r.switch_cost += cost;
        r.n_switches += 0.5 * hs;
        steps[static_cast<std::size_t>(k) + 1].switching = cost;
      }
      col = next;
    }
  }

  const double total_p = r.loc_cost + r.miss_cost + r.false_cost + r.switch_cost;
  r.total = std::pow(total_p, 1.0 / params.p);
  r.p_avg_loc =
      r.n_proper > 0 ? std::pow(r.loc_cost / static_cast<double>(r.n_proper), 1.0 / params.p)
                     : 0.0;
  r.per_step = std::move(steps);
  return r;
}

}  // namespace tgospa
