#include "tgospa/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace tgospa {
namespace {

constexpr double kPivotEps = 1e-9;
constexpr double kCostEps = 1e-9;
constexpr double kFeasEps = 1e-7;
constexpr int kStallLimit = 64;

class Tableau {
 public:
  Tableau(const LinearProgram& lp) {
    m_ = lp.rows.size();
    n_ = static_cast<std::size_t>(lp.num_vars);

    // Column layout: structural | slack/surplus | artificial | rhs.
    std::size_t n_slack = 0;
    for (const auto& row : lp.rows) {
      if (row.rel != LinearProgram::Relation::Eq) ++n_slack;
    }
    // Rows are normalized to rhs >= 0 first; an artificial is needed
    // wherever the slack cannot serve as the initial basic variable.
    std::vector<int> slack_sign(m_, 0);
    std::vector<char> needs_artificial(m_, 0);
    for (std::size_t i = 0; i < m_; ++i) {
      const auto& row = lp.rows[i];
      double rhs = row.rhs;
      double flip = 1.0;
      if (rhs < 0.0) flip = -1.0;
      auto rel = row.rel;
      if (flip < 0.0) {
        if (rel == LinearProgram::Relation::LessEq) {
          rel = LinearProgram::Relation::GreaterEq;
        } else if (rel == LinearProgram::Relation::GreaterEq) {
          rel = LinearProgram::Relation::LessEq;
        }
      }
      switch (rel) {
        case LinearProgram::Relation::LessEq:
          slack_sign[i] = 1;
          break;
        case LinearProgram::Relation::GreaterEq:
          slack_sign[i] = -1;
          needs_artificial[i] = 1;
          break;
        case LinearProgram::Relation::Eq:
          needs_artificial[i] = 1;
          break;
      }
    }
    std::size_t n_art = 0;
    for (std::size_t i = 0; i < m_; ++i) n_art += needs_artificial[i] ? 1 : 0;

    slack_begin_ = n_;
    art_begin_ = n_ + n_slack;
    width_ = art_begin_ + n_art + 1;  // +1 for rhs
    rhs_col_ = width_ - 1;
    t_.assign(m_ * width_, 0.0);
    basis_.assign(m_, -1);

    std::size_t slack_idx = slack_begin_;
    std::size_t art_idx = art_begin_;
    for (std::size_t i = 0; i < m_; ++i) {
      const auto& row = lp.rows[i];
      const double flip = row.rhs < 0.0 ? -1.0 : 1.0;
      double* r = row_ptr(i);
      for (const auto& [var, coeff] : row.coeffs) {
        if (var < 0 || var >= lp.num_vars) {
          throw std::invalid_argument("solve_lp: variable index out of range");
        }
        r[static_cast<std::size_t>(var)] += flip * coeff;
      }
      r[rhs_col_] = flip * row.rhs;
      if (slack_sign[i] != 0) {
        // slack_sign was derived from the flipped relation already
        r[slack_idx] = static_cast<double>(slack_sign[i]);
        if (!needs_artificial[i]) basis_[i] = static_cast<int>(slack_idx);
        ++slack_idx;
      }
      if (needs_artificial[i]) {
        r[art_idx] = 1.0;
        basis_[i] = static_cast<int>(art_idx);
        ++art_idx;
      }
    }
  }

  std::size_t rows() const { return m_; }
  std::size_t structural_vars() const { return n_; }
  std::size_t art_begin() const { return art_begin_; }
  std::size_t rhs_col() const { return rhs_col_; }
  int basis(std::size_t i) const { return basis_[i]; }
  double value(std::size_t i) const { return t_[i * width_ + rhs_col_]; }
  const double* row_ptr(std::size_t i) const { return t_.data() + i * width_; }
  double* row_ptr(std::size_t i) { return t_.data() + i * width_; }

  /// Reduced-cost row for the given column costs (length >= art_begin_;
  /// artificial columns priced separately via art_cost).
  std::vector<double> reduced_costs(const std::vector<double>& cost, double art_cost) const {
    std::vector<double> z(width_, 0.0);
    for (std::size_t j = 0; j < art_begin_; ++j) z[j] = j < cost.size() ? cost[j] : 0.0;
    for (std::size_t j = art_begin_; j < rhs_col_; ++j) z[j] = art_cost;
    for (std::size_t i = 0; i < m_; ++i) {
      const auto b = static_cast<std::size_t>(basis_[i]);
      const double cb = b < art_begin_ ? (b < cost.size() ? cost[b] : 0.0) : art_cost;
      if (cb == 0.0) continue;
      const double* r = row_ptr(i);
      for (std::size_t j = 0; j < width_; ++j) z[j] -= cb * r[j];
    }
    return z;
  }

  void pivot(std::size_t pr, std::size_t pc, std::vector<double>& z) {
    double* prow = row_ptr(pr);
    const double pv = prow[pc];
    const double inv = 1.0 / pv;
    for (std::size_t j = 0; j < width_; ++j) prow[j] *= inv;
    prow[pc] = 1.0;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == pr) continue;
      double* r = row_ptr(i);
      const double f = r[pc];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < width_; ++j) r[j] -= f * prow[j];
      r[pc] = 0.0;
    }
    const double f = z[pc];
    if (f != 0.0) {
      for (std::size_t j = 0; j < width_; ++j) z[j] -= f * prow[j];
      z[pc] = 0.0;
    }
    basis_[pr] = static_cast<int>(pc);
  }

  /// Runs the simplex loop on the current basis for the given reduced-cost
  /// row. Artificial columns never enter; once driven out they stay out.
  SimplexResult::Status iterate(std::vector<double>& z, long long max_iterations,
                                long long& iterations) {
    const std::size_t enter_end = art_begin_;
    int stalls = 0;
    bool bland = false;
    while (true) {
      // Entering column.
      std::size_t pc = width_;
      if (bland) {
        for (std::size_t j = 0; j < enter_end; ++j) {
          if (z[j] < -kCostEps) {
            pc = j;
            break;
          }
        }
      } else {
        double best = -kCostEps;
        for (std::size_t j = 0; j < enter_end; ++j) {
          if (z[j] < best) {
            best = z[j];
            pc = j;
          }
        }
      }
      if (pc == width_) return SimplexResult::Status::Optimal;

      // Ratio test; smallest basis index breaks ties (needed by Bland).
      std::size_t pr = m_;
      double best_ratio = 0.0;
      for (std::size_t i = 0; i < m_; ++i) {
        const double a = row_ptr(i)[pc];
        if (a <= kPivotEps) continue;
        const double ratio = value(i) / a;
        if (pr == m_ || ratio < best_ratio - kPivotEps ||
            (ratio < best_ratio + kPivotEps && basis_[i] < basis_[pr])) {
          pr = i;
          best_ratio = ratio;
        }
      }
      if (pr == m_) return SimplexResult::Status::Unbounded;

      const bool degenerate = best_ratio < kPivotEps;
      pivot(pr, pc, z);
      ++iterations;
      if (iterations >= max_iterations) return SimplexResult::Status::IterationLimit;

      if (degenerate) {
        if (++stalls >= kStallLimit) bland = true;
      } else {
        stalls = 0;
        bland = false;
      }
    }
  }

  /// After phase 1, pivot basic artificials out wherever the row has a
  /// usable non-artificial entry. Rows without one are redundant and keep a
  /// zero-valued artificial that phase 2 never moves.
  void drive_out_artificials(std::vector<double>& z) {
    for (std::size_t i = 0; i < m_; ++i) {
      if (static_cast<std::size_t>(basis_[i]) < art_begin_) continue;
      const double* r = row_ptr(i);
      std::size_t pc = width_;
      for (std::size_t j = 0; j < art_begin_; ++j) {
        if (std::abs(r[j]) > 1e-7) {
          pc = j;
          break;
        }
      }
      if (pc != width_) pivot(i, pc, z);
    }
  }

 private:
  std::size_t m_ = 0;
  std::size_t n_ = 0;
  std::size_t slack_begin_ = 0;
  std::size_t art_begin_ = 0;
  std::size_t width_ = 0;
  std::size_t rhs_col_ = 0;
  std::vector<double> t_;
  std::vector<int> basis_;
};

}  // namespace

SimplexResult solve_lp(const LinearProgram& lp, long long max_iterations) {
  if (lp.num_vars < 0 || lp.objective.size() != static_cast<std::size_t>(lp.num_vars)) {
    throw std::invalid_argument("solve_lp: objective size must match num_vars");
  }
  SimplexResult result;
  if (lp.rows.empty()) {
    // With x >= 0 and no rows, the optimum sets every variable to zero
    // unless some cost is negative (unbounded).
    result.x.assign(static_cast<std::size_t>(lp.num_vars), 0.0);
    for (double c : lp.objective) {
      if (c < 0.0) {
        result.status = SimplexResult::Status::Unbounded;
        return result;
      }
    }
    return result;
  }

  Tableau tab(lp);
  if (max_iterations <= 0) {
    max_iterations = 200 * static_cast<long long>(tab.rows() + lp.num_vars) + 2000;
  }

  // Phase 1: minimize the artificial sum.
  {
    std::vector<double> zero_cost;
    std::vector<double> z = tab.reduced_costs(zero_cost, 1.0);
    const auto status = tab.iterate(z, max_iterations, result.iterations);
    if (status == SimplexResult::Status::IterationLimit) {
      result.status = status;
      return result;
    }
    double art_sum = 0.0;
    for (std::size_t i = 0; i < tab.rows(); ++i) {
      if (static_cast<std::size_t>(tab.basis(i)) >= tab.art_begin()) art_sum += tab.value(i);
    }
    if (art_sum > kFeasEps) {
      result.status = SimplexResult::Status::Infeasible;
      return result;
    }
    tab.drive_out_artificials(z);
  }

  // Phase 2: the real objective, artificials barred from entering.
  {
    std::vector<double> z = tab.reduced_costs(lp.objective, 0.0);
    const auto status = tab.iterate(z, max_iterations, result.iterations);
    if (status != SimplexResult::Status::Optimal) {
      result.status = status;
      return result;
    }
  }

  result.x.assign(static_cast<std::size_t>(lp.num_vars), 0.0);
  for (std::size_t i = 0; i < tab.rows(); ++i) {
    const auto b = static_cast<std::size_t>(tab.basis(i));
    if (b < tab.structural_vars()) result.x[b] = std::max(0.0, tab.value(i));
  }
  result.objective = 0.0;
  for (std::size_t j = 0; j < result.x.size(); ++j) {
    result.objective += lp.objective[j] * result.x[j];
  }
  result.status = SimplexResult::Status::Optimal;
  return result;
}

}  // namespace tgospa
