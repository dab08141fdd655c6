#pragma once

#include <utility>
#include <vector>

namespace tgospa {

/// Sparse description of: minimize objective . x subject to the rows'
/// relations, with x >= 0.
struct LinearProgram {
  enum class Relation { LessEq, Eq, GreaterEq };
  struct Row {
    std::vector<std::pair<int, double>> coeffs;  // (variable index, coefficient)
    Relation rel = Relation::Eq;
    double rhs = 0.0;
  };

  int num_vars = 0;
  std::vector<double> objective;
  std::vector<Row> rows;
};

struct SimplexResult {
  enum class Status { Optimal, Infeasible, Unbounded, IterationLimit };
  Status status = Status::Optimal;
  double objective = 0.0;
  std::vector<double> x;
  long long iterations = 0;
};

/// Dense two-phase primal simplex. Dantzig pricing with a Bland's-rule
/// fallback on degenerate stalls, so it terminates on every input.
/// max_iterations == 0 picks a bound from the problem size.
SimplexResult solve_lp(const LinearProgram& lp, long long max_iterations = 0);

}  // namespace tgospa
