#pragma once

#include <array>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

namespace tgospa {

template <class T>
struct CostTraits;

template <>
struct CostTraits<double> {
  static double infinity() { return std::numeric_limits<double>::infinity(); }
  static double zero() { return 0.0; }
};

/// Cost value compared lexicographically, with component-wise addition.
/// Lets the assignment solver optimize tiered objectives exactly instead of
/// mixing tiers through epsilon-weighted arithmetic.
template <std::size_t N>
struct LexCost {
  std::array<double, N> v{};

  LexCost& operator+=(const LexCost& o) {
    for (std::size_t i = 0; i < N; ++i) v[i] += o.v[i];
    return *this;
  }
  LexCost& operator-=(const LexCost& o) {
    for (std::size_t i = 0; i < N; ++i) v[i] -= o.v[i];
    return *this;
  }
  friend LexCost operator+(LexCost a, const LexCost& b) { return a += b; }
  friend LexCost operator-(LexCost a, const LexCost& b) { return a -= b; }
  friend bool operator<(const LexCost& a, const LexCost& b) { return a.v < b.v; }
  friend bool operator==(const LexCost& a, const LexCost& b) { return a.v == b.v; }
};

template <std::size_t N>
struct CostTraits<LexCost<N>> {
  static LexCost<N> infinity() {
    LexCost<N> c;
    c.v[0] = std::numeric_limits<double>::infinity();
    return c;
  }
  static LexCost<N> zero() { return LexCost<N>{}; }
};

template <class T>
struct AssignmentSolution {
  std::vector<int> row_to_col;  // 0-based; every row is matched
  T total = CostTraits<T>::zero();
};

/// Minimum-cost perfect assignment on a square cost matrix via shortest
/// augmenting paths with dual potentials, O(n^3). Works for any cost type
/// forming a totally ordered group (double, LexCost).
template <class T>
AssignmentSolution<T> solve_assignment(const std::vector<std::vector<T>>& cost) {
  const std::size_t n = cost.size();
  AssignmentSolution<T> result;
  if (n == 0) return result;
  for (const auto& row : cost) {
    if (row.size() != n) throw std::invalid_argument("solve_assignment: matrix must be square");
  }

  const T inf = CostTraits<T>::infinity();
  const T zero = CostTraits<T>::zero();
  // 1-based with dummy row/column 0.
  std::vector<T> u(n + 1, zero), v(n + 1, zero), minv(n + 1, zero);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);

  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = static_cast<int>(i);
    std::size_t j0 = 0;
    std::fill(minv.begin(), minv.end(), inf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = static_cast<std::size_t>(p[j0]);
      std::size_t j1 = 0;
      T delta = inf;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const T cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = static_cast<int>(j0);
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[static_cast<std::size_t>(p[j])] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = static_cast<std::size_t>(way[j0]);
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  result.row_to_col.assign(n, -1);
  for (std::size_t j = 1; j <= n; ++j) {
    if (p[j] > 0) result.row_to_col[static_cast<std::size_t>(p[j]) - 1] = static_cast<int>(j) - 1;
  }
  for (std::size_t i = 0; i < n; ++i) {
    result.total += cost[i][static_cast<std::size_t>(result.row_to_col[i])];
  }
  return result;
}

}  // namespace tgospa
