#include "tgospa/hota.hpp"

#include <cmath>
#include <stdexcept>

#include "tgospa/hungarian.hpp"
#include "tgospa/parallel.hpp"

namespace tgospa {
namespace {

struct Frame {
  std::vector<int> x_rows;     // 1-based trajectory indices present at this step
  std::vector<int> y_cols;
  std::vector<double> sim;     // row-major x_rows.size() x y_cols.size()
};

struct Context {
  const TrajectorySet* gt = nullptr;
  const TrajectorySet* est = nullptr;
  std::vector<Frame> frames;
  std::vector<int> x_count;  // instances per ground-truth trajectory
  std::vector<int> y_count;
  long long total_x = 0;
  long long total_y = 0;
};

Context build_context(const TrajectorySet& gt, const TrajectorySet& est,
                      const SimilarityFn& similarity) {
  Context ctx;
  ctx.gt = &gt;
  ctx.est = &est;
  const int K = gt.horizon();
  ctx.frames.resize(static_cast<std::size_t>(K) + 1);
  for (int k = 0; k <= K; ++k) {
    Frame& f = ctx.frames[static_cast<std::size_t>(k)];
    std::vector<BoundingBox> xs, ys;
    for (const auto& [i, box] : gt.at_step(k)) {
      f.x_rows.push_back(i);
      xs.push_back(box);
    }
    for (const auto& [j, box] : est.at_step(k)) {
      f.y_cols.push_back(j);
      ys.push_back(box);
    }
    f.sim.resize(xs.size() * ys.size());
    for (std::size_t a = 0; a < xs.size(); ++a) {
      for (std::size_t b = 0; b < ys.size(); ++b) {
        const double s = similarity(xs[a], ys[b]);
        if (!(s >= 0.0 && s <= 1.0)) {
          throw std::invalid_argument("hota: similarity must lie in [0, 1]");
        }
        f.sim[a * ys.size() + b] = s;
      }
    }
  }
  ctx.x_count.resize(gt.size());
  ctx.y_count.resize(est.size());
  for (std::size_t i = 0; i < gt.size(); ++i) {
    ctx.x_count[i] = gt[i].instance_count();
    ctx.total_x += ctx.x_count[i];
  }
  for (std::size_t j = 0; j < est.size(); ++j) {
    ctx.y_count[j] = est[j].instance_count();
    ctx.total_y += ctx.y_count[j];
  }
  return ctx;
}

double evaluate_alpha(const Context& ctx, double alpha, AssignmentMatrix* matching_out) {
  const std::size_t nx = ctx.gt->size();
  const std::size_t ny = ctx.est->size();

  // Pair potential: steps where both exist with similarity above the
  // threshold, folded into the trajectory-pair Jaccard.
  std::vector<long long> potential(nx * ny, 0);
  for (const Frame& f : ctx.frames) {
    const std::size_t m = f.y_cols.size();
    for (std::size_t a = 0; a < f.x_rows.size(); ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        if (f.sim[a * m + b] > alpha) {
          ++potential[static_cast<std::size_t>(f.x_rows[a] - 1) * ny +
                      static_cast<std::size_t>(f.y_cols[b] - 1)];
        }
      }
    }
  }
  std::vector<double> a_max(nx * ny, 0.0);
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t j = 0; j < ny; ++j) {
      const long long t = potential[i * ny + j];
      if (t > 0) {
        a_max[i * ny + j] = static_cast<double>(t) /
                            static_cast<double>(ctx.x_count[i] + ctx.y_count[j] - t);
      }
    }
  }

  // Per-frame matchings: maximize match count, then summed potential
  // Jaccard, then summed similarity, as strict tiers.
  std::vector<long long> tpa(nx * ny, 0);
  long long tp = 0;
  AssignmentMatrix matching(nx, ctx.gt->horizon());
  for (std::size_t k = 0; k < ctx.frames.size(); ++k) {
    const Frame& f = ctx.frames[k];
    const std::size_t n = f.x_rows.size();
    const std::size_t m = f.y_cols.size();
    if (n == 0 || m == 0) continue;
    const std::size_t dim = n + m;
    std::vector<std::vector<LexCost<3>>> cost(dim, std::vector<LexCost<3>>(dim));
    for (std::size_t a = 0; a < n; ++a) {
      const std::size_t i = static_cast<std::size_t>(f.x_rows[a] - 1);
      for (std::size_t b = 0; b < m; ++b) {
        const std::size_t j = static_cast<std::size_t>(f.y_cols[b] - 1);
        const double s = f.sim[a * m + b];
        if (s > alpha) cost[a][b] = LexCost<3>{{-1.0, -a_max[i * ny + j], -s}};
      }
    }
    const auto solution = solve_assignment(cost);
    for (std::size_t a = 0; a < n; ++a) {
      const std::size_t b = static_cast<std::size_t>(solution.row_to_col[a]);
      if (b >= m || !(f.sim[a * m + b] > alpha)) continue;
      const std::size_t i = static_cast<std::size_t>(f.x_rows[a] - 1);
      const std::size_t j = static_cast<std::size_t>(f.y_cols[b] - 1);
      ++tpa[i * ny + j];
      ++tp;
      matching.set(i, static_cast<int>(k), static_cast<int>(j) + 1);
    }
  }

  const long long fn = ctx.total_x - tp;
  const long long fp = ctx.total_y - tp;
  if (matching_out) *matching_out = std::move(matching);
  if (tp + fn + fp == 0) return 1.0;  // two empty sets

  double numerator = 0.0;
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t j = 0; j < ny; ++j) {
      const long long t = tpa[i * ny + j];
      if (t > 0) {
        numerator += static_cast<double>(t) * static_cast<double>(t) /
                     static_cast<double>(ctx.x_count[i] + ctx.y_count[j] - t);
      }
    }
  }
  return std::sqrt(numerator / static_cast<double>(tp + fn + fp));
}

}  // namespace

SimilarityFn default_similarity() {
  return [](const BoundingBox& a, const BoundingBox& b) { return iou(a, b); };
}

double hota_alpha(const TrajectorySet& ground_truth, const TrajectorySet& estimates, double alpha,
                  const SimilarityFn& similarity) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("hota_alpha: alpha must lie in (0, 1)");
  }
  if (ground_truth.horizon() != estimates.horizon()) {
    throw std::invalid_argument("hota_alpha: mismatched horizons");
  }
  const Context ctx =
      build_context(ground_truth, estimates, similarity ? similarity : default_similarity());
  return evaluate_alpha(ctx, alpha, nullptr);
}

HotaResult hota(const TrajectorySet& ground_truth, const TrajectorySet& estimates,
                const SimilarityFn& similarity, int threads) {
  if (ground_truth.horizon() != estimates.horizon()) {
    throw std::invalid_argument("hota: mismatched horizons");
  }
  const Context ctx =
      build_context(ground_truth, estimates, similarity ? similarity : default_similarity());
  HotaResult result;
  result.per_alpha_assignments.assign(19, AssignmentMatrix());
  parallel_for(19, threads, [&](std::size_t l) {
    const double alpha = 0.05 * static_cast<double>(l + 1);
    result.per_alpha[l] = evaluate_alpha(ctx, alpha, &result.per_alpha_assignments[l]);
  });
  double sum = 0.0;
  for (double v : result.per_alpha) sum += v;
  result.overall = sum / 19.0;
  return result;
}

double hota_dissimilarity(const TrajectorySet& ground_truth, const TrajectorySet& estimates,
                          const SimilarityFn& similarity) {
  return 1.0 - hota(ground_truth, estimates, similarity).overall;
}

}  // namespace tgospa
