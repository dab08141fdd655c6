#pragma once

#include <array>
#include <functional>
#include <vector>

#include "tgospa/box.hpp"
#include "tgospa/trajectory.hpp"

namespace tgospa {

/// Symmetric similarity score in [0, 1] between object instances.
using SimilarityFn = std::function<double(const BoundingBox&, const BoundingBox&)>;

/// IoU, the default similarity for the HOTA score.
SimilarityFn default_similarity();

struct HotaResult {
  double overall = 0.0;                 // mean of per_alpha
  std::array<double, 19> per_alpha{};   // thresholds 0.05, 0.10, ..., 0.95
  std::vector<AssignmentMatrix> per_alpha_assignments;  // per-frame matchings, for diagnostics
};

/// HOTA at a single localization threshold: per-frame matching maximizing
/// (match count, summed pair Jaccard potential, summed similarity) in exact
/// lexicographic order, then sqrt of the association-weighted TP fraction.
double hota_alpha(const TrajectorySet& ground_truth, const TrajectorySet& estimates, double alpha,
                  const SimilarityFn& similarity = {});

/// HOTA averaged over the 19 thresholds. Not a mathematical metric: both
/// HOTA and 1 - HOTA violate the triangle inequality.
HotaResult hota(const TrajectorySet& ground_truth, const TrajectorySet& estimates,
                const SimilarityFn& similarity = {}, int threads = 0);

/// 1 - HOTA, the dissimilarity reading of the score.
double hota_dissimilarity(const TrajectorySet& ground_truth, const TrajectorySet& estimates,
                          const SimilarityFn& similarity = {});

}  // namespace tgospa
