#pragma once

#include <string>
#include <vector>

#include "tgospa/box.hpp"
#include "tgospa/trajectory.hpp"

namespace tgospa {

/// Switching penalty from the short-term threshold distance g1, for a
/// one-step interim track swap: gamma = ((c^p - g1^p) / 2)^(1/p).
/// Requires 0 < g1 < c; the result lies in (0, c / 2^(1/p)].
double gamma_from_g1(double c, double p, double g1);

/// Inverse of gamma_from_g1: g1 = (c^p - 2 gamma^p)^(1/p).
/// Requires 0 < gamma <= c / 2^(1/p); throws when no g1 exists.
double g1_from_gamma(double c, double p, double gamma);

/// Switching penalty that ignores track changes lasting n steps or fewer:
/// gamma = n^(1/p) * c.
double gamma_from_n(double c, double p, int n);

/// p-average localization threshold below which a track change lasting
/// n + m steps counts as a switch: h = (m / (n + m))^(1/p) * c. m == 0
/// yields 0.
double h_threshold(double c, double p, int n, int m);

/// Exponent from the cut-off c and the maximum admissible error a, so that
/// a = c / 2^(1/p). Requires c/2 <= a < c; a == c/2 maps to p = 1.
double p_from_a_c(double c, double a);

/// Matched base distances from independent per-step optimal assignments
/// with exponent 2 and cut-off c_max. All emitted values are < c_max;
/// pool across algorithms and videos before binning.
std::vector<double> collect_assignment_distances(const TrajectorySet& ground_truth,
                                                 const TrajectorySet& estimates, double c_max,
                                                 const BoxDistance& d, int threads = 0);

/// Histogram of sample distances plus the squared-center weighting, the
/// two guideline curves for picking the cut-off by hand.
struct GuidelineHistogram {
  double bin_width = 0.0;
  std::vector<double> bin_centers;
  std::vector<long long> diff_n;  // counts per bin
  std::vector<double> diff_l;     // counts weighted by bin_center^2

  std::string to_csv() const;  // bin_center,diff_N,diff_L
};

/// Bins samples over [0, range_max]. range_max <= 0 derives the range from
/// the largest sample.
GuidelineHistogram guideline_histogram(const std::vector<double>& samples, double bin_width,
                                       double range_max = 0.0);

}  // namespace tgospa
