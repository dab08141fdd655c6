#include "tgospa/paramselect.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "tgospa/parallel.hpp"
#include "tgospa/tgospa.hpp"

namespace tgospa {

double gamma_from_g1(double c, double p, double g1) {
  if (!(c > 0.0) || !(p >= 1.0)) throw std::invalid_argument("gamma_from_g1: need c > 0, p >= 1");
  if (!(g1 > 0.0) || !(g1 < c)) {
    throw std::invalid_argument("gamma_from_g1: g1 must lie in (0, c)");
  }
  return std::pow(0.5 * (std::pow(c, p) - std::pow(g1, p)), 1.0 / p);
}

double g1_from_gamma(double c, double p, double gamma) {
  if (!(c > 0.0) || !(p >= 1.0)) throw std::invalid_argument("g1_from_gamma: need c > 0, p >= 1");
  const double limit = c / std::pow(2.0, 1.0 / p);
  if (!(gamma > 0.0) || gamma > limit) {
    throw std::invalid_argument("g1_from_gamma: no g1 exists for gamma outside (0, c/2^(1/p)]");
  }
  const double inner = std::pow(c, p) - 2.0 * std::pow(gamma, p);
  return inner <= 0.0 ? 0.0 : std::pow(inner, 1.0 / p);
}

double gamma_from_n(double c, double p, int n) {
  if (!(c > 0.0) || !(p >= 1.0) || n < 1) {
    throw std::invalid_argument("gamma_from_n: need c > 0, p >= 1, n >= 1");
  }
  return std::pow(static_cast<double>(n), 1.0 / p) * c;
}

double h_threshold(double c, double p, int n, int m) {
  if (!(c > 0.0) || !(p >= 1.0) || n < 1 || m < 0) {
    throw std::invalid_argument("h_threshold: need c > 0, p >= 1, n >= 1, m >= 0");
  }
  if (m == 0) return 0.0;
  return std::pow(static_cast<double>(m) / static_cast<double>(n + m), 1.0 / p) * c;
}

double p_from_a_c(double c, double a) {
  if (!(c > 0.0)) throw std::invalid_argument("p_from_a_c: need c > 0");
  if (!(a >= 0.5 * c) || !(a < c)) {
    throw std::invalid_argument("p_from_a_c: a must lie in [c/2, c)");
  }
  return std::log(2.0) / (std::log(c) - std::log(a));
}

std::vector<double> collect_assignment_distances(const TrajectorySet& ground_truth,
                                                 const TrajectorySet& estimates, double c_max,
                                                 const BoxDistance& d, int threads) {
  if (!(c_max > 0.0)) throw std::invalid_argument("collect_assignment_distances: c_max must be > 0");
  if (ground_truth.horizon() != estimates.horizon()) {
    throw std::invalid_argument("collect_assignment_distances: mismatched horizons");
  }
  const std::size_t n_steps = static_cast<std::size_t>(ground_truth.horizon()) + 1;
  std::vector<std::vector<double>> per_step(n_steps);
  parallel_for(n_steps, threads, [&](std::size_t ks) {
    const int k = static_cast<int>(ks);
    std::vector<BoundingBox> xs, ys;
    for (const auto& [i, box] : ground_truth.at_step(k)) xs.push_back(box);
    for (const auto& [j, box] : estimates.at_step(k)) ys.push_back(box);
    const auto step = gospa_step(xs, ys, 2.0, c_max, d);
    for (const auto& [xi, yj] : step.matches) {
      per_step[ks].push_back(d(xs[static_cast<std::size_t>(xi)], ys[static_cast<std::size_t>(yj)]));
    }
  });
  std::vector<double> out;
  for (const auto& v : per_step) out.insert(out.end(), v.begin(), v.end());
  return out;
}

GuidelineHistogram guideline_histogram(const std::vector<double>& samples, double bin_width,
                                       double range_max) {
  if (!(bin_width > 0.0)) throw std::invalid_argument("guideline_histogram: bin_width must be > 0");
  double top = range_max;
  if (top <= 0.0) {
    top = 0.0;
    for (double s : samples) top = std::max(top, s);
  }
  const std::size_t n_bins =
      top > 0.0 ? static_cast<std::size_t>(std::ceil(top / bin_width - 1e-12)) : 0;

  GuidelineHistogram h;
  h.bin_width = bin_width;
  h.bin_centers.resize(n_bins);
  h.diff_n.assign(n_bins, 0);
  h.diff_l.assign(n_bins, 0.0);
  for (std::size_t b = 0; b < n_bins; ++b) {
    h.bin_centers[b] = (static_cast<double>(b) + 0.5) * bin_width;
  }
  for (double s : samples) {
    if (s < 0.0) throw std::invalid_argument("guideline_histogram: negative sample");
    auto b = static_cast<std::size_t>(s / bin_width);
    if (b >= n_bins) b = n_bins == 0 ? 0 : n_bins - 1;  // clamp boundary hits
    if (n_bins == 0) continue;
    ++h.diff_n[b];
  }
  for (std::size_t b = 0; b < n_bins; ++b) {
    h.diff_l[b] = static_cast<double>(h.diff_n[b]) * h.bin_centers[b] * h.bin_centers[b];
  }
  return h;
}

std::string GuidelineHistogram::to_csv() const {
  std::string out = "bin_center,diff_N,diff_L\n";
  char line[96];
  for (std::size_t b = 0; b < bin_centers.size(); ++b) {
    std::snprintf(line, sizeof(line), "%.6g,%lld,%.6g\n", bin_centers[b], diff_n[b], diff_l[b]);
    out += line;
  }
  return out;
}

}  // namespace tgospa
