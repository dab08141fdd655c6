#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tgospa/box.hpp"

namespace tgospa {

/// One object trajectory: segments of consecutive object instances indexed
/// by integer time step, with gaps allowed between segments. Segments are
/// kept strictly ordered and non-adjacent (adjacent input runs are merged),
/// and at most one instance may exist per time step.
class Trajectory {
 public:
  struct Segment {
    int start = 0;
    std::vector<BoundingBox> boxes;
    int end() const { return start + static_cast<int>(boxes.size()) - 1; }
  };

  Trajectory() = default;

  /// Builds a trajectory from (time step, box) pairs in any order.
  /// Throws if a time step is negative or appears twice.
  static Trajectory from_points(std::vector<std::pair<int, BoundingBox>> points);

  /// The instance present at step k, or nullopt during gaps / outside the
  /// trajectory's lifetime.
  std::optional<BoundingBox> at(int k) const;

  bool present(int k) const { return at(k).has_value(); }
  bool empty() const { return segments_.empty(); }
  int first_time() const;
  int last_time() const;
  int instance_count() const;

  const std::vector<Segment>& segments() const { return segments_; }

  /// All (time step, box) pairs in time order.
  std::vector<std::pair<int, BoundingBox>> points() const;

 private:
  std::vector<Segment> segments_;
};

/// An ordered collection of trajectories over the time window [0, K].
/// List order is stable: assignment indices refer to list positions.
class TrajectorySet {
 public:
  TrajectorySet() = default;

  /// Throws if any instance lies outside [0, horizon] or horizon < 0.
  TrajectorySet(std::vector<Trajectory> trajectories, int horizon);

  int horizon() const { return horizon_; }
  std::size_t size() const { return trajectories_.size(); }
  bool empty() const { return trajectories_.empty(); }
  const Trajectory& operator[](std::size_t i) const { return trajectories_[i]; }
  const std::vector<Trajectory>& trajectories() const { return trajectories_; }

  /// Instances present at step k, as (1-based trajectory index, box) pairs.
  std::vector<std::pair<int, BoundingBox>> at_step(int k) const;

  /// Number of instances present at step k.
  int count_at(int k) const;

  /// Total number of object instances across all trajectories.
  int instance_count() const;

 private:
  std::vector<Trajectory> trajectories_;
  int horizon_ = 0;
};

/// Per-step trajectory-to-trajectory assignment: entry (i, k) holds the
/// 1-based index of the estimated trajectory assigned to ground-truth
/// trajectory i+1 at step k, or 0 when unassigned. Nonzero values within a
/// column must be distinct (each estimate is taken by at most one row).
class AssignmentMatrix {
 public:
  AssignmentMatrix() = default;
  AssignmentMatrix(std::size_t n_rows, int horizon);

  /// Throws if a column assigns the same nonzero index twice.
  static AssignmentMatrix from_columns(const std::vector<std::vector<int>>& columns);

  std::size_t rows() const { return rows_; }
  int horizon() const { return horizon_; }
  int at(std::size_t i, int k) const { return entries_[i * (horizon_ + 1) + k]; }
  void set(std::size_t i, int k, int value) { entries_[i * (horizon_ + 1) + k] = value; }

  std::vector<int> column(int k) const;

  friend bool operator==(const AssignmentMatrix&, const AssignmentMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  int horizon_ = -1;
  std::vector<int> entries_;
};

/// The assigned pairs encoded by one assignment column: {(i, pi_i) : pi_i > 0}
/// with 1-based indices on both sides. Pairs may involve steps where neither
/// trajectory has an instance. Throws if the column repeats a nonzero value.
std::vector<std::pair<int, int>> rho(const std::vector<int>& column);

/// The subset of rho(column) whose pair of instances both exist at step k
/// and lie strictly closer than the cut-off under the given metric. These
/// are the properly estimated pairs at step k.
std::vector<std::pair<int, int>> theta_k(const TrajectorySet& ground_truth,
                                         const TrajectorySet& estimates,
                                         const std::vector<int>& column, int k, double cutoff,
                                         const BoxDistance& distance);

}  // namespace tgospa
