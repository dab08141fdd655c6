#include "tgospa/trajectory.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace tgospa {

Trajectory Trajectory::from_points(std::vector<std::pair<int, BoundingBox>> points) {
  std::sort(points.begin(), points.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  Trajectory t;
  for (const auto& [k, box] : points) {
    if (k < 0) throw std::invalid_argument("Trajectory: negative time step");
    if (!t.segments_.empty()) {
      Segment& last = t.segments_.back();
      if (k == last.end()) {
        throw std::invalid_argument("Trajectory: duplicate instance at step " +
                                    std::to_string(k));
      }
      if (k == last.end() + 1) {
        last.boxes.push_back(box);
        continue;
      }
    }
    t.segments_.push_back(Segment{k, {box}});
  }
  return t;
}

std::optional<BoundingBox> Trajectory::at(int k) const {
  for (const Segment& s : segments_) {
    if (k < s.start) break;
    if (k <= s.end()) return s.boxes[static_cast<std::size_t>(k - s.start)];
  }
  return std::nullopt;
}

int Trajectory::first_time() const {
  if (segments_.empty()) throw std::logic_error("Trajectory::first_time: empty trajectory");
  return segments_.front().start;
}

int Trajectory::last_time() const {
  if (segments_.empty()) throw std::logic_error("Trajectory::last_time: empty trajectory");
  return segments_.back().end();
}

int Trajectory::instance_count() const {
  int n = 0;
  for (const Segment& s : segments_) n += static_cast<int>(s.boxes.size());
  return n;
}

std::vector<std::pair<int, BoundingBox>> Trajectory::points() const {
  std::vector<std::pair<int, BoundingBox>> out;
  for (const Segment& s : segments_) {
    for (std::size_t i = 0; i < s.boxes.size(); ++i) {
      out.emplace_back(s.start + static_cast<int>(i), s.boxes[i]);
    }
  }
  return out;
}

TrajectorySet::TrajectorySet(std::vector<Trajectory> trajectories, int horizon)
    : trajectories_(std::move(trajectories)), horizon_(horizon) {
  if (horizon < 0) throw std::invalid_argument("TrajectorySet: horizon must be >= 0");
  for (const Trajectory& t : trajectories_) {
    if (t.empty()) continue;
    if (t.first_time() < 0 || t.last_time() > horizon) {
      throw std::invalid_argument("TrajectorySet: instance outside [0, K]");
    }
  }
}

std::vector<std::pair<int, BoundingBox>> TrajectorySet::at_step(int k) const {
  std::vector<std::pair<int, BoundingBox>> out;
  for (std::size_t i = 0; i < trajectories_.size(); ++i) {
    if (auto box = trajectories_[i].at(k)) out.emplace_back(static_cast<int>(i) + 1, *box);
  }
  return out;
}

int TrajectorySet::count_at(int k) const {
  int n = 0;
  for (const Trajectory& t : trajectories_) n += t.present(k) ? 1 : 0;
  return n;
}

int TrajectorySet::instance_count() const {
  int n = 0;
  for (const Trajectory& t : trajectories_) n += t.instance_count();
  return n;
}

AssignmentMatrix::AssignmentMatrix(std::size_t n_rows, int horizon)
    : rows_(n_rows), horizon_(horizon) {
  if (horizon < 0) throw std::invalid_argument("AssignmentMatrix: horizon must be >= 0");
  entries_.assign(n_rows * static_cast<std::size_t>(horizon + 1), 0);
}

AssignmentMatrix AssignmentMatrix::from_columns(const std::vector<std::vector<int>>& columns) {
  if (columns.empty()) throw std::invalid_argument("AssignmentMatrix: no columns");
  const std::size_t n_rows = columns.front().size();
  AssignmentMatrix m(n_rows, static_cast<int>(columns.size()) - 1);
  for (std::size_t k = 0; k < columns.size(); ++k) {
    if (columns[k].size() != n_rows) {
      throw std::invalid_argument("AssignmentMatrix: ragged columns");
    }
    rho(columns[k]);  // validates injectivity
    for (std::size_t i = 0; i < n_rows; ++i) m.set(i, static_cast<int>(k), columns[k][i]);
  }
  return m;
}

std::vector<int> AssignmentMatrix::column(int k) const {
  std::vector<int> col(rows_);
  for (std::size_t i = 0; i < rows_; ++i) col[i] = at(i, k);
  return col;
}

std::vector<std::pair<int, int>> rho(const std::vector<int>& column) {
  std::vector<std::pair<int, int>> pairs;
  std::unordered_set<int> seen;
  for (std::size_t i = 0; i < column.size(); ++i) {
    const int j = column[i];
    if (j < 0) throw std::invalid_argument("assignment column: negative index");
    if (j == 0) continue;
    if (!seen.insert(j).second) {
      throw std::invalid_argument("assignment column: estimate assigned twice");
    }
    pairs.emplace_back(static_cast<int>(i) + 1, j);
  }
  return pairs;
}

std::vector<std::pair<int, int>> theta_k(const TrajectorySet& ground_truth,
                                         const TrajectorySet& estimates,
                                         const std::vector<int>& column, int k, double cutoff,
                                         const BoxDistance& distance) {
  std::vector<std::pair<int, int>> out;
  for (const auto& [i, j] : rho(column)) {
    const auto x = ground_truth[static_cast<std::size_t>(i - 1)].at(k);
    const auto y = estimates[static_cast<std::size_t>(j - 1)].at(k);
    if (x && y && distance(*x, *y) < cutoff) out.emplace_back(i, j);
  }
  return out;
}

}  // namespace tgospa
