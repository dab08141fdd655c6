#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tgospa/trajectory.hpp"

namespace tgospa {

/// One line of a MOTChallenge text file:
/// frame,id,left,top,width,height[,conf[,class[,visibility]]]
struct MotRecord {
  int frame = 1;   // 1-based
  int id = -1;     // -1 marks unlinked detections
  double left = 0;
  double top = 0;
  double width = 0;
  double height = 0;
  double conf = 1.0;
  int object_class = 1;
  double visibility = 1.0;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses MOTChallenge CSV content. Missing trailing fields default to
/// conf = 1, class = 1, visibility = 1; extra fields are ignored. An empty
/// file is a valid empty result. Throws ParseError with the line number on
/// a malformed mandatory field.
std::vector<MotRecord> parse_mot(std::string_view content);

/// Reads and parses a file; throws std::ios_base::failure when unreadable.
std::vector<MotRecord> parse_mot_file(const std::string& path);

struct MotFilter {
  int frame_begin = 1;  // window in file frame numbers, inclusive
  int frame_end = 1;
  std::optional<std::set<int>> keep_ids;
  std::optional<double> min_visibility;
  bool time_rebase = true;  // map frames to steps 0..K by subtracting frame_begin
};

/// Groups records into a trajectory set. Records outside the window, with
/// filtered ids, below the visibility threshold, or with non-positive box
/// dimensions are dropped. id >= 0 records group by id (ascending order);
/// every id = -1 record becomes its own single-instance trajectory, in file
/// order. A duplicate (frame, id) pair with id >= 0 is an error.
TrajectorySet to_trajectories(const std::vector<MotRecord>& records, const MotFilter& filter);

/// One result row of an evaluation report, mirroring the metric value, its
/// decomposition and counts.
struct EvalRow {
  std::string tracker;
  double total = 0;
  double loc_cost = 0;
  double miss_cost = 0;
  double false_cost = 0;
  double switch_cost = 0;
  long long n_proper = 0;
  long long n_missed = 0;
  long long n_false = 0;
  double n_switches = 0;
  double p_avg_loc = 0;
  bool soft = false;  // LP relaxation returned a fractional optimum
  int rank = 0;
};

struct ReportMeta {
  std::string command;
  std::string metric;
  std::string solver;
  double p = 0;
  double c = 0;
  double gamma = 0;
};

enum class ReportFormat { Json, Csv, Table };

ReportFormat report_format_from_string(std::string_view name);

/// Ranks rows in place: rank 1 is the smallest total (largest when
/// ascending is false); totals within 1e-9 share a rank.
void assign_ranks(std::vector<EvalRow>& rows, bool ascending = true);

/// Serializes rows (ranked, original order preserved) with a fixed field
/// order; identical inputs produce byte-identical output.
std::string write_report(const std::vector<EvalRow>& rows, const ReportMeta& meta,
                         ReportFormat format);

}  // namespace tgospa
