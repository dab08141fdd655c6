#include "tgospa/motio.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace tgospa {
namespace {

double parse_number(const std::string& token, std::size_t line_no, const char* field) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(token, &pos);
    while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos]))) ++pos;
    if (pos != token.size() || !std::isfinite(v)) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line_no) + ": invalid " + field + " '" + token +
                     "'");
  }
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string token;
  while (std::getline(ss, token, ',')) fields.push_back(token);
  return fields;
}

std::string format_double(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

}  // namespace

std::vector<MotRecord> parse_mot(std::string_view content) {
  std::vector<MotRecord> records;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    const std::size_t eol = content.find('\n', pos);
    std::string line(content.substr(pos, eol == std::string_view::npos ? content.size() - pos
                                                                       : eol - pos));
    pos = eol == std::string_view::npos ? content.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;

    const auto fields = split_csv(line);
    if (fields.size() < 6) {
      throw ParseError("line " + std::to_string(line_no) + ": expected at least 6 fields, got " +
                       std::to_string(fields.size()));
    }
    MotRecord r;
    r.frame = static_cast<int>(parse_number(fields[0], line_no, "frame"));
    if (r.frame < 1) {
      throw ParseError("line " + std::to_string(line_no) + ": frame must be >= 1");
    }
    r.id = static_cast<int>(parse_number(fields[1], line_no, "id"));
    r.left = parse_number(fields[2], line_no, "left");
    r.top = parse_number(fields[3], line_no, "top");
    r.width = parse_number(fields[4], line_no, "width");
    r.height = parse_number(fields[5], line_no, "height");
    if (fields.size() > 6) r.conf = parse_number(fields[6], line_no, "conf");
    if (fields.size() > 7) {
      r.object_class = static_cast<int>(parse_number(fields[7], line_no, "class"));
    }
    if (fields.size() > 8) r.visibility = parse_number(fields[8], line_no, "visibility");
    records.push_back(r);
  }
  return records;
}

std::vector<MotRecord> parse_mot_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_mot(ss.str());
}

TrajectorySet to_trajectories(const std::vector<MotRecord>& records, const MotFilter& filter) {
  if (filter.frame_begin > filter.frame_end) {
    throw std::invalid_argument("to_trajectories: empty window");
  }
  const int base = filter.time_rebase ? filter.frame_begin : 0;
  const int horizon = filter.frame_end - base;

  std::map<int, std::vector<std::pair<int, BoundingBox>>> by_id;
  std::vector<Trajectory> detections;
  for (const MotRecord& r : records) {
    if (r.frame < filter.frame_begin || r.frame > filter.frame_end) continue;
    if (r.id >= 0 && filter.keep_ids && !filter.keep_ids->count(r.id)) continue;
    if (filter.min_visibility && r.visibility < *filter.min_visibility) continue;
    if (!(r.width > 0.0) || !(r.height > 0.0)) continue;  // degenerate annotation
    const int step = r.frame - base;
    const BoundingBox box(r.left, r.top, r.width, r.height);
    if (r.id < 0) {
      detections.push_back(Trajectory::from_points({{step, box}}));
    } else {
      by_id[r.id].emplace_back(step, box);
    }
  }

  std::vector<Trajectory> trajectories;
  trajectories.reserve(by_id.size() + detections.size());
  for (auto& [id, points] : by_id) {
    try {
      trajectories.push_back(Trajectory::from_points(std::move(points)));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("to_trajectories: duplicate (frame, id) pair for id " +
                                  std::to_string(id));
    }
  }
  for (auto& t : detections) trajectories.push_back(std::move(t));
  return TrajectorySet(std::move(trajectories), horizon);
}

ReportFormat report_format_from_string(std::string_view name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "table") return ReportFormat::Table;
  throw std::invalid_argument("unknown report format: " + std::string(name));
}

void assign_ranks(std::vector<EvalRow>& rows, bool ascending) {
  std::vector<std::size_t> order(rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return ascending ? rows[a].total < rows[b].total : rows[a].total > rows[b].total;
  });
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    if (pos > 0 && std::abs(rows[order[pos]].total - rows[order[pos - 1]].total) <= 1e-9) {
      rows[order[pos]].rank = rows[order[pos - 1]].rank;
    } else {
      rows[order[pos]].rank = static_cast<int>(pos) + 1;
    }
  }
}

std::string write_report(const std::vector<EvalRow>& rows, const ReportMeta& meta,
                         ReportFormat format) {
  if (format == ReportFormat::Json) {
    nlohmann::ordered_json doc;
    doc["command"] = meta.command;
    doc["parameters"] = {{"metric", meta.metric},
                         {"solver", meta.solver},
                         {"p", meta.p},
                         {"c", meta.c},
                         {"gamma", meta.gamma}};
    auto& results = doc["results"] = nlohmann::ordered_json::array();
    for (const EvalRow& r : rows) {
      nlohmann::ordered_json row;
      row["tracker"] = r.tracker;
      row["total"] = r.total;
      row["loc_cost"] = r.loc_cost;
      row["miss_cost"] = r.miss_cost;
      row["false_cost"] = r.false_cost;
      row["switch_cost"] = r.switch_cost;
      row["n_proper"] = r.n_proper;
      row["n_missed"] = r.n_missed;
      row["n_false"] = r.n_false;
      row["n_switches"] = r.n_switches;
      row["p_avg_loc"] = r.p_avg_loc;
      row["rank"] = r.rank;
      row["soft"] = r.soft;
      results.push_back(std::move(row));
    }
    return doc.dump(2) + "\n";
  }

  if (format == ReportFormat::Csv) {
    std::string out =
        "tracker,total,loc_cost,miss_cost,false_cost,switch_cost,"
        "n_proper,n_missed,n_false,n_switches,p_avg_loc,rank,soft\n";
    for (const EvalRow& r : rows) {
      out += r.tracker + ',' + format_double(r.total) + ',' + format_double(r.loc_cost) + ',' +
             format_double(r.miss_cost) + ',' + format_double(r.false_cost) + ',' +
             format_double(r.switch_cost) + ',' + std::to_string(r.n_proper) + ',' +
             std::to_string(r.n_missed) + ',' + std::to_string(r.n_false) + ',' +
             format_double(r.n_switches) + ',' + format_double(r.p_avg_loc) + ',' +
             std::to_string(r.rank) + ',' + (r.soft ? "1" : "0") + '\n';
    }
    return out;
  }

  // Aligned text table.
  const std::vector<std::string> header = {"tracker", "total",    "loc",        "miss",
                                           "false",   "switch",   "n_proper",   "n_missed",
                                           "n_false", "n_switch", "p_avg_loc",  "rank"};
  std::vector<std::vector<std::string>> body;
  for (const EvalRow& r : rows) {
    body.push_back({r.tracker + (r.soft ? " (soft)" : ""), format_double(r.total),
                    format_double(r.loc_cost), format_double(r.miss_cost),
                    format_double(r.false_cost), format_double(r.switch_cost),
                    std::to_string(r.n_proper), std::to_string(r.n_missed),
                    std::to_string(r.n_false), format_double(r.n_switches),
                    format_double(r.p_avg_loc), std::to_string(r.rank)});
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (const auto& row : body) width[c] = std::max(width[c], row[c].size());
  }
  std::string out = "# metric=" + meta.metric + " solver=" + meta.solver +
                    " p=" + format_double(meta.p) + " c=" + format_double(meta.c) +
                    " gamma=" + format_double(meta.gamma) + "\n";
  const auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out += row[c];
      if (c + 1 < row.size()) out.append(width[c] - row[c].size() + 2, ' ');
    }
    out += '\n';
  };
  emit(header);
  for (const auto& row : body) emit(row);
  return out;
}

}  // namespace tgospa
