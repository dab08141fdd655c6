#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tgospa/hota.hpp"
#include "tgospa/motio.hpp"
#include "tgospa/parallel.hpp"
#include "tgospa/paramselect.hpp"
#include "tgospa/tgospa.hpp"

namespace {

using namespace tgospa;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitSolver = 3;

std::string format_double(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

struct InputOptions {
  std::string gt_path;
  std::vector<std::string> tracker_paths;
  std::string window;        // "k0:kF"
  std::string ids;           // "2,6"
  double min_visibility = -1.0;
  bool no_rebase = false;
};

void add_input_flags(CLI::App* cmd, InputOptions* in) {
  cmd->add_option("--gt", in->gt_path, "ground-truth MOT file")->required();
  cmd->add_option("--trackers", in->tracker_paths, "tracker output MOT files")
      ->required()
      ->expected(-1);
  cmd->add_option("--window", in->window, "frame window k0:kF (default: span of the inputs)");
  cmd->add_option("--ids", in->ids, "comma-separated ground-truth ids to keep");
  cmd->add_option("--min-vis", in->min_visibility, "drop records below this visibility");
  cmd->add_flag("--no-rebase", in->no_rebase, "keep file frame numbers as time steps");
}

struct ParamOptions {
  std::string preset;
  double p = 1.0;
  double c = 0.0;
  double gamma = 0.0;
  double g1 = 0.0;
  int n = 0;
  double a = 0.0;
  std::string metric = "iou";
  bool has_c = false, has_p = false, has_gamma = false, has_g1 = false, has_n = false,
       has_a = false;
};

void add_param_flags(CLI::App* cmd, ParamOptions* po) {
  cmd->add_option("--preset", po->preset, "detector | online | offline")
      ->check(CLI::IsMember({"detector", "online", "offline"}));
  cmd->add_option("--c", po->c, "cut-off distance")->each([po](const std::string&) {
    po->has_c = true;
  });
  cmd->add_option("--p", po->p, "exponent (>= 1)")->each([po](const std::string&) {
    po->has_p = true;
  });
  cmd->add_option("--gamma", po->gamma, "switching penalty")->each([po](const std::string&) {
    po->has_gamma = true;
  });
  cmd->add_option("--g1", po->g1, "derive gamma from the short-term threshold distance")
      ->each([po](const std::string&) { po->has_g1 = true; });
  cmd->add_option("--n", po->n, "derive gamma from the minimum switch length")
      ->each([po](const std::string&) { po->has_n = true; });
  cmd->add_option("--a", po->a, "derive p from the maximum admissible error")
      ->each([po](const std::string&) { po->has_a = true; });
  cmd->add_option("--metric", po->metric, "iou | hausdorff | wasserstein")
      ->check(CLI::IsMember({"iou", "hausdorff", "wasserstein"}));
}

TgospaParams resolve_params(const ParamOptions& po) {
  TgospaParams params;
  if (!po.preset.empty()) {
    if (po.preset == "detector") {
      params.c = 0.255;
      params.p = 1.71;
      params.gamma = 0.0;
    } else if (po.preset == "online") {
      params.c = 0.5;
      params.p = 1.8;
      params.gamma = 0.31;
    } else {  // offline
      params.c = 0.5;
      params.p = 1.0;
      params.gamma = 5.0;
    }
  } else if (!po.has_c) {
    throw std::invalid_argument("set --preset or an explicit --c");
  }
  if (po.has_c) params.c = po.c;
  if (po.has_p) params.p = po.p;
  if (po.has_a) {
    if (po.has_p) throw std::invalid_argument("--a and --p are mutually exclusive");
    params.p = p_from_a_c(params.c, po.a);
  }
  const int gamma_sources = (po.has_gamma ? 1 : 0) + (po.has_g1 ? 1 : 0) + (po.has_n ? 1 : 0);
  if (gamma_sources > 1) {
    throw std::invalid_argument("--gamma, --g1 and --n are mutually exclusive");
  }
  if (po.has_gamma) params.gamma = po.gamma;
  if (po.has_g1) params.gamma = gamma_from_g1(params.c, params.p, po.g1);
  if (po.has_n) params.gamma = gamma_from_n(params.c, params.p, po.n);
  params.base = base_metric_from_string(po.metric);
  params.validate();
  return params;
}

struct LoadedInputs {
  TrajectorySet ground_truth;
  std::vector<TrajectorySet> trackers;
  std::vector<std::string> names;
};

LoadedInputs load_inputs(const InputOptions& in) {
  const auto gt_records = parse_mot_file(in.gt_path);
  std::vector<std::vector<MotRecord>> tracker_records;
  tracker_records.reserve(in.tracker_paths.size());
  for (const auto& path : in.tracker_paths) tracker_records.push_back(parse_mot_file(path));

  MotFilter filter;
  if (!in.window.empty()) {
    const auto colon = in.window.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("--window expects k0:kF");
    filter.frame_begin = std::stoi(in.window.substr(0, colon));
    filter.frame_end = std::stoi(in.window.substr(colon + 1));
    if (filter.frame_begin > filter.frame_end) {
      throw std::invalid_argument("--window expects k0 <= kF");
    }
  } else {
    int lo = std::numeric_limits<int>::max();
    int hi = std::numeric_limits<int>::min();
    const auto scan = [&](const std::vector<MotRecord>& records) {
      for (const auto& r : records) {
        lo = std::min(lo, r.frame);
        hi = std::max(hi, r.frame);
      }
    };
    scan(gt_records);
    for (const auto& records : tracker_records) scan(records);
    if (lo > hi) {
      lo = hi = 1;  // no records anywhere: a single empty step
    }
    filter.frame_begin = lo;
    filter.frame_end = hi;
  }
  filter.time_rebase = !in.no_rebase;
  if (in.min_visibility >= 0.0) filter.min_visibility = in.min_visibility;

  MotFilter gt_filter = filter;
  if (!in.ids.empty()) {
    std::set<int> keep;
    std::stringstream ss(in.ids);
    std::string token;
    while (std::getline(ss, token, ',')) keep.insert(std::stoi(token));
    gt_filter.keep_ids = std::move(keep);
  }

  LoadedInputs loaded;
  loaded.ground_truth = to_trajectories(gt_records, gt_filter);
  for (std::size_t t = 0; t < tracker_records.size(); ++t) {
    loaded.trackers.push_back(to_trajectories(tracker_records[t], filter));
    loaded.names.push_back(std::filesystem::path(in.tracker_paths[t]).stem().string());
  }
  return loaded;
}

/// First error wins; later workers still finish.
struct JobErrors {
  std::vector<std::string> messages;
  std::vector<int> codes;

  explicit JobErrors(std::size_t n) : messages(n), codes(n, kExitOk) {}
  void capture(std::size_t idx, const std::exception& e) {
    messages[idx] = e.what();
    if (dynamic_cast<const std::ios_base::failure*>(&e)) {
      codes[idx] = kExitIo;
    } else if (dynamic_cast<const SolverLimitError*>(&e) || dynamic_cast<const SolverError*>(&e)) {
      codes[idx] = kExitSolver;
    } else {
      codes[idx] = kExitUsage;
    }
  }
  int first_error(std::string* message) const {
    for (std::size_t i = 0; i < codes.size(); ++i) {
      if (codes[i] != kExitOk) {
        *message = messages[i];
        return codes[i];
      }
    }
    return kExitOk;
  }
};

TgospaResult run_solver(const std::string& solver, const TrajectorySet& gt,
                        const TrajectorySet& est, const TgospaParams& params, long long ceiling,
                        int threads, std::string* used) {
  if (solver == "gamma-zero" || (solver == "auto" && params.gospa_regime())) {
    *used = "gamma-zero";
    return tgospa_gamma_zero(gt, est, params, threads);
  }
  if (solver == "gamma-extreme") {
    *used = "gamma-extreme";
    return tgospa_gamma_extreme(gt, est, params);
  }
  ExactOptions options;
  options.state_ceiling = ceiling;
  options.threads = threads;
  if (solver == "exact") {
    *used = "exact";
    return tgospa_exact(gt, est, params, options);
  }
  if (solver == "lp") {
    *used = "lp";
    return tgospa_lp(gt, est, params);
  }
  // auto with gamma > 0: exact when affordable, LP otherwise.
  if (exact_search_size(gt.size(), est.size(), gt.horizon()) <=
      static_cast<double>(ceiling)) {
    *used = "exact";
    return tgospa_exact(gt, est, params, options);
  }
  *used = "lp";
  return tgospa_lp(gt, est, params);
}

int cmd_evaluate(const InputOptions& in, const ParamOptions& po, const std::string& solver,
                 long long ceiling, int jobs, const std::string& format_name) {
  const TgospaParams params = resolve_params(po);
  const ReportFormat format = report_format_from_string(format_name);
  const LoadedInputs loaded = load_inputs(in);

  std::vector<EvalRow> rows(loaded.trackers.size());
  std::vector<std::string> used_solver(loaded.trackers.size());
  JobErrors errors(loaded.trackers.size());
  const int inner_threads = loaded.trackers.size() > 1 ? 1 : jobs;
  parallel_for(loaded.trackers.size(), jobs, [&](std::size_t t) {
    try {
      const TgospaResult res = run_solver(solver, loaded.ground_truth, loaded.trackers[t], params,
                                          ceiling, inner_threads, &used_solver[t]);
      EvalRow& row = rows[t];
      row.tracker = loaded.names[t];
      row.total = res.total;
      row.loc_cost = res.loc_cost;
      row.miss_cost = res.miss_cost;
      row.false_cost = res.false_cost;
      row.switch_cost = res.switch_cost;
      row.n_proper = res.n_proper;
      row.n_missed = res.n_missed;
      row.n_false = res.n_false;
      row.n_switches = res.n_switches;
      row.p_avg_loc = res.p_avg_loc;
      row.soft = !res.is_hard;
    } catch (const std::exception& e) {
      errors.capture(t, e);
    }
  });
  std::string message;
  if (const int code = errors.first_error(&message); code != kExitOk) {
    std::cerr << "error: " << message << "\n";
    return code;
  }
  for (const EvalRow& row : rows) {
    if (row.soft) {
      std::cerr << "warning: " << row.tracker
                << ": LP optimum is fractional (soft); the total is a lower bound\n";
    }
  }

  assign_ranks(rows, /*ascending=*/true);
  ReportMeta meta;
  meta.command = "evaluate";
  meta.metric = po.metric;
  meta.solver = solver;
  meta.p = params.p;
  meta.c = params.c;
  meta.gamma = params.gamma;
  std::cout << write_report(rows, meta, format);
  return kExitOk;
}

int cmd_hota(const InputOptions& in, int jobs, const std::string& format_name, bool per_alpha) {
  const ReportFormat format = report_format_from_string(format_name);
  const LoadedInputs loaded = load_inputs(in);

  std::vector<HotaResult> results(loaded.trackers.size());
  JobErrors errors(loaded.trackers.size());
  const int inner_threads = loaded.trackers.size() > 1 ? 1 : jobs;
  parallel_for(loaded.trackers.size(), jobs, [&](std::size_t t) {
    try {
      results[t] = hota(loaded.ground_truth, loaded.trackers[t], {}, inner_threads);
    } catch (const std::exception& e) {
      errors.capture(t, e);
    }
  });
  std::string message;
  if (const int code = errors.first_error(&message); code != kExitOk) {
    std::cerr << "error: " << message << "\n";
    return code;
  }

  // Rank descending: highest score first.
  std::vector<int> rank(results.size(), 0);
  {
    std::vector<std::size_t> order(results.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return results[a].overall > results[b].overall;
    });
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
      if (pos > 0 &&
          std::abs(results[order[pos]].overall - results[order[pos - 1]].overall) <= 1e-9) {
        rank[order[pos]] = rank[order[pos - 1]];
      } else {
        rank[order[pos]] = static_cast<int>(pos) + 1;
      }
    }
  }

  if (format == ReportFormat::Json) {
    nlohmann::ordered_json doc;
    doc["command"] = "hota";
    auto& out = doc["results"] = nlohmann::ordered_json::array();
    for (std::size_t t = 0; t < results.size(); ++t) {
      nlohmann::ordered_json row;
      row["tracker"] = loaded.names[t];
      row["hota"] = results[t].overall;
      row["rank"] = rank[t];
      if (per_alpha) row["per_alpha"] = results[t].per_alpha;
      out.push_back(std::move(row));
    }
    std::cout << doc.dump(2) << "\n";
  } else if (format == ReportFormat::Csv) {
    std::string header = "tracker,hota,rank";
    if (per_alpha) {
      for (int l = 1; l <= 19; ++l) header += ",alpha_" + format_double(0.05 * l);
    }
    std::cout << header << "\n";
    for (std::size_t t = 0; t < results.size(); ++t) {
      std::cout << loaded.names[t] << ',' << format_double(results[t].overall) << ','
                << rank[t];
      if (per_alpha) {
        for (double v : results[t].per_alpha) std::cout << ',' << format_double(v);
      }
      std::cout << "\n";
    }
  } else {
    std::size_t name_width = 7;
    for (const auto& n : loaded.names) name_width = std::max(name_width, n.size());
    std::cout << "tracker" << std::string(name_width - 7 + 2, ' ') << "hota      rank\n";
    for (std::size_t t = 0; t < results.size(); ++t) {
      std::string h = format_double(results[t].overall);
      std::cout << loaded.names[t] << std::string(name_width - loaded.names[t].size() + 2, ' ')
                << h << std::string(h.size() < 10 ? 10 - h.size() : 1, ' ') << rank[t] << "\n";
      if (per_alpha) {
        std::cout << "  per-alpha:";
        for (double v : results[t].per_alpha) std::cout << ' ' << format_double(v);
        std::cout << "\n";
      }
    }
  }
  return kExitOk;
}

int cmd_compare(const InputOptions& in, const ParamOptions& po, const std::string& solver,
                long long ceiling, int jobs, const std::string& format_name) {
  const TgospaParams params = resolve_params(po);
  const ReportFormat format = report_format_from_string(format_name);
  const LoadedInputs loaded = load_inputs(in);

  std::vector<double> tg_total(loaded.trackers.size()), hota_total(loaded.trackers.size());
  JobErrors errors(loaded.trackers.size());
  const int inner_threads = loaded.trackers.size() > 1 ? 1 : jobs;
  parallel_for(loaded.trackers.size(), jobs, [&](std::size_t t) {
    try {
      std::string used;
      tg_total[t] = run_solver(solver, loaded.ground_truth, loaded.trackers[t], params, ceiling,
                               inner_threads, &used)
                        .total;
      hota_total[t] = hota(loaded.ground_truth, loaded.trackers[t], {}, inner_threads).overall;
    } catch (const std::exception& e) {
      errors.capture(t, e);
    }
  });
  std::string message;
  if (const int code = errors.first_error(&message); code != kExitOk) {
    std::cerr << "error: " << message << "\n";
    return code;
  }

  const auto rank_of = [](const std::vector<double>& values, bool ascending) {
    std::vector<int> rank(values.size(), 0);
    std::vector<std::size_t> order(values.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return ascending ? values[a] < values[b] : values[a] > values[b];
    });
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
      if (pos > 0 && std::abs(values[order[pos]] - values[order[pos - 1]]) <= 1e-9) {
        rank[order[pos]] = rank[order[pos - 1]];
      } else {
        rank[order[pos]] = static_cast<int>(pos) + 1;
      }
    }
    return rank;
  };
  const auto tg_rank = rank_of(tg_total, true);
  const auto hota_rank = rank_of(hota_total, false);

  if (format == ReportFormat::Json) {
    nlohmann::ordered_json doc;
    doc["command"] = "compare";
    doc["parameters"] = {{"metric", po.metric},
                         {"p", params.p},
                         {"c", params.c},
                         {"gamma", params.gamma}};
    auto& out = doc["results"] = nlohmann::ordered_json::array();
    for (std::size_t t = 0; t < loaded.names.size(); ++t) {
      out.push_back({{"tracker", loaded.names[t]},
                     {"tgospa", tg_total[t]},
                     {"tgospa_rank", tg_rank[t]},
                     {"hota", hota_total[t]},
                     {"hota_rank", hota_rank[t]}});
    }
    std::cout << doc.dump(2) << "\n";
  } else if (format == ReportFormat::Csv) {
    std::cout << "tracker,tgospa,tgospa_rank,hota,hota_rank\n";
    for (std::size_t t = 0; t < loaded.names.size(); ++t) {
      std::cout << loaded.names[t] << ',' << format_double(tg_total[t]) << ',' << tg_rank[t]
                << ',' << format_double(hota_total[t]) << ',' << hota_rank[t] << "\n";
    }
  } else {
    std::size_t name_width = 7;
    for (const auto& n : loaded.names) name_width = std::max(name_width, n.size());
    std::printf("%-*s  %-12s %-5s %-12s %-5s\n", static_cast<int>(name_width), "tracker",
                "tgospa", "rank", "hota", "rank");
    for (std::size_t t = 0; t < loaded.names.size(); ++t) {
      std::printf("%-*s  %-12s %-5d %-12s %-5d\n", static_cast<int>(name_width),
                  loaded.names[t].c_str(), format_double(tg_total[t]).c_str(), tg_rank[t],
                  format_double(hota_total[t]).c_str(), hota_rank[t]);
    }
  }
  return kExitOk;
}

int cmd_select_params(const InputOptions& in, const std::string& metric_name, double c_max,
                      double bin_width, int jobs, const std::string& output) {
  const BoxDistance metric = base_metric_fn(base_metric_from_string(metric_name));
  const LoadedInputs loaded = load_inputs(in);

  std::vector<std::vector<double>> per_tracker(loaded.trackers.size());
  JobErrors errors(loaded.trackers.size());
  const int inner_threads = loaded.trackers.size() > 1 ? 1 : jobs;
  parallel_for(loaded.trackers.size(), jobs, [&](std::size_t t) {
    try {
      per_tracker[t] = collect_assignment_distances(loaded.ground_truth, loaded.trackers[t],
                                                    c_max, metric, inner_threads);
    } catch (const std::exception& e) {
      errors.capture(t, e);
    }
  });
  std::string message;
  if (const int code = errors.first_error(&message); code != kExitOk) {
    std::cerr << "error: " << message << "\n";
    return code;
  }

  std::vector<double> pooled;
  for (const auto& v : per_tracker) pooled.insert(pooled.end(), v.begin(), v.end());
  const GuidelineHistogram hist = guideline_histogram(pooled, bin_width, c_max);
  const std::string csv = hist.to_csv();
  if (output.empty() || output == "-") {
    std::cout << csv;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot write " + output);
    out << csv;
  }
  return kExitOk;
}

int cmd_gamma(double c, bool has_p, double p, bool has_g1, double g1, bool has_n, int n,
              bool has_invert, double invert, bool has_a, double a) {
  const int modes = (has_g1 ? 1 : 0) + (has_n ? 1 : 0) + (has_invert ? 1 : 0) + (has_a ? 1 : 0);
  if (modes != 1) {
    throw std::invalid_argument("choose exactly one of --g1, --n, --invert, --a");
  }
  if (has_a) {
    std::cout << "p = " << format_double(p_from_a_c(c, a)) << "\n";
    return kExitOk;
  }
  if (!has_p) throw std::invalid_argument("this mode requires --p");
  if (has_g1) {
    std::cout << "gamma = " << format_double(gamma_from_g1(c, p, g1)) << "\n";
  } else if (has_invert) {
    std::cout << "g1 = " << format_double(g1_from_gamma(c, p, invert)) << "\n";
  } else {
    std::cout << "gamma = " << format_double(gamma_from_n(c, p, n)) << "\n";
    for (int m = 1; m <= 5; ++m) {
      std::cout << "h_" << (n + m) << " = " << format_double(h_threshold(c, p, n, m)) << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"TGOSPA trajectory-set metric and HOTA evaluation for MOTChallenge data"};
  app.require_subcommand(1);

  // evaluate
  InputOptions eval_in;
  ParamOptions eval_po;
  std::string eval_solver = "auto";
  long long eval_ceiling = 2'000'000;
  int eval_jobs = 0;
  std::string eval_format = "table";
  auto* evaluate = app.add_subcommand("evaluate", "TGOSPA metric with full decomposition");
  add_input_flags(evaluate, &eval_in);
  add_param_flags(evaluate, &eval_po);
  evaluate->add_option("--solver", eval_solver, "auto | exact | lp | gamma-zero | gamma-extreme")
      ->check(CLI::IsMember({"auto", "exact", "lp", "gamma-zero", "gamma-extreme"}));
  evaluate->add_option("--ceiling", eval_ceiling, "exact-solver state ceiling (states x steps)");
  evaluate->add_option("--jobs", eval_jobs, "worker count (0 = logical CPUs)");
  evaluate->add_option("--format", eval_format, "json | csv | table")
      ->check(CLI::IsMember({"json", "csv", "table"}));

  // hota
  InputOptions hota_in;
  int hota_jobs = 0;
  std::string hota_format = "table";
  bool hota_per_alpha = false;
  auto* hota_cmd = app.add_subcommand("hota", "HOTA baseline score");
  add_input_flags(hota_cmd, &hota_in);
  hota_cmd->add_option("--jobs", hota_jobs, "worker count (0 = logical CPUs)");
  hota_cmd->add_option("--format", hota_format, "json | csv | table")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  hota_cmd->add_flag("--per-alpha", hota_per_alpha, "include the 19 per-threshold values");

  // compare
  InputOptions cmp_in;
  ParamOptions cmp_po;
  std::string cmp_solver = "auto";
  long long cmp_ceiling = 2'000'000;
  int cmp_jobs = 0;
  std::string cmp_format = "table";
  auto* compare = app.add_subcommand("compare", "TGOSPA and HOTA orderings side by side");
  add_input_flags(compare, &cmp_in);
  add_param_flags(compare, &cmp_po);
  compare->add_option("--solver", cmp_solver, "auto | exact | lp | gamma-zero | gamma-extreme")
      ->check(CLI::IsMember({"auto", "exact", "lp", "gamma-zero", "gamma-extreme"}));
  compare->add_option("--ceiling", cmp_ceiling, "exact-solver state ceiling");
  compare->add_option("--jobs", cmp_jobs, "worker count");
  compare->add_option("--format", cmp_format, "json | csv | table")
      ->check(CLI::IsMember({"json", "csv", "table"}));

  // select-params
  InputOptions sel_in;
  std::string sel_metric = "iou";
  double sel_cmax = 1.0;
  double sel_bin_width = 0.005;
  int sel_jobs = 0;
  std::string sel_output;
  auto* select =
      app.add_subcommand("select-params", "histogram of matched distances for choosing c");
  add_input_flags(select, &sel_in);
  select->add_option("--metric", sel_metric, "iou | hausdorff | wasserstein")
      ->check(CLI::IsMember({"iou", "hausdorff", "wasserstein"}));
  select->add_option("--cmax", sel_cmax, "collection cut-off (1 suits the IoU metric)");
  select->add_option("--bin-width", sel_bin_width, "histogram bin width");
  select->add_option("--jobs", sel_jobs, "worker count");
  select->add_option("--output", sel_output, "output CSV path (default stdout)");

  // gamma
  double g_c = 0.0, g_p = 1.0, g_g1 = 0.0, g_invert = 0.0, g_a = 0.0;
  int g_n = 0;
  bool g_has_p = false, g_has_g1 = false, g_has_n = false, g_has_invert = false, g_has_a = false;
  auto* gamma_cmd = app.add_subcommand("gamma", "parameter rules: gamma, g1, h-thresholds, p");
  gamma_cmd->add_option("--c", g_c, "cut-off distance")->required();
  gamma_cmd->add_option("--p", g_p, "exponent")->each([&](const std::string&) { g_has_p = true; });
  gamma_cmd->add_option("--g1", g_g1, "gamma from the short-term threshold distance")
      ->each([&](const std::string&) { g_has_g1 = true; });
  gamma_cmd->add_option("--n", g_n, "gamma from the minimum switch length, with h table")
      ->each([&](const std::string&) { g_has_n = true; });
  gamma_cmd->add_option("--invert", g_invert, "g1 back from a gamma value")
      ->each([&](const std::string&) { g_has_invert = true; });
  gamma_cmd->add_option("--a", g_a, "p from the maximum admissible error")
      ->each([&](const std::string&) { g_has_a = true; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (evaluate->parsed()) {
      return cmd_evaluate(eval_in, eval_po, eval_solver, eval_ceiling, eval_jobs, eval_format);
    }
    if (hota_cmd->parsed()) {
      return cmd_hota(hota_in, hota_jobs, hota_format, hota_per_alpha);
    }
    if (compare->parsed()) {
      return cmd_compare(cmp_in, cmp_po, cmp_solver, cmp_ceiling, cmp_jobs, cmp_format);
    }
    if (select->parsed()) {
      return cmd_select_params(sel_in, sel_metric, sel_cmax, sel_bin_width, sel_jobs, sel_output);
    }
    if (gamma_cmd->parsed()) {
      return cmd_gamma(g_c, g_has_p, g_p, g_has_g1, g_g1, g_has_n, g_n, g_has_invert, g_invert,
                       g_has_a, g_a);
    }
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const SolverLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSolver;
  } catch (const SolverError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSolver;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
