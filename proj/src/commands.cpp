#include "aismc/commands.hpp"

#include <algorithm>
#include <filesystem>
#include <future>
#include <map>
#include <sstream>

#include "aismc/errors.hpp"

namespace aismc {

namespace {

std::string in_directory(const RunConfig& config, const std::string& name) {
  std::error_code ec;
  std::filesystem::create_directories(config.output.directory, ec);
  if (ec) {
    throw IoError("cannot create output directory '" + config.output.directory + "': " + ec.message());
  }
  return (std::filesystem::path(config.output.directory) / name).string();
}

std::string trajectory_text(const TrajectoryLog& log, const SimulationConfig& sim) {
  std::ostringstream os;
  write_trajectory_csv(os, log,
                       {sim.disturbance.seed, static_cast<int>(sim.task),
                        std::string(to_string(sim.controller.kind))});
  return os.str();
}

std::optional<RmseReport> try_report(const TrajectoryLog& log, const SimulationConfig& sim,
                                     const TimeWindow& window) {
  try {
    return rmse_report(log, std::string(to_string(sim.controller.kind)), static_cast<int>(sim.task),
                       window);
  } catch (const EmptyWindow&) {
    return std::nullopt;
  }
}

struct SingleRun {
  RunConfig config;
  TrajectoryLog log;
};

SingleRun simulate(RunConfig config) {
  SingleRun run{std::move(config), {}};
  run.log = run_task(run.config.sim);
  return run;
}

}  // namespace

std::string run_stem(const RunConfig& config) {
  return config.output.prefix + "_task" + std::to_string(static_cast<int>(config.sim.task)) + "_" +
         std::string(to_string(config.sim.controller.kind)) + "_seed" +
         std::to_string(config.sim.disturbance.seed);
}

RunOutcome run_command(const RunConfig& config) {
  config.validate();
  RunOutcome out;
  out.log = run_task(config.sim);
  out.report = try_report(out.log, config.sim, config.window);

  const std::string stem = run_stem(config);
  out.trajectory_path = in_directory(config, stem + ".csv");
  write_file(out.trajectory_path, trajectory_text(out.log, config.sim));

  std::ostringstream report;
  std::vector<SeededReport> rows;
  if (out.report) rows.push_back({config.sim.disturbance.seed, *out.report});
  write_rmse_csv(report, rows);
  out.report_path = in_directory(config, stem + "_rmse.csv");
  write_file(out.report_path, report.str());
  return out;
}

CompareOutcome compare_command(const RunConfig& config, int jobs) {
  config.validate();
  std::vector<RunConfig> plan;
  for (std::uint64_t seed : config.compare.seeds) {
    for (int task : config.compare.tasks) {
      for (ControllerKind kind : config.compare.controllers) {
        RunConfig c = config;
        c.sim.task = task_from_int(task);
        c.sim.controller.kind = kind;
        c.sim.disturbance.seed = seed;
        plan.push_back(std::move(c));
      }
    }
  }

  std::vector<SingleRun> done;
  done.reserve(plan.size());
  const std::size_t batch = static_cast<std::size_t>(std::max(1, jobs));
  for (std::size_t start = 0; start < plan.size(); start += batch) {
    std::vector<std::future<SingleRun>> pending;
    for (std::size_t i = start; i < std::min(plan.size(), start + batch); ++i) {
      pending.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred, simulate,
                                   plan[i]));
    }
    for (auto& f : pending) done.push_back(f.get());
  }

  CompareOutcome out;
  std::map<std::pair<int, std::string>, std::vector<RmseReport>> grouped;
  std::vector<std::vector<ErrorDistribution>> distributions;
  for (const SingleRun& run : done) {
    const SimulationConfig& sim = run.config.sim;
    const std::string path = in_directory(config, run_stem(run.config) + ".csv");
    write_file(path, trajectory_text(run.log, sim));
    out.files.push_back(path);
    if (run.log.fault) {
      out.faults.push_back(*run.log.fault);
      continue;
    }
    const RmseReport report = *try_report(run.log, sim, config.window);
    out.runs.push_back({sim.disturbance.seed, report});
    grouped[{report.task, report.controller}].push_back(report);
    std::vector<ErrorDistribution> per_channel;
    for (Channel ch : {Channel::Roll, Channel::Pitch, Channel::Yaw}) {
      per_channel.push_back(error_distribution(run.log, ch, config.window));
    }
    distributions.push_back(std::move(per_channel));
  }
  if (!out.faults.empty()) return out;

  std::vector<RmseReport> pooled;
  for (const auto& [key, reports] : grouped) pooled.push_back(pooled_report(reports));
  out.table = comparison_report(pooled);

  for (int task : config.compare.tasks) {
    CompareOutcome::Wins w;
    w.task = task;
    for (std::uint64_t seed : config.compare.seeds) {
      std::map<std::string, double> totals;
      for (const SeededReport& r : out.runs) {
        if (r.seed == seed && r.report.task == task) totals[r.report.controller] = r.report.total;
      }
      ++w.seeds;
      if (totals.at("aismc") < totals.at("pid")) ++w.vs_pid;
      if (totals.at("aismc") < totals.at("smc")) ++w.vs_smc;
    }
    out.wins.push_back(w);
  }

  const std::string stem = config.output.prefix + "_compare";
  std::ostringstream rmse;
  write_rmse_csv(rmse, out.runs);
  out.files.push_back(in_directory(config, stem + ".csv"));
  write_file(out.files.back(), rmse.str());

  std::ostringstream dist;
  write_distribution_csv(dist, out.runs, distributions);
  out.files.push_back(in_directory(config, stem + "_distribution.csv"));
  write_file(out.files.back(), dist.str());

  out.files.push_back(in_directory(config, stem + ".txt"));
  std::string seeds = "Seeds:";
  for (std::uint64_t seed : config.compare.seeds) seeds += " " + std::to_string(seed);
  write_file(out.files.back(), seeds + "\n\n" + out.table.to_text() + format_wins(out.wins));
  return out;
}

std::string format_wins(const std::vector<CompareOutcome::Wins>& wins) {
  std::ostringstream os;
  os << "\nSeeds where AISMC has the lowest total RMSE\n";
  for (const auto& w : wins) {
    os << "  task #" << w.task << ": vs PID " << w.vs_pid << "/" << w.seeds << ", vs SMC " << w.vs_smc
       << "/" << w.seeds << "\n";
  }
  return os.str();
}

SweepOutcome sweep_command(const RunConfig& config) {
  config.validate();
  if (config.sweep.axes.empty()) throw ValidationError("sweep.axes", "no gain axes to sweep");

  SweepOutcome out;
  std::vector<std::size_t> index(config.sweep.axes.size(), 0);
  while (true) {
    RunConfig c = config;
    SweepPoint point;
    for (std::size_t a = 0; a < index.size(); ++a) {
      const SweepAxis& axis = config.sweep.axes[a];
      const double scale = axis.scales[index[a]];
      point.scales.push_back(scale);
      Vector6& gains = gain_vector(c.sim.controller, axis.parameter);
      gains *= scale;
    }
    c.sim.validate();
    const TrajectoryLog log = run_task(c.sim);
    point.fault = log.fault;
    if (!log.fault) point.report = try_report(log, c.sim, c.window);
    out.points.push_back(std::move(point));

    std::size_t a = 0;
    while (a < index.size() && ++index[a] == config.sweep.axes[a].scales.size()) index[a++] = 0;
    if (a == index.size()) break;
  }

  std::ostringstream os;
  os << "seed,";
  for (const SweepAxis& axis : config.sweep.axes) os << axis.parameter << ',';
  os << "pitch,roll,yaw,total,fault\n";
  for (const SweepPoint& p : out.points) {
    os << config.sim.disturbance.seed << ',';
    for (double s : p.scales) os << format_number(s) << ',';
    if (p.report) {
      os << format_number(p.report->pitch) << ',' << format_number(p.report->roll) << ','
         << format_number(p.report->yaw) << ',' << format_number(p.report->total) << ',';
    } else {
      os << ",,,,";
    }
    os << (p.fault ? p.fault->kind : "") << '\n';
  }
  out.path = in_directory(config, config.output.prefix + "_task" +
                                      std::to_string(static_cast<int>(config.sim.task)) + "_" +
                                      std::string(to_string(config.sim.controller.kind)) +
                                      "_sweep.csv");
  write_file(out.path, os.str());
  return out;
}

}  // namespace aismc
