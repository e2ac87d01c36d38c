#include "aismc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <sstream>

#include "aismc/errors.hpp"

namespace aismc {

int axis_of(Channel channel) {
  switch (channel) {
    case Channel::Roll: return kRoll;
    case Channel::Pitch: return kPitch;
    case Channel::Yaw: return kYaw;
  }
  return kPitch;
}

const char* to_string(Channel channel) {
  switch (channel) {
    case Channel::Roll: return "roll";
    case Channel::Pitch: return "pitch";
    case Channel::Yaw: return "yaw";
  }
  return "?";
}

namespace {

bool inside(double t, const TimeWindow& w) { return t >= w.start && t <= w.end; }

}  // namespace

std::vector<double> error_samples(const TrajectoryLog& log, Channel channel, const TimeWindow& window) {
  const int axis = axis_of(channel);
  std::vector<double> out;
  out.reserve(log.records.size());
  for (const LogRecord& r : log.records) {
    if (inside(r.t, window)) out.push_back(r.e(axis));
  }
  if (out.empty()) {
    throw EmptyWindow("no " + std::string(to_string(channel)) + " samples in [" +
                      std::to_string(window.start) + ", " + std::to_string(window.end) + "]");
  }
  return out;
}

double mean_square(std::span<const double> errors) {
  if (errors.empty()) throw EmptyWindow("mean square of an empty sample");
  double sum = 0.0;
  for (double e : errors) sum += e * e;
  return sum / static_cast<double>(errors.size());
}

double mean_square_error(const TrajectoryLog& log, Channel channel, const TimeWindow& window) {
  return mean_square(error_samples(log, channel, window));
}

double rmse(const TrajectoryLog& log, Channel channel, const TimeWindow& window) {
  return std::sqrt(mean_square_error(log, channel, window));
}

double total_rmse(double ms_pitch, double ms_roll, double ms_yaw) {
  return std::sqrt((ms_pitch + ms_roll + ms_yaw) / 3.0);
}

RmseReport rmse_report(const TrajectoryLog& log, std::string controller, int task,
                       const TimeWindow& window) {
  const double ms_pitch = mean_square_error(log, Channel::Pitch, window);
  const double ms_roll = mean_square_error(log, Channel::Roll, window);
  const double ms_yaw = mean_square_error(log, Channel::Yaw, window);
  RmseReport r;
  r.controller = std::move(controller);
  r.task = task;
  r.window = window;
  r.pitch = std::sqrt(ms_pitch);
  r.roll = std::sqrt(ms_roll);
  r.yaw = std::sqrt(ms_yaw);
  r.total = total_rmse(ms_pitch, ms_roll, ms_yaw);
  return r;
}

RmseReport pooled_report(const std::vector<RmseReport>& runs) {
  if (runs.empty()) throw MismatchedRuns("nothing to pool");
  RmseReport out = runs.front();
  double pitch = 0.0, roll = 0.0, yaw = 0.0;
  for (const RmseReport& r : runs) {
    if (r.controller != out.controller || r.task != out.task || !(r.window == out.window)) {
      throw MismatchedRuns("pooled runs must share controller, task and window");
    }
    pitch += r.pitch * r.pitch;
    roll += r.roll * r.roll;
    yaw += r.yaw * r.yaw;
  }
  const auto n = static_cast<double>(runs.size());
  out.pitch = std::sqrt(pitch / n);
  out.roll = std::sqrt(roll / n);
  out.yaw = std::sqrt(yaw / n);
  out.total = total_rmse(pitch / n, roll / n, yaw / n);
  return out;
}

ErrorDistribution error_distribution(std::span<const double> errors) {
  if (errors.empty()) throw EmptyWindow("error distribution of an empty sample");
  std::vector<double> sorted(errors.begin(), errors.end());
  std::sort(sorted.begin(), sorted.end());
  const auto n = sorted.size();

  ErrorDistribution d;
  d.count = n;
  for (std::size_t i = 0; i < ErrorDistribution::kLevels.size(); ++i) {
    const double pos = ErrorDistribution::kLevels[i] * static_cast<double>(n - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, n - 1);
    const double frac = pos - static_cast<double>(lo);
    d.quantiles[i] = sorted[lo] + frac * (sorted[hi] - sorted[lo]);
  }
  d.mean = std::accumulate(sorted.begin(), sorted.end(), 0.0) / static_cast<double>(n);
  if (n > 1) {
    double ss = 0.0;
    for (double v : sorted) ss += (v - d.mean) * (v - d.mean);
    d.sd = std::sqrt(ss / static_cast<double>(n - 1));
  }
  return d;
}

ErrorDistribution error_distribution(const TrajectoryLog& log, Channel channel, const TimeWindow& window) {
  return error_distribution(error_samples(log, channel, window));
}

Vector6 sliding_variable_bound(const TrajectoryLog& log, const TimeWindow& window) {
  Vector6 bound = Vector6::Zero();
  bool any = false;
  for (const LogRecord& r : log.records) {
    if (!inside(r.t, window)) continue;
    bound = bound.cwiseMax(r.s.cwiseAbs());
    any = true;
  }
  if (!any) throw EmptyWindow("no sliding-variable samples in window");
  return bound;
}

double percent_reduction(double baseline, double candidate) {
  return 100.0 * (baseline - candidate) / baseline;
}

namespace {

int controller_rank(const std::string& name) {
  if (name == "pid") return 0;
  if (name == "smc") return 1;
  if (name == "ismc") return 2;
  if (name == "aismc") return 3;
  return -1;
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace

ComparisonTable comparison_report(const std::vector<RmseReport>& reports) {
  if (reports.empty()) throw MismatchedRuns("no runs to compare");
  std::map<int, std::map<int, const RmseReport*>> by_task;
  for (const RmseReport& r : reports) {
    const int rank = controller_rank(r.controller);
    if (rank < 0) throw MismatchedRuns("unknown controller '" + r.controller + "'");
    auto& slot = by_task[r.task][rank];
    if (slot != nullptr) {
      throw MismatchedRuns("duplicate " + r.controller + " run for task " + std::to_string(r.task));
    }
    slot = &r;
  }

  ComparisonTable table;
  for (const auto& [task, runs] : by_task) {
    for (const char* required : {"pid", "smc", "aismc"}) {
      if (!runs.contains(controller_rank(required))) {
        throw MismatchedRuns("task " + std::to_string(task) + " is missing a " + required + " run");
      }
    }
    const TimeWindow& window = runs.begin()->second->window;
    for (const auto& [rank, report] : runs) {
      if (!(report->window == window)) {
        throw MismatchedRuns("task " + std::to_string(task) + " runs use different windows");
      }
      table.rows.push_back(*report);
    }
    const double aismc = runs.at(3)->total;
    table.reductions.push_back(
        {task, percent_reduction(runs.at(0)->total, aismc), percent_reduction(runs.at(1)->total, aismc)});
  }
  return table;
}

std::string ComparisonTable::to_text() const {
  std::ostringstream os;
  os << "Task  Controller   Pitch    Roll     Yaw      Total\n";
  os << "----  ----------  -------  -------  -------  -------\n";
  for (const RmseReport& r : rows) {
    char line[128];
    std::snprintf(line, sizeof line, "#%-3d  %-10s  %7.4f  %7.4f  %7.4f  %7.4f\n", r.task,
                  r.controller.c_str(), r.pitch, r.roll, r.yaw, r.total);
    os << line;
  }
  os << "\nAISMC total RMSE reduction\n";
  for (const Reduction& red : reductions) {
    os << "  task #" << red.task << ": vs PID " << fixed(red.vs_pid, 1) << "%, vs SMC "
       << fixed(red.vs_smc, 1) << "%\n";
  }
  return os.str();
}

std::string ComparisonTable::to_csv() const {
  std::ostringstream os;
  os.precision(17);
  os << "task,controller,pitch,roll,yaw,total,window_start,window_end\n";
  for (const RmseReport& r : rows) {
    os << r.task << ',' << r.controller << ',' << r.pitch << ',' << r.roll << ',' << r.yaw << ','
       << r.total << ',' << r.window.start << ',' << r.window.end << '\n';
  }
  return os.str();
}

}  // namespace aismc
