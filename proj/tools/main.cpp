#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "aismc/commands.hpp"
#include "aismc/config.hpp"
#include "aismc/errors.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitConfig = 2;
constexpr int kExitFault = 3;

struct Overrides {
  std::string config_path;
  std::optional<int> task;
  std::optional<std::string> controller;
  std::optional<std::uint64_t> seed;
  std::optional<double> duration;
  std::optional<double> mismatch;
  std::optional<double> window_start;
  std::optional<double> window_end;
  std::optional<std::string> output_dir;
  std::optional<std::string> prefix;
  std::vector<int> tasks;
  std::vector<std::uint64_t> seeds;
  std::optional<int> runs;
  std::vector<std::string> axes;
};

void add_common(CLI::App& cmd, Overrides& o) {
  cmd.add_option("-c,--config", o.config_path, "YAML config file (defaults if omitted)");
  cmd.add_option("--task", o.task, "task id 1, 2 or 3");
  cmd.add_option("--controller", o.controller, "pid, smc, ismc or aismc");
  cmd.add_option("--seed", o.seed, "disturbance seed");
  cmd.add_option("--duration", o.duration, "simulated time in seconds");
  cmd.add_option("--mismatch", o.mismatch, "plant parameter spread in [0, 0.5]");
  cmd.add_option("--window-start", o.window_start, "RMSE window start (s)");
  cmd.add_option("--window-end", o.window_end, "RMSE window end (s)");
  cmd.add_option("-o,--output-dir", o.output_dir, "directory for output files");
  cmd.add_option("--prefix", o.prefix, "output file name prefix");
}

aismc::RunConfig resolve(const Overrides& o) {
  aismc::RunConfig c = o.config_path.empty() ? aismc::parse_config("") : aismc::load_config(o.config_path);
  if (o.task) {
    if (*o.task < 1 || *o.task > 3) {
      throw aismc::ValidationError("task", "unknown task " + std::to_string(*o.task));
    }
    c.sim.task = aismc::task_from_int(*o.task);
  }
  if (o.controller) c.sim.controller.kind = aismc::controller_kind_from_string(*o.controller);
  if (o.seed) c.sim.disturbance.seed = *o.seed;
  if (o.duration) c.sim.timing.duration = *o.duration;
  if (o.mismatch) c.sim.disturbance.mismatch_scale = *o.mismatch;
  if (o.window_start) c.window.start = *o.window_start;
  if (o.window_end) c.window.end = *o.window_end;
  if (o.output_dir) c.output.directory = *o.output_dir;
  if (o.prefix) c.output.prefix = *o.prefix;
  if (!o.tasks.empty()) c.compare.tasks = o.tasks;
  if (!o.seeds.empty()) c.compare.seeds = o.seeds;
  if (o.runs) {
    if (*o.runs < 1) throw aismc::ValidationError("runs", "must be at least 1");
    c.compare.seeds.clear();
    for (int i = 1; i <= *o.runs; ++i) c.compare.seeds.push_back(static_cast<std::uint64_t>(i));
  }
  if (!o.axes.empty()) {
    c.sweep.axes.clear();
    for (const std::string& spec : o.axes) {
      const auto eq = spec.find('=');
      if (eq == std::string::npos) {
        throw aismc::ValidationError("axis", "expected name=scale,scale,... got '" + spec + "'");
      }
      aismc::SweepAxis axis;
      axis.parameter = spec.substr(0, eq);
      std::string rest = spec.substr(eq + 1);
      std::size_t start = 0;
      while (start <= rest.size()) {
        const std::size_t comma = rest.find(',', start);
        const std::string item = rest.substr(start, comma - start);
        try {
          std::size_t used = 0;
          axis.scales.push_back(std::stod(item, &used));
          if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
          throw aismc::ValidationError("axis", "bad scale '" + item + "'");
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      c.sweep.axes.push_back(std::move(axis));
    }
  }
  c.validate();
  return c;
}

void print_report(const aismc::RmseReport& r) {
  std::printf("task #%d %-6s pitch %.4f  roll %.4f  yaw %.4f  total %.4f rad\n", r.task,
              r.controller.c_str(), r.pitch, r.roll, r.yaw, r.total);
}

void print_fault(const aismc::SimulationFault& f) {
  std::cerr << "simulation fault: " << f.kind << " at t = " << f.t << " s: " << f.message << "\n";
}

int cmd_run(const Overrides& o) {
  const aismc::RunConfig config = resolve(o);
  const aismc::RunOutcome out = aismc::run_command(config);
  std::cout << "wrote " << out.trajectory_path << "\n      " << out.report_path << "\n";
  if (out.report) print_report(*out.report);
  if (out.log.fault) {
    print_fault(*out.log.fault);
    return kExitFault;
  }
  return kExitOk;
}

int cmd_compare(const Overrides& o, int jobs) {
  const aismc::RunConfig config = resolve(o);
  const aismc::CompareOutcome out = aismc::compare_command(config, jobs);
  if (!out.faults.empty()) {
    for (const auto& f : out.faults) print_fault(f);
    return kExitFault;
  }
  std::cout << out.table.to_text() << aismc::format_wins(out.wins);
  std::cout << "\nwrote " << out.files.size() << " files to " << config.output.directory << "\n";
  return kExitOk;
}

int cmd_sweep(const Overrides& o) {
  const aismc::RunConfig config = resolve(o);
  const aismc::SweepOutcome out = aismc::sweep_command(config);
  bool faulted = false;
  for (const auto& p : out.points) {
    for (std::size_t a = 0; a < p.scales.size(); ++a) {
      std::cout << config.sweep.axes[a].parameter << " x" << p.scales[a] << "  ";
    }
    if (p.report) std::printf("total %.4f\n", p.report->total);
    if (p.fault) {
      std::cout << "fault " << p.fault->kind << "\n";
      faulted = true;
    }
  }
  std::cout << "wrote " << out.path << "\n";
  return faulted ? kExitFault : kExitOk;
}

int cmd_validate(const Overrides& o, bool emit) {
  const aismc::RunConfig config = resolve(o);
  if (emit) {
    std::cout << aismc::emit_config(config);
  } else {
    std::cout << "config ok\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Underwater vehicle attitude control simulator"};
  app.require_subcommand(1);

  Overrides run_o, compare_o, sweep_o, validate_o;
  int jobs = 1;
  bool emit = false;

  auto* run = app.add_subcommand("run", "simulate one task with one controller");
  add_common(*run, run_o);

  auto* compare = app.add_subcommand("compare", "PID, SMC and AISMC on paired seeds");
  add_common(*compare, compare_o);
  compare->add_option("--tasks", compare_o.tasks, "task ids")->delimiter(',');
  compare->add_option("--seeds", compare_o.seeds, "seeds")->delimiter(',');
  compare->add_option("--runs", compare_o.runs, "use seeds 1..N");
  compare->add_option("-j,--jobs", jobs, "parallel runs")->check(CLI::PositiveNumber);

  auto* sweep = app.add_subcommand("sweep", "gain grid around the configured controller");
  add_common(*sweep, sweep_o);
  sweep->add_option("--axis", sweep_o.axes, "gain=scale,scale,... (repeatable)");

  auto* validate = app.add_subcommand("validate", "check a config file without running it");
  add_common(*validate, validate_o);
  validate->add_flag("--emit", emit, "print the fully resolved config");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*run) return cmd_run(run_o);
    if (*compare) return cmd_compare(compare_o, jobs);
    if (*sweep) return cmd_sweep(sweep_o);
    if (*validate) return cmd_validate(validate_o, emit);
  } catch (const aismc::ParseError& e) {
    std::cerr << "config parse error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const aismc::ValidationError& e) {
    std::cerr << "invalid config: " << e.what() << "\n";
    return kExitConfig;
  } catch (const aismc::UnknownTask& e) {
    std::cerr << "invalid config: " << e.what() << "\n";
    return kExitConfig;
  } catch (const aismc::SingularAttitude& e) {
    std::cerr << "simulation fault: " << e.what() << "\n";
    return kExitFault;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitOk;
}
