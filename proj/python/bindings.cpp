#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <limits>
#include <optional>
#include <sstream>
#include <string>

#include "aismc/allocation.hpp"
#include "aismc/commands.hpp"
#include "aismc/config.hpp"
#include "aismc/csv.hpp"
#include "aismc/errors.hpp"
#include "aismc/kinematics.hpp"
#include "aismc/metrics.hpp"
#include "aismc/simulation.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace aismc;

namespace {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

struct Trajectory {
  TrajectoryLog log;
  RunMetadata meta;
};

template <typename Field>
RowMatrix stack(const TrajectoryLog& log, int cols, Field field) {
  RowMatrix out(static_cast<Eigen::Index>(log.records.size()), cols);
  for (std::size_t i = 0; i < log.records.size(); ++i) {
    out.row(static_cast<Eigen::Index>(i)) = field(log.records[i]).transpose();
  }
  return out;
}

RunConfig configure(const std::string& text, std::optional<int> task, std::optional<std::string> controller,
                    std::optional<std::uint64_t> seed, std::optional<double> duration) {
  RunConfig c = parse_config(text);
  if (task) c.sim.task = task_from_int(*task);
  if (controller) c.sim.controller.kind = controller_kind_from_string(*controller);
  if (seed) c.sim.disturbance.seed = *seed;
  if (duration) c.sim.timing.duration = *duration;
  c.validate();
  return c;
}

py::dict report_dict(const RmseReport& r) {
  return py::dict("controller"_a = r.controller, "task"_a = r.task, "pitch"_a = r.pitch, "roll"_a = r.roll,
                  "yaw"_a = r.yaw, "total"_a = r.total, "window"_a = py::make_tuple(r.window.start, r.window.end));
}

py::object fault_object(const std::optional<SimulationFault>& fault) {
  if (!fault) return py::none();
  return py::dict("kind"_a = fault->kind, "t"_a = fault->t, "message"_a = fault->message);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Attitude control simulation core";
  m.attr("__version__") = AISMC_VERSION;

  auto base = py::register_exception<Error>(m, "AismcError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base);
  py::register_exception<ValidationError>(m, "ValidationError", base);
  py::register_exception<SingularAttitude>(m, "SingularAttitude", base);

  py::class_<Trajectory>(m, "Trajectory")
      .def_property_readonly("seed", [](const Trajectory& tr) { return tr.meta.seed; })
      .def_property_readonly("task", [](const Trajectory& tr) { return tr.meta.task; })
      .def_property_readonly("controller", [](const Trajectory& tr) { return tr.meta.controller; })
      .def_property_readonly("fault", [](const Trajectory& tr) { return fault_object(tr.log.fault); })
      .def_property_readonly("t",
                             [](const Trajectory& tr) {
                               Eigen::VectorXd t(static_cast<Eigen::Index>(tr.log.records.size()));
                               for (std::size_t i = 0; i < tr.log.records.size(); ++i) {
                                 t(static_cast<Eigen::Index>(i)) = tr.log.records[i].t;
                               }
                               return t;
                             })
      .def_property_readonly("eta", [](const Trajectory& tr) { return stack(tr.log, 6, [](auto& r) { return r.eta; }); })
      .def_property_readonly("nu", [](const Trajectory& tr) { return stack(tr.log, 6, [](auto& r) { return r.nu; }); })
      .def_property_readonly("eta_r",
                             [](const Trajectory& tr) { return stack(tr.log, 6, [](auto& r) { return r.eta_r; }); })
      .def_property_readonly("e", [](const Trajectory& tr) { return stack(tr.log, 6, [](auto& r) { return r.e; }); })
      .def_property_readonly("s", [](const Trajectory& tr) { return stack(tr.log, 6, [](auto& r) { return r.s; }); })
      .def_property_readonly("k_hat",
                             [](const Trajectory& tr) { return stack(tr.log, 6, [](auto& r) { return r.k_hat; }); })
      .def_property_readonly("mu", [](const Trajectory& tr) { return stack(tr.log, 8, [](auto& r) { return r.mu; }); })
      .def_property_readonly("tau_e",
                             [](const Trajectory& tr) { return stack(tr.log, 6, [](auto& r) { return r.tau_e; }); })
      .def_property_readonly("v1",
                             [](const Trajectory& tr) {
                               return stack(tr.log, 1, [](auto& r) { return Eigen::Matrix<double, 1, 1>(r.v1); })
                                   .col(0)
                                   .eval();
                             })
      .def_property_readonly("saturated",
                             [](const Trajectory& tr) {
                               py::list flags;
                               for (const LogRecord& r : tr.log.records) flags.append(r.saturated);
                               return flags;
                             })
      .def(
          "report",
          [](const Trajectory& tr, double start, double end) {
            return report_dict(rmse_report(tr.log, tr.meta.controller, tr.meta.task, {start, end}));
          },
          "start"_a = 0.0, "end"_a = std::numeric_limits<double>::infinity(),
          "Per-channel and total attitude RMSE over [start, end].")
      .def(
          "to_csv",
          [](const Trajectory& tr) {
            std::ostringstream os;
            write_trajectory_csv(os, tr.log, tr.meta);
            return os.str();
          },
          "Trajectory in the CSV schema used by the command-line tool.")
      .def("__len__", [](const Trajectory& tr) { return tr.log.records.size(); });

  m.def(
      "run",
      [](const std::string& config, std::optional<int> task, std::optional<std::string> controller,
         std::optional<std::uint64_t> seed, std::optional<double> duration) {
        const RunConfig c = configure(config, task, controller, seed, duration);
        Trajectory tr;
        {
          py::gil_scoped_release release;
          tr.log = run_task(c.sim);
        }
        tr.meta = {c.sim.disturbance.seed, static_cast<int>(c.sim.task), std::string(to_string(c.sim.controller.kind))};
        return tr;
      },
      "config"_a = "", py::kw_only(), "task"_a = py::none(), "controller"_a = py::none(), "seed"_a = py::none(),
      "duration"_a = py::none(),
      "Runs one closed-loop task from YAML text (empty for defaults); keyword arguments override the file.");

  m.def(
      "compare",
      [](const std::string& config, int jobs) {
        const RunConfig c = parse_config(config);
        CompareOutcome out;
        {
          py::gil_scoped_release release;
          out = compare_command(c, jobs);
        }
        py::list rows;
        for (const RmseReport& r : out.table.rows) rows.append(report_dict(r));
        py::list reductions;
        for (const auto& r : out.table.reductions) {
          reductions.append(py::dict("task"_a = r.task, "vs_pid"_a = r.vs_pid, "vs_smc"_a = r.vs_smc));
        }
        return py::dict("rows"_a = rows, "reductions"_a = reductions, "text"_a = out.table.to_text(),
                        "files"_a = out.files);
      },
      "config"_a = "", "jobs"_a = 1,
      "Paired-seed comparison of every controller on every task; writes the report files.");

  m.def("default_config", []() { return emit_config(RunConfig{}); }, "Complete YAML of the defaults.");
  m.def(
      "validate_config", [](const std::string& text) { return emit_config(parse_config(text)); }, "text"_a,
      "Parses and validates YAML text and returns the normalized form.");
  m.def("trajectory_columns", &trajectory_columns);

  m.def(
      "transform_matrix", [](const Vector3& euler) { return transform_matrix(euler).full(); }, "euler"_a,
      "6x6 body-to-earth velocity transform for (phi, theta, psi).");
  m.def(
      "reference",
      [](int task, double t) {
        const ReferenceSample r = reference_trajectory(task, t);
        return py::make_tuple(r.pose, r.velocity, r.acceleration);
      },
      "task"_a, "t"_a, "Reference pose, velocity and acceleration.");
  m.def(
      "allocation_matrix", []() { return allocation_matrix(ThrusterLayout::bluerov2_heavy()); },
      "6x8 thruster allocation matrix of the default layout.");
  m.def(
      "allocate",
      [](const Vector6& tau) {
        const ThrustAllocator allocator(ThrusterLayout::bluerov2_heavy(), VehicleModel{}.max_thrust);
        const AllocationResult r = allocator.allocate(Wrench::body(tau));
        return py::make_tuple(Vector8(r.command.mu), r.saturated);
      },
      "tau"_a, "Normalized thruster voltages for a body wrench, clamped to [-1, 1].");
  m.def("total_rmse", &total_rmse, "ms_pitch"_a, "ms_roll"_a, "ms_yaw"_a);
}
