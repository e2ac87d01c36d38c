#include "aismc/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "aismc/errors.hpp"

namespace aismc {

namespace {

constexpr std::array<const char*, 6> kPose{"x", "y", "z", "phi", "theta", "psi"};
constexpr std::array<const char*, 6> kRate{"u", "v", "w", "p", "q", "r"};

std::vector<std::string> build_columns() {
  std::vector<std::string> c{"t"};
  for (const char* n : kPose) c.emplace_back(n);
  for (const char* n : kRate) c.emplace_back(n);
  for (const char* n : kPose) c.push_back(std::string(n) + "_r");
  for (const char* prefix : {"e_", "s_", "k_hat_"}) {
    for (const char* n : kPose) c.push_back(prefix + std::string(n));
  }
  for (int i = 1; i <= kThrusterCount; ++i) c.push_back("mu_" + std::to_string(i));
  for (const char* n : kPose) c.push_back("tauE_" + std::string(n));
  c.emplace_back("V1");
  c.emplace_back("sat_flag");
  return c;
}

template <typename Vec>
void put(std::string& line, const Vec& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    line += ',';
    line += format_number(v(i));
  }
}

double parse_number(std::string_view text, std::size_t line) {
  double value = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    if (text == "inf") return std::numeric_limits<double>::infinity();
    if (text == "-inf") return -std::numeric_limits<double>::infinity();
    if (text == "nan") return std::numeric_limits<double>::quiet_NaN();
    throw ParseError("bad number '" + std::string(text) + "'", line);
  }
  return value;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    out.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

void parse_metadata(std::string_view text, RunMetadata& meta, std::size_t line) {
  std::istringstream fields{std::string(text)};
  std::string token;
  while (fields >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) continue;
    const std::string key = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    try {
      if (key == "seed") meta.seed = std::stoull(value);
      if (key == "task") meta.task = std::stoi(value);
      if (key == "controller") meta.controller = value;
    } catch (const std::exception&) {
      throw ParseError("bad metadata value '" + token + "'", line);
    }
  }
}

}  // namespace

const std::vector<std::string>& trajectory_columns() {
  static const std::vector<std::string> columns = build_columns();
  return columns;
}

std::string format_number(double value) {
  char buf[64];
  const auto [end, ec] =
      std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  return std::string(buf, end);
}

void write_trajectory_csv(std::ostream& out, const TrajectoryLog& log, const RunMetadata& meta) {
  const auto& columns = trajectory_columns();
  std::string line;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i > 0) line += ',';
    line += columns[i];
  }
  out << line << '\n';

  for (const LogRecord& r : log.records) {
    line = format_number(r.t);
    put(line, r.eta);
    put(line, r.nu);
    put(line, r.eta_r);
    put(line, r.e);
    put(line, r.s);
    put(line, r.k_hat);
    put(line, r.mu);
    put(line, r.tau_e);
    line += ',';
    line += format_number(r.v1);
    line += r.saturated ? ",1" : ",0";
    out << line << '\n';
  }
  out << "# seed=" << meta.seed << " task=" << meta.task << " controller=" << meta.controller << '\n';
  if (log.fault) {
    out << "# fault: " << log.fault->kind << " t=" << format_number(log.fault->t) << ' '
        << log.fault->message << '\n';
  }
}

TrajectoryFile read_trajectory_csv(std::istream& in) {
  const auto& columns = trajectory_columns();
  TrajectoryFile file;
  std::string line;
  std::size_t line_no = 0;
  bool header = false;
  double previous_t = 0.0;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.starts_with("# fault: ")) {
      std::istringstream rest(line.substr(9));
      SimulationFault fault;
      std::string t_field;
      rest >> fault.kind >> t_field;
      if (!t_field.starts_with("t=")) throw ParseError("malformed fault line", line_no);
      fault.t = parse_number(std::string_view(t_field).substr(2), line_no);
      std::getline(rest >> std::ws, fault.message);
      file.log.fault = fault;
      continue;
    }
    if (line.starts_with('#')) {
      parse_metadata(std::string_view(line).substr(1), file.meta, line_no);
      continue;
    }
    const auto cells = split(line);
    if (!header) {
      if (cells.size() != columns.size()) throw ParseError("unexpected header", line_no);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cells[i] != columns[i]) {
          throw ParseError("unexpected column '" + std::string(cells[i]) + "'", line_no);
        }
      }
      header = true;
      continue;
    }
    if (cells.size() != columns.size()) {
      throw ParseError("expected " + std::to_string(columns.size()) + " fields, got " +
                           std::to_string(cells.size()),
                       line_no);
    }
    std::size_t k = 0;
    auto next = [&] { return parse_number(cells[k++], line_no); };
    LogRecord r;
    r.t = next();
    for (Vector6* v : {&r.eta, &r.nu, &r.eta_r, &r.e, &r.s, &r.k_hat}) {
      for (int i = 0; i < 6; ++i) (*v)(i) = next();
    }
    for (int i = 0; i < kThrusterCount; ++i) r.mu(i) = next();
    for (int i = 0; i < 6; ++i) r.tau_e(i) = next();
    r.v1 = next();
    const double flag = next();
    if (flag != 0.0 && flag != 1.0) throw ParseError("sat_flag must be 0 or 1", line_no);
    r.saturated = flag == 1.0;
    r.tau_tilde.setZero();
    r.k_hat_rate.setZero();
    r.d_estimate.setZero();
    if (file.log.records.size() == 1) file.log.control_period = r.t - previous_t;
    previous_t = r.t;
    file.log.records.push_back(r);
  }
  if (!header) throw ParseError("missing header row", line_no);
  return file;
}

void write_rmse_csv(std::ostream& out, const std::vector<SeededReport>& rows) {
  out << "task,controller,seed,pitch,roll,yaw,total,window_start,window_end\n";
  for (const SeededReport& row : rows) {
    const RmseReport& r = row.report;
    out << r.task << ',' << r.controller << ',' << row.seed << ',' << format_number(r.pitch) << ','
        << format_number(r.roll) << ',' << format_number(r.yaw) << ',' << format_number(r.total)
        << ',' << format_number(r.window.start) << ',' << format_number(r.window.end) << '\n';
  }
}

void write_distribution_csv(std::ostream& out, const std::vector<SeededReport>& runs,
                            const std::vector<std::vector<ErrorDistribution>>& distributions) {
  out << "task,controller,seed,channel,q01,q05,q25,q50,q75,q95,q99,mean,sd,count\n";
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const RmseReport& r = runs[i].report;
    for (std::size_t c = 0; c < distributions[i].size(); ++c) {
      const ErrorDistribution& d = distributions[i][c];
      out << r.task << ',' << r.controller << ',' << runs[i].seed << ','
          << to_string(static_cast<Channel>(c));
      for (double q : d.quantiles) out << ',' << format_number(q);
      out << ',' << format_number(d.mean) << ',' << format_number(d.sd) << ',' << d.count << '\n';
    }
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  out.close();
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace aismc
