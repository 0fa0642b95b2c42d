// Command-line front end: point metrics, SQT window search, and 2-D
// parameter sweeps with CSV/JSON/PGM output.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sqtsim/analysis.hpp"
#include "sqtsim/io.hpp"

namespace {

struct Options {
  double r = 3;
  double reservoir_squeezing = 0.1;  // R
  double temperature = 1;            // T
  double gamma = 0.1;
  double t = 0;
  double t_max = 20;
  double tol = 1e-6;
  int grid = 512;
  int workers = 0;  // 0 = auto
  bool workers_set = false;
  std::string format;
  std::string output = "-";
  std::vector<std::string> axes;
};

void add_physical_options(CLI::App* cmd, Options& opt) {
  cmd->add_option("--r", opt.r, "initial-state squeezing r");
  cmd->add_option("--R", opt.reservoir_squeezing, "reservoir squeezing R");
  cmd->add_option("--T", opt.temperature, "reservoir temperature T");
  cmd->add_option("--gamma", opt.gamma, "decay rate gamma");
}

void validate_physical(const Options& opt) {
  if (opt.r < 0) throw sqtsim::DomainError("r must be nonnegative");
  if (opt.reservoir_squeezing < 0)
    throw sqtsim::DomainError("R must be nonnegative");
  if (opt.temperature < 0) throw sqtsim::DomainError("T must be nonnegative");
  if (!(opt.gamma > 0)) throw sqtsim::DomainError("gamma must be positive");
}

sqtsim::SweepPoint to_point(const Options& opt) {
  sqtsim::SweepPoint p;
  p.initial_squeezing = opt.r;
  p.reservoir_squeezing = opt.reservoir_squeezing;
  p.temperature = opt.temperature;
  p.decay_rate = opt.gamma;
  p.time = opt.t;
  return p;
}

int resolve_workers(const Options& opt) {
  if (opt.workers_set) {
    if (opt.workers < 0)
      throw sqtsim::DomainError("workers must be nonnegative");
    return opt.workers;
  }
  if (const char* env = std::getenv("SQT_SIM_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 0)
      throw sqtsim::DomainError(
          "SQT_SIM_WORKERS must be a nonnegative integer");
    return static_cast<int>(v);
  }
  return 0;
}

sqtsim::AxisSpec parse_axis(const std::string& spec) {
  const auto fail = [&spec]() -> sqtsim::AxisSpec {
    throw sqtsim::DomainError("invalid axis spec '" + spec +
                              "' (expected name:min:max[:count])");
  };
  std::vector<std::string> parts;
  std::size_t begin = 0;
  while (begin <= spec.size()) {
    const std::size_t colon = spec.find(':', begin);
    if (colon == std::string::npos) {
      parts.push_back(spec.substr(begin));
      break;
    }
    parts.push_back(spec.substr(begin, colon - begin));
    begin = colon + 1;
  }
  if (parts.size() < 3 || parts.size() > 4) return fail();

  sqtsim::AxisSpec axis;
  const auto param = sqtsim::parse_parameter(parts[0]);
  if (!param) return fail();
  axis.parameter = *param;

  const auto to_real = [&](const std::string& s) -> sqtsim::Real {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0') fail();
    return v;
  };
  axis.min = to_real(parts[1]);
  axis.max = to_real(parts[2]);
  if (parts.size() == 4) {
    char* end = nullptr;
    const long v = std::strtol(parts[3].c_str(), &end, 10);
    if (end == parts[3].c_str() || *end != '\0' || v < 2) fail();
    axis.count = static_cast<int>(v);
  }
  return axis;
}

// Writes through `emit` to the output path, or stdout for "-".
template <typename Emit>
void write_output(const std::string& path, Emit&& emit) {
  if (path == "-") {
    emit(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output path '" + path + "'");
  emit(file);
  file.flush();
  if (!file)
    throw std::runtime_error("failed writing output path '" + path + "'");
}

int run_metrics(const Options& opt) {
  validate_physical(opt);
  if (opt.t < 0) throw sqtsim::DomainError("t must be nonnegative");
  const sqtsim::MetricsReport report = sqtsim::evaluate_report(to_point(opt));
  write_output(opt.output, [&](std::ostream& os) {
    if (opt.format == "json")
      sqtsim::write_metrics_json(os, report);
    else
      sqtsim::write_metrics_text(os, report);
  });
  return 0;
}

int run_window(const Options& opt) {
  validate_physical(opt);
  if (!(opt.t_max > 0)) throw sqtsim::DomainError("t_max must be positive");
  if (opt.grid < 16)
    throw sqtsim::DomainError("grid must be at least 16 points");
  if (!(opt.tol > 0)) throw sqtsim::DomainError("tol must be positive");

  const sqtsim::EvolutionScenario scenario(
      opt.r, sqtsim::BathParams(opt.temperature, opt.reservoir_squeezing,
                                opt.gamma));
  const sqtsim::TimeWindow window =
      sqtsim::sqt_window(scenario, opt.t_max, opt.grid, opt.tol);
  write_output(opt.output, [&](std::ostream& os) {
    if (opt.format == "json")
      sqtsim::write_window_json(os, window);
    else
      sqtsim::write_window_text(os, window);
  });
  return 0;
}

int run_sweep(const Options& opt) {
  validate_physical(opt);
  if (opt.t < 0) throw sqtsim::DomainError("t must be nonnegative");
  if (opt.axes.size() != 2)
    throw sqtsim::DomainError("sweep needs exactly two --axes specs");

  const sqtsim::AxisSpec axis1 = parse_axis(opt.axes[0]);
  const sqtsim::AxisSpec axis2 = parse_axis(opt.axes[1]);
  const sqtsim::RegionMap map =
      sqtsim::sweep_2d(to_point(opt), axis1, axis2, resolve_workers(opt));

  write_output(opt.output, [&](std::ostream& os) {
    if (opt.format == "json")
      sqtsim::write_region_json(os, map);
    else if (opt.format == "pgm")
      sqtsim::write_region_pgm(os, map);
    else
      sqtsim::write_region_csv(os, map);
  });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{
      "simulator for secure quantum teleportation of a coherent state over a "
      "decohering two-mode squeezed vacuum resource"};
  app.require_subcommand(1);

  CLI::App* metrics = app.add_subcommand(
      "metrics", "fidelity, steering, and the SQT merit at one point");
  add_physical_options(metrics, opt);
  metrics->add_option("--t", opt.t, "evolution time t");
  metrics->add_option("--format", opt.format, "output format (text|json)")
      ->check(CLI::IsMember({"text", "json"}));
  metrics->add_option("--output", opt.output, "output path ('-' = stdout)");

  CLI::App* window = app.add_subcommand(
      "window", "time intervals where secure teleportation is possible");
  add_physical_options(window, opt);
  window->add_option("--t-max", opt.t_max, "upper end of the scanned range");
  window->add_option("--grid", opt.grid, "bracketing grid points");
  window->add_option("--tol", opt.tol, "boundary refinement tolerance");
  window->add_option("--format", opt.format, "output format (text|json)")
      ->check(CLI::IsMember({"text", "json"}));
  window->add_option("--output", opt.output, "output path ('-' = stdout)");

  CLI::App* sweep = app.add_subcommand(
      "sweep", "2-D region map over two of {t, r, R, T, gamma}");
  add_physical_options(sweep, opt);
  sweep->add_option("--t", opt.t, "fixed time when t is not an axis");
  sweep
      ->add_option("--axes", opt.axes,
                   "two axis specs, each name:min:max[:count]")
      ->expected(2);
  sweep->add_option("--format", opt.format, "output format (csv|json|pgm)")
      ->check(CLI::IsMember({"csv", "json", "pgm"}));
  sweep->add_option("--output", opt.output, "output path ('-' = stdout)");
  sweep->add_option("--workers", opt.workers, "worker threads (0 = auto)");
  sweep->callback([&] { opt.workers_set = sweep->count("--workers") > 0; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return 2;
  }

  // default sweep axes reproduce the reference (t, r) region map
  if (sweep->parsed() && opt.axes.empty())
    opt.axes = {"t:0:20:256", "r:0:4:256"};

  try {
    if (metrics->parsed()) return run_metrics(opt);
    if (window->parsed()) return run_window(opt);
    if (sweep->parsed()) return run_sweep(opt);
    return 2;
  } catch (const sqtsim::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
}
