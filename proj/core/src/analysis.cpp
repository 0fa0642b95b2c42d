#include "sqtsim/analysis.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

namespace sqtsim {

SqtMetrics resource_metrics(const TwoModeCovariance& resource) {
  SqtMetrics m;
  m.fidelity = fidelity_coherent(resource);
  const SteeringPair s = steering_both(resource);
  m.steering_ab = s.alice_to_bob;
  m.steering_ba = s.bob_to_alice;
  const Real fidelity_margin = m.fidelity - Real(2) / 3;
  m.merit = rmath::min(rmath::min(m.steering_ab, m.steering_ba),
                       fidelity_margin);
  return m;
}

SqtMetrics sqt_metrics(const EvolutionScenario& scenario, Real t) {
  return resource_metrics(scenario.covariance_at(t));
}

Real TimeWindow::total_length() const {
  Real sum = 0;
  for (const TimeInterval& iv : intervals) sum += iv.length();
  return sum;
}

namespace {

// Bisects a secure/insecure flip inside [lo, hi] down to width < tol.
template <typename Pred>
Real refine_boundary(Pred&& secure, Real lo, Real hi, bool lo_secure,
                     Real tol) {
  for (int iter = 0; iter < 256 && hi - lo >= tol; ++iter) {
    const Real mid = (lo + hi) / 2;
    if (secure(mid) == lo_secure)
      lo = mid;
    else
      hi = mid;
  }
  return (lo + hi) / 2;
}

}  // namespace

TimeWindow sqt_window(const EvolutionScenario& scenario, Real t_max,
                      int grid_points, Real refine_tol) {
  if (!(t_max > 0)) throw DomainError("t_max must be positive");
  if (grid_points < 16) throw DomainError("grid_points must be at least 16");
  if (!(refine_tol > 0)) throw DomainError("refine_tol must be positive");

  // strict inequality: merit exactly 0 counts as not secure
  const auto secure = [&](Real t) {
    return sqt_metrics(scenario, t).merit > 0;
  };

  std::vector<Real> t(grid_points);
  std::vector<char> sec(grid_points);
  for (int i = 0; i < grid_points; ++i) {
    t[i] = t_max * Real(i) / Real(grid_points - 1);
    sec[i] = secure(t[i]) ? 1 : 0;
  }

  TimeWindow window;
  window.tolerance = refine_tol;
  bool open = sec[0] != 0;
  Real start = 0;
  for (int i = 0; i + 1 < grid_points; ++i) {
    if (sec[i] == sec[i + 1]) continue;
    const Real boundary =
        refine_boundary(secure, t[i], t[i + 1], sec[i] != 0, refine_tol);
    if (open) {
      window.intervals.push_back({start, boundary});
      open = false;
    } else {
      start = boundary;
      open = true;
    }
  }
  if (open) window.intervals.push_back({start, t_max});
  return window;
}

const char* parameter_name(SweepParameter p) {
  switch (p) {
    case SweepParameter::Time:
      return "t";
    case SweepParameter::InitialSqueezing:
      return "r";
    case SweepParameter::ReservoirSqueezing:
      return "R";
    case SweepParameter::Temperature:
      return "T";
    case SweepParameter::DecayRate:
      return "gamma";
  }
  return "?";
}

std::optional<SweepParameter> parse_parameter(std::string_view name) {
  if (name == "t") return SweepParameter::Time;
  if (name == "r") return SweepParameter::InitialSqueezing;
  if (name == "R") return SweepParameter::ReservoirSqueezing;
  if (name == "T") return SweepParameter::Temperature;
  if (name == "gamma") return SweepParameter::DecayRate;
  return std::nullopt;
}

SweepPoint with_parameter(SweepPoint base, SweepParameter which, Real value) {
  switch (which) {
    case SweepParameter::Time:
      base.time = value;
      break;
    case SweepParameter::InitialSqueezing:
      base.initial_squeezing = value;
      break;
    case SweepParameter::ReservoirSqueezing:
      base.reservoir_squeezing = value;
      break;
    case SweepParameter::Temperature:
      base.temperature = value;
      break;
    case SweepParameter::DecayRate:
      base.decay_rate = value;
      break;
  }
  return base;
}

SqtMetrics evaluate_point(const SweepPoint& point) {
  const EvolutionScenario scenario(
      point.initial_squeezing,
      BathParams(point.temperature, point.reservoir_squeezing,
                 point.decay_rate));
  return sqt_metrics(scenario, point.time);
}

MetricsReport evaluate_report(const SweepPoint& point) {
  const BathParams bath(point.temperature, point.reservoir_squeezing,
                        point.decay_rate);
  MetricsReport report;
  report.point = point;
  report.thermal_occupation = bath.thermal_occupation();
  report.moments = bath.moments();
  report.metrics =
      sqt_metrics(EvolutionScenario(point.initial_squeezing, bath), point.time);
  return report;
}

Real AxisSpec::value_at(int i) const {
  return min + (max - min) * Real(i) / Real(count - 1);
}

namespace {

void validate_axis(const AxisSpec& axis) {
  const char* name = parameter_name(axis.parameter);
  if (axis.count < 2)
    throw DomainError(std::string("axis ") + name +
                      " needs at least 2 grid points");
  if (!(axis.min <= axis.max))
    throw DomainError(std::string("axis ") + name + " has an empty range");
  if (axis.parameter == SweepParameter::DecayRate) {
    if (!(axis.min > 0))
      throw DomainError("axis gamma must stay strictly positive");
  } else if (axis.min < 0) {
    throw DomainError(std::string("axis ") + name +
                      " extends below its domain");
  }
}

}  // namespace

RegionMap sweep_2d(const SweepPoint& base, const AxisSpec& axis1,
                   const AxisSpec& axis2, int workers) {
  if (axis1.parameter == axis2.parameter)
    throw DomainError("sweep axes must name two distinct parameters");
  validate_axis(axis1);
  validate_axis(axis2);

  RegionMap map;
  map.axis1 = axis1;
  map.axis2 = axis2;
  const std::size_t total =
      static_cast<std::size_t>(axis1.count) * axis2.count;
  map.cells.resize(total);
  map.mask.resize(total);

  const auto eval_cell = [&](std::size_t index) {
    const int i1 = static_cast<int>(index / axis2.count);
    const int i2 = static_cast<int>(index % axis2.count);
    SweepPoint p = with_parameter(base, axis1.parameter, axis1.value_at(i1));
    p = with_parameter(p, axis2.parameter, axis2.value_at(i2));
    try {
      map.cells[index] = evaluate_point(p);
    } catch (const std::exception& e) {
      throw DomainError("sweep node (" + std::to_string(i1) + "," +
                        std::to_string(i2) + "): " + e.what());
    }
    map.mask[index] = map.cells[index].secure() ? 1 : 0;
  };

  int thread_count = workers;
  if (thread_count <= 0) {
    thread_count = static_cast<int>(std::thread::hardware_concurrency());
    if (thread_count < 1) thread_count = 1;
  }

  if (thread_count == 1) {
    for (std::size_t i = 0; i < total; ++i) eval_cell(i);
    return map;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto worker = [&] {
    for (;;) {
      const std::size_t index = next.fetch_add(1);
      if (index >= total) return;
      try {
        eval_cell(index);
      } catch (...) {
        std::scoped_lock lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(thread_count);
  for (int i = 0; i < thread_count; ++i) pool.emplace_back(worker);
  for (std::thread& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return map;
}

}  // namespace sqtsim
