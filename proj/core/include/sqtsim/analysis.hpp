#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "sqtsim/bath.hpp"
#include "sqtsim/dynamics.hpp"
#include "sqtsim/steering.hpp"
#include "sqtsim/teleportation.hpp"

namespace sqtsim {

/// Fidelity, both steering directions, and the figure of merit
/// L = min{S_ab, S_ba, F - 2/3} at one parameter point.
struct SqtMetrics {
  Real fidelity{0};
  Real steering_ab{0};
  Real steering_ba{0};
  Real merit{0};

  bool secure() const { return merit > 0; }
};

/// Metrics of a given resource covariance.
SqtMetrics resource_metrics(const TwoModeCovariance& resource);

/// Metrics of the evolved resource at time t >= 0.
SqtMetrics sqt_metrics(const EvolutionScenario& scenario, Real t);

struct TimeInterval {
  Real begin{0};
  Real end{0};

  Real length() const { return end - begin; }
};

/// Disjoint, sorted intervals on which the merit is strictly positive.
struct TimeWindow {
  std::vector<TimeInterval> intervals;
  Real tolerance{0};

  bool empty() const { return intervals.empty(); }
  Real total_length() const;
};

/// Samples the merit on a uniform grid over [0, t_max], brackets every sign
/// change, and refines each boundary by bisection to within refine_tol.
/// Makes no monotonicity assumption; multiple intervals are returned as
/// found. Throws DomainError for t_max <= 0, grid_points < 16, or
/// refine_tol <= 0.
TimeWindow sqt_window(const EvolutionScenario& scenario, Real t_max,
                      int grid_points = 512, Real refine_tol = 1e-6);

enum class SweepParameter {
  Time,                // t
  InitialSqueezing,    // r
  ReservoirSqueezing,  // R
  Temperature,         // T
  DecayRate,           // gamma
};

const char* parameter_name(SweepParameter p);
std::optional<SweepParameter> parse_parameter(std::string_view name);

/// One full parameter point; sweep axes override two of the fields.
/// Defaults reproduce the reference region map.
struct SweepPoint {
  Real initial_squeezing = 3;       // r
  Real reservoir_squeezing = 0.1;   // R
  Real temperature = 1;             // T
  Real decay_rate = 0.1;            // gamma
  Real time = 0;                    // t
};

SweepPoint with_parameter(SweepPoint base, SweepParameter which, Real value);

/// Builds the scenario for the point and evaluates the metrics at its time.
SqtMetrics evaluate_point(const SweepPoint& point);

/// Point evaluation bundled with the derived bath quantities, for reporting.
struct MetricsReport {
  SweepPoint point;
  Real thermal_occupation{0};
  BathMoments moments;
  SqtMetrics metrics;
};

MetricsReport evaluate_report(const SweepPoint& point);

struct AxisSpec {
  SweepParameter parameter{SweepParameter::Time};
  Real min{0};
  Real max{0};
  int count = 256;

  Real value_at(int i) const;
};

/// Dense 2-D scan: metrics plus the secure mask on an axis1 x axis2 grid.
/// Cells are stored row-major with axis1 as the major index.
struct RegionMap {
  AxisSpec axis1;
  AxisSpec axis2;
  std::vector<SqtMetrics> cells;
  std::vector<std::uint8_t> mask;  // 1 where merit > 0

  const SqtMetrics& at(int i1, int i2) const {
    return cells[static_cast<std::size_t>(i1) * axis2.count + i2];
  }
  bool secure_at(int i1, int i2) const {
    return mask[static_cast<std::size_t>(i1) * axis2.count + i2] != 0;
  }
};

/// Evaluates every grid node with all other parameters fixed from the base
/// point. Cells are independent and are distributed across `workers` threads
/// (0 = hardware concurrency); the result is identical for any worker count.
/// Throws DomainError for overlapping axes, counts < 2, or axis ranges
/// outside the parameter domains.
RegionMap sweep_2d(const SweepPoint& base, const AxisSpec& axis1,
                   const AxisSpec& axis2, int workers = 0);

}  // namespace sqtsim
