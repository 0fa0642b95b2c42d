#include <cstring>
#include <random>

#include "doctest.h"
#include "sqtsim/analysis.hpp"
#include "support/oracles.hpp"

using namespace sqtsim;
using testsupport::adiff;
using testsupport::qd;

namespace {

bool same_metrics(const SqtMetrics& a, const SqtMetrics& b) {
  return a.fidelity == b.fidelity && a.steering_ab == b.steering_ab &&
         a.steering_ba == b.steering_ba && a.merit == b.merit;
}

}  // namespace

TEST_CASE("point metrics") {
  SUBCASE("fresh resource at r = 1") {
    const auto scenario = testsupport::make_scenario(testsupport::kReferenceSets[0], 1);
    const SqtMetrics m = sqt_metrics(scenario, 0);
    const Real f = 1 / (1 + rmath::exp(Real(-2)));
    const Real s = rmath::log(rmath::cosh(Real(2)));
    CHECK(adiff(m.fidelity, f) <= 1e-25);
    CHECK(adiff(m.steering_ab, s) <= 1e-25);
    CHECK(adiff(m.steering_ba, s) <= 1e-25);
    CHECK(adiff(m.merit, f - Real(2) / 3) <= 1e-25);
    CHECK(m.secure());
  }

  SUBCASE("unentangled resource is never secure") {
    const auto scenario = testsupport::make_scenario(testsupport::kReferenceSets[0], 0);
    const SqtMetrics m = sqt_metrics(scenario, 0);
    CHECK(m.fidelity == Real(0.5));
    CHECK(m.steering_ab == Real(0));
    CHECK(adiff(m.merit, Real(-1) / 6) <= 1e-30);
    CHECK_FALSE(m.secure());
  }

  SUBCASE("strong squeezing is fidelity-limited at t = 0") {
    const auto scenario = testsupport::make_scenario(testsupport::kReferenceSets[0], 3);
    const SqtMetrics m = sqt_metrics(scenario, 0);
    const Real f = 1 / (1 + rmath::exp(Real(-6)));
    CHECK(adiff(m.merit, f - Real(2) / 3) <= 1e-25);
    CHECK(adiff(m.merit, Real(0.3308607101766986)) <= 1e-15);
  }

  SUBCASE("the merit is the smallest margin") {
    std::mt19937_64 rng(61);
    std::uniform_real_distribution<double> ur(0, 4), ut(0, 20);
    for (int trial = 0; trial < 24; ++trial) {
      SweepPoint p;
      p.initial_squeezing = ur(rng);
      p.time = ut(rng);
      const SqtMetrics m = evaluate_point(p);
      CHECK(qd(m.merit) <= qd(m.steering_ab));
      CHECK(qd(m.merit) <= qd(m.steering_ba));
      CHECK(qd(m.merit) <= qd(m.fidelity - Real(2) / 3));
      const Real least = rmath::min(
          rmath::min(m.steering_ab, m.steering_ba), m.fidelity - Real(2) / 3);
      CHECK(m.merit == least);
      CHECK(m.secure() == (qd(m.merit) > 0));
    }
  }

  SUBCASE("metrics at t = 0 are independent of the bath") {
    const SqtMetrics a = sqt_metrics(
        EvolutionScenario(2, BathParams(1, Real(0.1), Real(0.1))), 0);
    const SqtMetrics b = sqt_metrics(
        EvolutionScenario(2, BathParams(Real(0.3), Real(0.8), Real(0.35))), 0);
    CHECK(same_metrics(a, b));
  }
}

TEST_CASE("asymptotic states never support secure teleportation") {
  for (const auto& set : testsupport::kReferenceSets) {
    const auto scenario = testsupport::make_scenario(set);
    const SqtMetrics at_infinity = resource_metrics(scenario.asymptotic());
    CHECK(at_infinity.steering_ab == Real(0));
    CHECK(qd(at_infinity.merit) < 0);
    const SqtMetrics late = sqt_metrics(scenario, 50 / Real(set.gamma));
    CHECK(qd(late.merit) < 0);
  }
}

TEST_CASE("secure time window") {
  const auto ref = testsupport::kReferenceSets[0];  // r-scan parameters

  SUBCASE("reference parameters give a single window starting at zero") {
    const auto scenario = testsupport::make_scenario(ref);
    const TimeWindow window = sqt_window(scenario, 20);
    REQUIRE(window.intervals.size() == 1);
    CHECK(window.intervals[0].begin == Real(0));

    const auto oracle = testsupport::dense_window_oracle(
        [&](Real t) { return sqt_metrics(scenario, t).merit; }, Real(20),
        20000, Real(1e-9));
    REQUIRE(oracle.size() == 1);
    CHECK(adiff(window.intervals[0].begin, oracle[0].first) <= 1e-6);
    CHECK(adiff(window.intervals[0].end, oracle[0].second) <= 1e-6);
  }

  SUBCASE("no window for a nearly unentangled resource") {
    const auto scenario = testsupport::make_scenario(ref, 0.01);
    CHECK(sqt_window(scenario, 20).empty());
  }

  SUBCASE("stationary vacuum scenario has a constant negative merit") {
    const EvolutionScenario frozen(0, BathParams(0, 0, Real(0.1)));
    CHECK(sqt_window(frozen, 20).empty());
  }

  SUBCASE("boundaries are stable against a denser bracketing grid") {
    const auto scenario = testsupport::make_scenario(ref);
    const TimeWindow coarse = sqt_window(scenario, 20, 512, Real(1e-8));
    const TimeWindow fine = sqt_window(scenario, 20, 4096, Real(1e-8));
    REQUIRE(coarse.intervals.size() == fine.intervals.size());
    for (std::size_t k = 0; k < coarse.intervals.size(); ++k) {
      CHECK(adiff(coarse.intervals[k].begin, fine.intervals[k].begin) <= 1e-7);
      CHECK(adiff(coarse.intervals[k].end, fine.intervals[k].end) <= 1e-7);
    }
  }

  SUBCASE("window length grows with the initial squeezing") {
    Real prev = -1;
    for (double r : {1.0, 2.0, 3.0, 4.0}) {
      const auto scenario = testsupport::make_scenario(ref, r);
      const TimeWindow window = sqt_window(scenario, 20);
      CHECK(qd(window.total_length()) >= qd(prev) - 2e-6);
      prev = window.total_length();

      // intervals are sorted, disjoint, nonempty, and secure inside
      Real last_end = -1;
      for (const TimeInterval& iv : window.intervals) {
        CHECK(qd(iv.begin) > qd(last_end));
        CHECK(qd(iv.end) > qd(iv.begin));
        const Real mid = (iv.begin + iv.end) / 2;
        CHECK(sqt_metrics(scenario, mid).merit > Real(0));
        last_end = iv.end;
      }
    }
  }

  SUBCASE("domain violations are rejected") {
    const auto scenario = testsupport::make_scenario(ref);
    CHECK_THROWS_WITH_AS(sqt_window(scenario, 0), "t_max must be positive",
                         DomainError);
    CHECK_THROWS_WITH_AS(sqt_window(scenario, Real(-1)),
                         "t_max must be positive", DomainError);
    CHECK_THROWS_AS(sqt_window(scenario, 20, 15), DomainError);
    CHECK_THROWS_AS(sqt_window(scenario, 20, 512, 0), DomainError);
  }
}

TEST_CASE("parameter names round-trip") {
  for (auto p : {SweepParameter::Time, SweepParameter::InitialSqueezing,
                 SweepParameter::ReservoirSqueezing, SweepParameter::Temperature,
                 SweepParameter::DecayRate})
    CHECK(parse_parameter(parameter_name(p)) == p);
  CHECK_FALSE(parse_parameter("q").has_value());
  CHECK_FALSE(parse_parameter("G").has_value());
}

TEST_CASE("2-D parameter sweep") {
  AxisSpec time_axis{SweepParameter::Time, 0, 20, 5};
  AxisSpec squeeze_axis{SweepParameter::InitialSqueezing, 0, 4, 4};
  const SweepPoint base;

  SUBCASE("grid shape and cell values") {
    const RegionMap map = sweep_2d(base, time_axis, squeeze_axis, 1);
    CHECK(map.cells.size() == 20);
    CHECK(map.mask.size() == 20);
    for (int i1 = 0; i1 < 5; ++i1)
      for (int i2 = 0; i2 < 4; ++i2) {
        SweepPoint p = base;
        p.time = time_axis.value_at(i1);
        p.initial_squeezing = squeeze_axis.value_at(i2);
        CHECK(same_metrics(map.at(i1, i2), evaluate_point(p)));
        CHECK(map.secure_at(i1, i2) == map.at(i1, i2).secure());
      }
    CHECK(time_axis.value_at(0) == Real(0));
    CHECK(time_axis.value_at(4) == Real(20));
  }

  SUBCASE("deterministic and independent of the worker count") {
    const RegionMap serial = sweep_2d(base, time_axis, squeeze_axis, 1);
    const RegionMap threaded = sweep_2d(base, time_axis, squeeze_axis, 3);
    const RegionMap defaulted = sweep_2d(base, time_axis, squeeze_axis);
    REQUIRE(serial.cells.size() == threaded.cells.size());
    for (std::size_t k = 0; k < serial.cells.size(); ++k) {
      CHECK(same_metrics(serial.cells[k], threaded.cells[k]));
      CHECK(same_metrics(serial.cells[k], defaulted.cells[k]));
      CHECK(serial.mask[k] == threaded.mask[k]);
    }
  }

  SUBCASE("axis validation") {
    CHECK_THROWS_AS(sweep_2d(base, time_axis, time_axis), DomainError);
    AxisSpec one_point = squeeze_axis;
    one_point.count = 1;
    CHECK_THROWS_AS(sweep_2d(base, time_axis, one_point), DomainError);
    AxisSpec negative_r = squeeze_axis;
    negative_r.min = -1;
    CHECK_THROWS_AS(sweep_2d(base, time_axis, negative_r), DomainError);
    AxisSpec zero_gamma{SweepParameter::DecayRate, 0, 1, 8};
    CHECK_THROWS_AS(sweep_2d(base, time_axis, zero_gamma), DomainError);
    AxisSpec empty_range = squeeze_axis;
    empty_range.min = 3;
    empty_range.max = 1;
    CHECK_THROWS_AS(sweep_2d(base, time_axis, empty_range), DomainError);
  }
}

TEST_CASE("metrics report carries the derived bath quantities") {
  SweepPoint p;
  p.initial_squeezing = 1;
  const MetricsReport report = evaluate_report(p);
  const BathParams bath(p.temperature, p.reservoir_squeezing, p.decay_rate);
  CHECK(report.thermal_occupation == bath.thermal_occupation());
  CHECK(report.moments.mean_occupation == bath.moments().mean_occupation);
  CHECK(report.moments.squeeze_correlation ==
        bath.moments().squeeze_correlation);
  CHECK(same_metrics(report.metrics, evaluate_point(p)));
}
