#include "sqtsim/io.hpp"

#include <cstdio>
#include <ostream>

#include "json.hpp"

namespace sqtsim {

std::string format_real(Real v, int significant) {
  double d = to_double(v);
  if (d == 0.0) d = 0.0;  // never print "-0"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant, d);
  return buf;
}

namespace {

nlohmann::json metrics_json(const SqtMetrics& m) {
  return {{"F", to_double(m.fidelity)},
          {"S_ab", to_double(m.steering_ab)},
          {"S_ba", to_double(m.steering_ba)},
          {"L", to_double(m.merit)},
          {"secure", m.secure()}};
}

nlohmann::json point_json(const SweepPoint& p) {
  return {{"r", to_double(p.initial_squeezing)},
          {"R", to_double(p.reservoir_squeezing)},
          {"T", to_double(p.temperature)},
          {"gamma", to_double(p.decay_rate)},
          {"t", to_double(p.time)}};
}

nlohmann::json axis_json(const AxisSpec& a) {
  return {{"name", parameter_name(a.parameter)},
          {"min", to_double(a.min)},
          {"max", to_double(a.max)},
          {"count", a.count}};
}

}  // namespace

void write_metrics_text(std::ostream& os, const MetricsReport& report) {
  os << "F=" << format_real(report.metrics.fidelity) << '\n'
     << "S_ab=" << format_real(report.metrics.steering_ab) << '\n'
     << "S_ba=" << format_real(report.metrics.steering_ba) << '\n'
     << "L=" << format_real(report.metrics.merit) << '\n'
     << "n_th=" << format_real(report.thermal_occupation) << '\n'
     << "N=" << format_real(report.moments.mean_occupation) << '\n'
     << "M=" << format_real(report.moments.squeeze_correlation) << '\n'
     << "secure=" << (report.metrics.secure() ? "true" : "false") << '\n';
}

void write_metrics_json(std::ostream& os, const MetricsReport& report) {
  nlohmann::json j = metrics_json(report.metrics);
  j["n_th"] = to_double(report.thermal_occupation);
  j["N"] = to_double(report.moments.mean_occupation);
  j["M"] = to_double(report.moments.squeeze_correlation);
  j["params"] = point_json(report.point);
  os << j.dump(2) << '\n';
}

void write_window_text(std::ostream& os, const TimeWindow& window) {
  if (window.empty()) {
    os << "no SQT window\n";
    return;
  }
  for (const TimeInterval& iv : window.intervals)
    os << format_real(iv.begin) << ' ' << format_real(iv.end) << '\n';
}

void write_window_json(std::ostream& os, const TimeWindow& window) {
  nlohmann::json intervals = nlohmann::json::array();
  for (const TimeInterval& iv : window.intervals)
    intervals.push_back({to_double(iv.begin), to_double(iv.end)});
  const nlohmann::json j = {{"intervals", intervals},
                            {"tolerance", to_double(window.tolerance)}};
  os << j.dump(2) << '\n';
}

void write_region_csv(std::ostream& os, const RegionMap& map) {
  os << parameter_name(map.axis1.parameter) << ','
     << parameter_name(map.axis2.parameter) << ",F,S_ab,S_ba,L,secure\n";
  for (int i1 = 0; i1 < map.axis1.count; ++i1) {
    const std::string v1 = format_real(map.axis1.value_at(i1));
    for (int i2 = 0; i2 < map.axis2.count; ++i2) {
      const SqtMetrics& m = map.at(i1, i2);
      os << v1 << ',' << format_real(map.axis2.value_at(i2)) << ','
         << format_real(m.fidelity) << ',' << format_real(m.steering_ab)
         << ',' << format_real(m.steering_ba) << ',' << format_real(m.merit)
         << ',' << (map.secure_at(i1, i2) ? '1' : '0') << '\n';
    }
  }
}

void write_region_json(std::ostream& os, const RegionMap& map) {
  nlohmann::json fidelity, s_ab, s_ba, merit, secure;
  for (int i1 = 0; i1 < map.axis1.count; ++i1) {
    nlohmann::json frow, arow, brow, lrow, srow;
    for (int i2 = 0; i2 < map.axis2.count; ++i2) {
      const SqtMetrics& m = map.at(i1, i2);
      frow.push_back(to_double(m.fidelity));
      arow.push_back(to_double(m.steering_ab));
      brow.push_back(to_double(m.steering_ba));
      lrow.push_back(to_double(m.merit));
      srow.push_back(map.secure_at(i1, i2));
    }
    fidelity.push_back(frow);
    s_ab.push_back(arow);
    s_ba.push_back(brow);
    merit.push_back(lrow);
    secure.push_back(srow);
  }
  const nlohmann::json j = {{"axis1", axis_json(map.axis1)},
                            {"axis2", axis_json(map.axis2)},
                            {"F", fidelity},
                            {"S_ab", s_ab},
                            {"S_ba", s_ba},
                            {"L", merit},
                            {"secure", secure}};
  os << j.dump(2) << '\n';
}

void write_region_pgm(std::ostream& os, const RegionMap& map) {
  os << "P2\n" << map.axis1.count << ' ' << map.axis2.count << "\n255\n";
  for (int i2 = map.axis2.count - 1; i2 >= 0; --i2) {
    for (int i1 = 0; i1 < map.axis1.count; ++i1) {
      os << (map.secure_at(i1, i2) ? "255" : "0");
      os << (i1 + 1 < map.axis1.count ? ' ' : '\n');
    }
  }
}

}  // namespace sqtsim
