#pragma once

#include <iosfwd>
#include <string>

#include "sqtsim/analysis.hpp"

namespace sqtsim {

/// Decimal text with `significant` digits, C locale, "." separator.
std::string format_real(Real v, int significant = 12);

// Flat key=value record: F, S_ab, S_ba, L, n_th, N, M, secure.
void write_metrics_text(std::ostream& os, const MetricsReport& report);
void write_metrics_json(std::ostream& os, const MetricsReport& report);

// One "begin end" line per interval; "no SQT window" when empty.
void write_window_text(std::ostream& os, const TimeWindow& window);
void write_window_json(std::ostream& os, const TimeWindow& window);

// Header "<axis1>,<axis2>,F,S_ab,S_ba,L,secure", then one row per cell in
// row-major order (axis1 major). LF line endings.
void write_region_csv(std::ostream& os, const RegionMap& map);

// Axes metadata plus nested arrays (axis1-major) per field.
void write_region_json(std::ostream& os, const RegionMap& map);

// Plain PGM (P2, maxval 255): 255 = secure, 0 = not; axis1 runs left to
// right, axis2 top-down descending so the image is plot-oriented.
void write_region_pgm(std::ostream& os, const RegionMap& map);

}  // namespace sqtsim
