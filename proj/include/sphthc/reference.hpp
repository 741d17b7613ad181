#pragma once

#include <cstddef>
#include <span>

namespace sphthc::reference {

// Reference values the `tables` command and the acceptance suite reproduce.
// Values carry the number of printed decimals so comparisons can allow one
// unit in the last printed place on top of the relative tolerance.

struct Cell {
  double value;
  int decimals;
  // Set when the tabulated value conflicts with the reference q-series at
  // the same abscissa; `value` then holds the series-consistent number.
  const char* note;
};

struct InteractionRow {
  double Le;
  double R;
  Cell d02;
  Cell d22;
  Cell d42;  // decimals < 0 marks "not applicable" (l_c = 1)
};

struct ThresholdRow {
  double Le;
  double R_star;  // abs tolerance 1e-2
  double R0;      // abs tolerance 1e-2
};

struct R1Row {
  double Le;
  double R1;  // abs tolerance 1e-2
};

struct SeriesPoint {
  double R;
  double q;
};

struct QSeries {
  int l_c;
  double Le;
  std::span<const SeriesPoint> points;  // rel tolerance 1e-3
};

std::span<const InteractionRow> table1();  // l_c = 1, r = 2/pi, Pr = 7.5
std::span<const InteractionRow> table2();  // l_c = 2, r = 2 sqrt(3)/pi
std::span<const ThresholdRow> table3();    // l_c = 1
std::span<const ThresholdRow> table4();    // l_c = 2
std::span<const R1Row> r1_values();
std::span<const QSeries> q_series();       // 8 series, Pr = 7.5

// max(rel * |value|, one unit in the last printed decimal).
double cell_tolerance(const Cell& c, double rel = 5e-3);

// The tabulated aspect-ratio presets: 2/pi for l_c = 1, 2 sqrt(3)/pi for 2.
double preset_aspect_ratio(int l_c);

}  // namespace sphthc::reference
