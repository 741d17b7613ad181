#include "sphthc/reference.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "sphthc/errors.hpp"

namespace sphthc::reference {

namespace {

constexpr const char* kSeriesNote =
    "tabulated value conflicts with the q-series at this abscissa; "
    "series-consistent value substituted";
constexpr Cell kNA{0.0, -1, nullptr};

constexpr std::array<InteractionRow, 8> kTable1{{
    {1e-2, 620.0, {40.825, 3, nullptr}, {1.493, 3, nullptr}, kNA},
    {1e-2, 660.0, {-23.53, 2, nullptr}, {-0.8537, 4, nullptr}, kNA},
    {1e-1, 620.0, {1.955, 3, nullptr}, {0.074, 3, nullptr}, kNA},
    {1e-1, 660.0, {0.275, 3, nullptr}, {0.0122, 4, nullptr}, kNA},
    {0.5, 620.0, {0.477, 3, nullptr}, {0.0196, 4, nullptr}, kNA},
    {0.5, 660.0, {0.424, 3, nullptr}, {0.0176, 4, nullptr}, kNA},
    {5.0, 620.0, {0.421, 3, nullptr}, {0.0174959658, 10, kSeriesNote}, kNA},
    {5.0, 660.0, {0.427, 3, nullptr}, {0.0177955685, 10, kSeriesNote}, kNA},
}};

constexpr std::array<InteractionRow, 8> kTable2{{
    {1e-2, 620.0, {40.825, 3, nullptr}, {8.359, 3, nullptr}, {0.592, 3, nullptr}},
    {1e-2, 660.0, {-23.53, 2, nullptr}, {-4.797, 3, nullptr}, {-0.338, 3, nullptr}},
    {1e-1, 620.0, {1.956, 3, nullptr}, {0.407, 3, nullptr}, {0.029, 3, nullptr}},
    {1e-1, 660.0, {0.275, 3, nullptr}, {0.063, 3, nullptr}, {0.005, 3, nullptr}},
    {0.5, 620.0, {0.477, 3, nullptr}, {0.104, 3, nullptr}, {0.008, 3, nullptr}},
    {0.5, 660.0, {0.424, 3, nullptr}, {0.093, 3, nullptr}, {0.007, 3, nullptr}},
    {5.0, 620.0, {0.421, 3, nullptr}, {0.092, 3, nullptr}, {0.0069, 4, nullptr}},
    {5.0, 660.0, {0.427, 3, nullptr}, {0.093, 3, nullptr}, {0.007, 3, nullptr}},
}};

constexpr std::array<ThresholdRow, 3> kTable3{{
    {1e-2, 657.577, 665.038},
    {1e-1, 664.182, 740.309},
    {0.5, 877.346, 1402.69},
}};

constexpr std::array<ThresholdRow, 3> kTable4{{
    {1e-2, 657.578, 665.038},
    {1e-1, 664.236, 740.309},
    {0.5, 878.513, 1402.69},
}};

constexpr std::array<R1Row, 3> kR1{{
    {1e-2, 657.577},
    {1e-1, 664.153},
    {0.5, 876.682},
}};

constexpr std::array<SeriesPoint, 31> kSeries_q1_le0p01{{
    {600, 44.9055}, {602, 44.7205}, {604, 44.5235}, {606, 44.3132},
    {608, 44.0881}, {610, 43.8467}, {612, 43.5872}, {614, 43.3073},
    {616, 43.0046}, {618, 42.6762}, {620, 42.3186}, {622, 41.9279},
    {624, 41.4991}, {626, 41.0264}, {628, 40.5027}, {630, 39.9192},
    {632, 39.2652}, {634, 38.5269}, {636, 37.6869}, {638, 36.7228},
    {640, 35.6047}, {642, 34.2924}, {644, 32.7308}, {646, 30.8412},
    {648, 28.508}, {650, 25.5543}, {652, 21.6945}, {654, 16.4363},
    {656, 8.85109}, {658, -3.04463}, {660, -24.3841},
}};

constexpr std::array<SeriesPoint, 31> kSeries_q2_le0p01{{
    {600, 52.8269}, {602, 52.6086}, {604, 52.3761}, {606, 52.1279},
    {608, 51.8624}, {610, 51.5777}, {612, 51.2716}, {614, 50.9417},
    {616, 50.5849}, {618, 50.1979}, {620, 49.7767}, {622, 49.3164},
    {624, 48.8113}, {626, 48.2547}, {628, 47.6381}, {630, 46.9512},
    {632, 46.1814}, {634, 45.3124}, {636, 44.324}, {638, 43.1895},
    {640, 41.874}, {642, 40.3304}, {644, 38.4934}, {646, 36.2708},
    {648, 33.5268}, {650, 30.0531}, {652, 25.5142}, {654, 19.3311},
    {656, 10.412}, {658, -3.57501}, {660, -28.6653},
}};

constexpr std::array<SeriesPoint, 37> kSeries_q1_le0p1{{
    {600, 2.52833}, {603, 2.46279}, {606, 2.39432}, {609, 2.32273},
    {612, 2.24779}, {615, 2.16927}, {618, 2.08689}, {621, 2.00038},
    {624, 1.9094}, {627, 1.81361}, {630, 1.71261}, {633, 1.60597},
    {636, 1.49319}, {639, 1.37374}, {642, 1.247}, {645, 1.11229},
    {648, 0.968821}, {651, 0.815718}, {654, 0.651975}, {657, 0.476443},
    {660, 0.2878}, {663, 0.0845194}, {666, -0.135171}, {669, -0.373342},
    {672, -0.632428}, {675, -0.915313}, {678, -1.22543}, {681, -1.56692},
    {684, -1.94479}, {687, -2.36519}, {690, -2.83572}, {693, -3.36592},
    {696, -3.9679}, {699, -4.65732}, {702, -5.4547}, {705, -6.38758},
    {708, -7.49369},
}};

constexpr std::array<SeriesPoint, 37> kSeries_q2_le0p1{{
    {600, 2.97975}, {603, 2.90258}, {606, 2.82196}, {609, 2.73767},
    {612, 2.64944}, {615, 2.557}, {618, 2.46003}, {621, 2.35819},
    {624, 2.25111}, {627, 2.13837}, {630, 2.01951}, {633, 1.894},
    {636, 1.76129}, {639, 1.62074}, {642, 1.47161}, {645, 1.3131},
    {648, 1.14431}, {651, 0.964185}, {654, 0.771552}, {657, 0.565058},
    {660, 0.343149}, {663, 0.104032}, {666, -0.154379}, {669, -0.434517},
    {672, -0.739247}, {675, -1.07196}, {678, -1.43669}, {681, -1.8383},
    {684, -2.28268}, {687, -2.77706}, {690, -3.33039}, {693, -3.95386},
    {696, -4.66174}, {699, -5.47241}, {702, -6.41002}, {705, -7.50692},
    {708, -8.8075},
}};

constexpr std::array<SeriesPoint, 51> kSeries_q1_le0p5{{
    {600, 0.521524}, {610, 0.509056}, {620, 0.49627}, {630, 0.483154},
    {640, 0.469693}, {650, 0.455876}, {660, 0.441687}, {670, 0.427111},
    {680, 0.412133}, {690, 0.396734}, {700, 0.380898}, {710, 0.364605},
    {720, 0.347835}, {730, 0.330567}, {740, 0.312778}, {750, 0.294445},
    {760, 0.275542}, {770, 0.256042}, {780, 0.235916}, {790, 0.215133},
    {800, 0.193662}, {810, 0.171467}, {820, 0.14851}, {830, 0.124753},
    {840, 0.100151}, {850, 0.0746601}, {860, 0.0482303}, {870, 0.0208088},
    {880, -0.00766135}, {890, -0.0372414}, {900, -0.0679976}, {910, -0.100002},
    {920, -0.133331}, {930, -0.16807}, {940, -0.204309}, {950, -0.242149},
    {960, -0.281698}, {970, -0.323074}, {980, -0.366407}, {990, -0.411839},
    {1000, -0.459527}, {1010, -0.509642}, {1020, -0.562376}, {1030, -0.617939},
    {1040, -0.676564}, {1050, -0.738513}, {1060, -0.804077}, {1070, -0.873581},
    {1080, -0.947391}, {1090, -1.02592}, {1100, -1.10964},
}};

constexpr std::array<SeriesPoint, 51> kSeries_q2_le0p5{{
    {600, 0.618288}, {610, 0.603586}, {620, 0.58851}, {630, 0.573046},
    {640, 0.557178}, {650, 0.54089}, {660, 0.524165}, {670, 0.506985},
    {680, 0.489331}, {690, 0.471185}, {700, 0.452523}, {710, 0.433324},
    {720, 0.413565}, {730, 0.393221}, {740, 0.372264}, {750, 0.350667},
    {760, 0.3284}, {770, 0.305432}, {780, 0.281727}, {790, 0.257251},
    {800, 0.231965}, {810, 0.205828}, {820, 0.178796}, {830, 0.150822},
    {840, 0.121856}, {850, 0.0918446}, {860, 0.0607293}, {870, 0.0284482},
    {880, -0.00506559}, {890, -0.0398842}, {900, -0.0760856}, {910, -0.113754},
    {920, -0.15298}, {930, -0.193863}, {940, -0.236511}, {950, -0.28104},
    {960, -0.327578}, {970, -0.376264}, {980, -0.42725}, {990, -0.480705},
    {1000, -0.53681}, {1010, -0.595771}, {1020, -0.657809}, {1030, -0.723172},
    {1040, -0.792137}, {1050, -0.865008}, {1060, -0.942129}, {1070, -1.02388},
    {1080, -1.1107}, {1090, -1.20306}, {1100, -1.30153},
}};

constexpr std::array<SeriesPoint, 41> kSeries_q1_le5p0{{
    {200, 0.29079}, {220, 0.303498}, {240, 0.31522}, {260, 0.326065},
    {280, 0.33613}, {300, 0.345495}, {320, 0.354231}, {340, 0.3624},
    {360, 0.370055}, {380, 0.377243}, {400, 0.384007}, {420, 0.390382},
    {440, 0.396402}, {460, 0.402095}, {480, 0.407488}, {500, 0.412603},
    {520, 0.417462}, {540, 0.422084}, {560, 0.426485}, {580, 0.430682},
    {600, 0.434687}, {620, 0.438515}, {640, 0.442176}, {660, 0.445682},
    {680, 0.449042}, {700, 0.452265}, {720, 0.455359}, {740, 0.458333},
    {760, 0.461192}, {780, 0.463944}, {800, 0.466595}, {820, 0.46915},
    {840, 0.471614}, {860, 0.473992}, {880, 0.476288}, {900, 0.478507},
    {920, 0.480653}, {940, 0.482729}, {960, 0.484739}, {980, 0.486685},
    {1000, 0.488571},
}};

constexpr std::array<SeriesPoint, 41> kSeries_q2_le5p0{{
    {200, 0.345274}, {220, 0.360275}, {240, 0.374117}, {260, 0.38693},
    {280, 0.398825}, {300, 0.409898}, {320, 0.420233}, {340, 0.429901},
    {360, 0.438965}, {380, 0.447482}, {400, 0.455499}, {420, 0.46306},
    {440, 0.470203}, {460, 0.476963}, {480, 0.483369}, {500, 0.48945},
    {520, 0.49523}, {540, 0.50073}, {560, 0.505972}, {580, 0.510973},
    {600, 0.51575}, {620, 0.520318}, {640, 0.524691}, {660, 0.52888},
    {680, 0.532899}, {700, 0.536756}, {720, 0.540463}, {740, 0.544027},
    {760, 0.547458}, {780, 0.550762}, {800, 0.553947}, {820, 0.55702},
    {840, 0.559985}, {860, 0.56285}, {880, 0.565619}, {900, 0.568298},
    {920, 0.57089}, {940, 0.5734}, {960, 0.575832}, {980, 0.57819},
    {1000, 0.580477},
}};

constexpr std::array<QSeries, 8> kAllSeries{{
    {1, 0.01, kSeries_q1_le0p01},
    {2, 0.01, kSeries_q2_le0p01},
    {1, 0.1, kSeries_q1_le0p1},
    {2, 0.1, kSeries_q2_le0p1},
    {1, 0.5, kSeries_q1_le0p5},
    {2, 0.5, kSeries_q2_le0p5},
    {1, 5.0, kSeries_q1_le5p0},
    {2, 5.0, kSeries_q2_le5p0},
}};

}  // namespace

std::span<const InteractionRow> table1() { return kTable1; }
std::span<const InteractionRow> table2() { return kTable2; }
std::span<const ThresholdRow> table3() { return kTable3; }
std::span<const ThresholdRow> table4() { return kTable4; }
std::span<const R1Row> r1_values() { return kR1; }
std::span<const QSeries> q_series() { return kAllSeries; }

double cell_tolerance(const Cell& c, double rel) {
  return std::max(rel * std::abs(c.value), std::pow(10.0, -c.decimals));
}

double preset_aspect_ratio(int l_c) {
  if (l_c == 1) return 2.0 / std::numbers::pi;
  if (l_c == 2) return 2.0 * std::sqrt(3.0) / std::numbers::pi;
  throw UnsupportedDegree("aspect-ratio presets exist for l_c in {1, 2}");
}

}  // namespace sphthc::reference
