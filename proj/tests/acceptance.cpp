// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion pins its tolerance in code.

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "sphthc/harmonics.hpp"
#include "sphthc/params.hpp"
#include "sphthc/reduced.hpp"
#include "sphthc/reference.hpp"
#include "sphthc/spectrum.hpp"
#include "sphthc/transition.hpp"

using namespace sphthc;
namespace ref = sphthc::reference;

namespace {

constexpr double kPi = std::numbers::pi;
using cd = std::complex<double>;
using Clock = std::chrono::steady_clock;

int g_failures = 0;

struct Criterion {
  int id;
  std::string detail;
  bool ok = true;
  Clock::time_point start = Clock::now();

  explicit Criterion(int id_) : id(id_) {}

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }

  double seconds() const {
    return std::chrono::duration<double>(Clock::now() - start).count();
  }

  void finish(const std::string& label) {
    std::printf("[%s] criterion %2d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL",
                id, label.c_str(), seconds(), detail.empty() ? "" : " -- ",
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
  }
};

Params table_params(double Le, double R, int lc) {
  return Params::at_criticality(7.5, Le, R, ref::preset_aspect_ratio(lc));
}

std::string cell_label(double Le, double R, const char* qty) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s(Le=%g,R=%g)", qty, Le, R);
  return buf;
}

void check_interaction_table(Criterion& c, int lc) {
  const auto rows = lc == 1 ? ref::table1() : ref::table2();
  for (const ref::InteractionRow& row : rows) {
    const Params p = table_params(row.Le, row.R, lc);
    const auto check_cell = [&](const char* qty, double computed,
                                const ref::Cell& cell) {
      if (cell.decimals < 0) return;
      const double tol = ref::cell_tolerance(cell);
      c.require(std::abs(computed - cell.value) <= tol,
                cell_label(row.Le, row.R, qty) + " off reference");
      if (cell.note) {
        // The substituted cells must stay consistent with the q-series sum.
        std::printf("       note: %s %s\n",
                    cell_label(row.Le, row.R, qty).c_str(), cell.note);
      }
    };
    check_cell("d02", d_zero_mode(lc, p), row.d02);
    check_cell("d22", d_higher(lc, 2, p), row.d22);
    if (lc == 2) check_cell("d42", d_higher(lc, 4, p), row.d42);
  }
}

void criterion_1() {
  Criterion c(1);
  check_interaction_table(c, 1);
  c.require(c.seconds() < 1.0, "runtime budget exceeded");
  c.finish("interaction table, l_c = 1 (16 values, max(rel 5e-3, printed ulp))");
}

void criterion_2() {
  Criterion c(2);
  check_interaction_table(c, 2);
  c.require(c.seconds() < 1.0, "runtime budget exceeded");
  c.finish("interaction table, l_c = 2 (24 values, max(rel 5e-3, printed ulp))");
}

void criterion_3() {
  Criterion c(3);
  for (int lc : {1, 2}) {
    const auto rows = lc == 1 ? ref::table3() : ref::table4();
    const double r = ref::preset_aspect_ratio(lc);
    for (const ref::ThresholdRow& row : rows) {
      const double rstar = critical_R_star(lc, row.Le, 7.5, r);
      c.require(std::abs(rstar - row.R_star) <= 1e-2,
                cell_label(row.Le, 0, "R*") + " off reference");
      const double r0 = regime(table_params(row.Le, 620.0, lc)).R0;
      c.require(std::abs(r0 - row.R0) <= 1e-2,
                cell_label(row.Le, 0, "R0") + " off reference");
    }
  }
  c.require(c.seconds() < 5.0, "runtime budget exceeded");
  c.finish("transition thresholds R* and R0 (abs 1e-2)");
}

void criterion_4() {
  Criterion c(4);
  for (const ref::QSeries& s : ref::q_series()) {
    c.require(s.points.size() >= 10, "series too short");
    const double r = ref::preset_aspect_ratio(s.l_c);
    bool all_positive = true;
    for (const ref::SeriesPoint& pt : s.points) {
      const double q =
          transition_number(s.l_c, Params::at_criticality(7.5, s.Le, pt.R, r)).q;
      c.require(std::abs(q - pt.q) <= 1e-3 * std::abs(pt.q),
                cell_label(s.Le, pt.R, s.l_c == 1 ? "q1" : "q2") + " off series");
      all_positive = all_positive && q > 0.0;
    }
    if (s.Le > 1.0) c.require(all_positive, "Le=5 series not all positive");
  }
  c.finish("q-vs-R series, 8 panels at every embedded abscissa (rel 1e-3)");
}

void criterion_5() {
  Criterion c(5);
  c.require(std::abs(threshold_radius(1) - 0.844851) <= 1e-6, "r_1");
  c.require(std::abs(threshold_radius(2) - 1.31566) <= 1e-5, "r_2");
  const double rb = 27.0 * std::pow(kPi, 4) / 4.0;
  for (int lc : {1, 2}) {
    const SigmaCrit sc = sigma_crit(ref::preset_aspect_ratio(lc));
    c.require(sc.l_c == lc, "critical degree");
    c.require(std::abs(sc.sigma_c - rb) <= 1e-12 * rb, "sigma_c");
  }
  c.finish("threshold radii and sigma_c = 27 pi^4 / 4");
}

void criterion_6() {
  Criterion c(6);
  for (const ref::R1Row& row : ref::r1_values()) {
    const double r1 = regime(table_params(row.Le, 620.0, 1)).R1;
    c.require(std::abs(r1 - row.R1) <= 1e-2, cell_label(row.Le, 0, "R1"));
  }
  c.finish("R1 values (abs 1e-2)");
}

void criterion_7() {
  Criterion c(7);
  std::mt19937_64 rng(777);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int accepted = 0;
  while (accepted < 50) {
    const int lc = 1 + static_cast<int>(unit(rng) * 2.0);
    const double r = ref::preset_aspect_ratio(std::min(lc, 2));
    const double Le = std::pow(10.0, -2.0 + 3.0 * unit(rng));  // 1e-2 .. 10
    if (std::abs(Le - 1.0) < 0.05) continue;
    const double Pr = 0.5 + 15.0 * unit(rng);
    const double sc = sigma_crit(r).sigma_c;
    const double R = 0.8 * sc + 0.6 * sc * unit(rng);

    bool regime_ok = true;
    for (double fac : {0.99, 1.0, 1.01}) {
      const Params p = Params::with_sigma(Pr, Le, R, r, fac * sc);
      if (!(regime(p).K > 0.0)) regime_ok = false;
    }
    if (!regime_ok) continue;
    ++accepted;

    for (double fac : {0.99, 1.0, 1.01}) {
      const Params p = Params::with_sigma(Pr, Le, R, r, fac * sc);
      const PesReport rep = verify_pes(p);
      c.require(rep.pattern_ok, "sign pattern at sigma factor " +
                                    std::to_string(fac));
      c.require(rep.max_noncritical_re < 0.0, "noncritical branch unstable");
    }
  }

  // Independent localization of sigma_c through the constant cubic
  // coefficient.
  for (int lc : {1, 2}) {
    const double r = ref::preset_aspect_ratio(lc);
    const double sc = sigma_crit(r).sigma_c;
    double lo = 1.0, hi = 1e5;
    const auto b0_at = [&](double sigma) {
      return dispersion_coefficients(
                 lc, 1, Params::with_sigma(7.5, 0.5, 900.0, r, sigma))
          .b0;
    };
    while (hi - lo > 1e-10 * hi) {
      const double mid = 0.5 * (lo + hi);
      (b0_at(mid) > 0.0 ? lo : hi) = mid;
    }
    c.require(std::abs(0.5 * (lo + hi) - sc) <= 1e-8 * sc,
              "b0 bisection missed sigma_c");
  }
  c.finish("exchange of stabilities on 50 random K>0 sets, +-1% offsets");
}

void criterion_8() {
  Criterion c(8);
  std::mt19937_64 rng(888);
  std::uniform_int_distribution<int> li(1, 8), ni(1, 8);
  std::uniform_real_distribution<double> le(0.02, 5.0), pr(0.2, 15.0),
      rr(0.3, 1.3), rayleigh(50.0, 2500.0), sfac(0.7, 1.3);
  int done = 0;
  double worst_vieta = 0.0, worst_res = 0.0, worst_oracle = 0.0;
  while (done < 1000) {
    double Le = le(rng);
    if (std::abs(Le - 1.0) < 0.02) continue;
    double r = rr(rng);
    double sc;
    try {
      sc = sigma_crit(r).sigma_c;
    } catch (const CriticalAspectRatio&) {
      continue;
    }
    const Params p =
        Params::with_sigma(pr(rng), Le, rayleigh(rng), r, sc * sfac(rng));
    const SpectrumTriple t = eigenvalues(li(rng), ni(rng), p);
    const double scale =
        std::max({1.0, std::abs(t.b0), std::abs(t.b1), std::abs(t.b2)});

    const cd s1 = t.betas[0] + t.betas[1] + t.betas[2];
    const cd s2 = t.betas[0] * t.betas[1] + t.betas[0] * t.betas[2] +
                  t.betas[1] * t.betas[2];
    const cd s3 = t.betas[0] * t.betas[1] * t.betas[2];
    worst_vieta = std::max({worst_vieta, std::abs(s1 + t.b2) / scale,
                            std::abs(s2 - t.b1) / scale,
                            std::abs(s3 + t.b0) / scale});
    for (const cd& b : t.betas) {
      const cd res = ((b + t.b2) * b + t.b1) * b + t.b0;
      worst_res = std::max(worst_res, std::abs(res) / scale);
    }

    Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
    m(0, 2) = -t.b0;
    m(1, 0) = 1.0;
    m(1, 2) = -t.b1;
    m(2, 1) = 1.0;
    m(2, 2) = -t.b2;
    Eigen::EigenSolver<Eigen::Matrix3d> es(m, false);
    std::vector<cd> oracle{es.eigenvalues()[0], es.eigenvalues()[1],
                           es.eigenvalues()[2]};
    std::sort(oracle.begin(), oracle.end(), [](cd a, cd b) {
      if (a.real() != b.real()) return a.real() > b.real();
      return a.imag() > b.imag();
    });
    const double rscale = std::max(1.0, std::abs(oracle[0]));
    for (int i = 0; i < 3; ++i)
      worst_oracle =
          std::max(worst_oracle, std::abs(t.betas[i] - oracle[i]) / rscale);
    ++done;
  }
  c.require(worst_vieta <= 1e-9, "Vieta residual " + std::to_string(worst_vieta));
  c.require(worst_res <= 1e-8, "root residual " + std::to_string(worst_res));
  c.require(worst_oracle <= 1e-8,
            "companion-matrix deviation " + std::to_string(worst_oracle));
  c.finish("spectrum identities and companion oracle on 1000 draws");
}

void criterion_9() {
  Criterion c(9);
  double max_dev = 0.0;
  bool selection_exact = true;
  for (int l1 = 0; l1 <= 8; ++l1)
    for (int l2 = 0; l2 <= 8; ++l2)
      for (int l3 = 0; l3 <= 8; ++l3)
        for (int m1 = -l1; m1 <= l1; ++m1)
          for (int m2 = -l2; m2 <= l2; ++m2)
            for (int m3 = -l3; m3 <= l3; ++m3) {
              const HarmonicIndex a{l1, m1}, b{l2, m2}, cc{l3, m3};
              const double closed = gaunt_closed_form(a, b, cc);
              const cd quad = triple_product_quadrature(a, b, cc);
              max_dev = std::max(max_dev, std::abs(quad - closed));
              const bool violates = (m1 + m2 != m3) ||
                                    l3 < std::abs(l1 - l2) || l3 > l1 + l2 ||
                                    ((l1 + l2 + l3) % 2 != 0);
              if (violates && closed != 0.0) selection_exact = false;
            }
  c.require(max_dev < 1e-12, "max deviation " + std::to_string(max_dev));
  c.require(selection_exact, "selection rules not exact");
  c.finish("harmonics dual oracle, exhaustive degrees <= 8");
}

void criterion_10() {
  Criterion c(10);
  const double r = ref::preset_aspect_ratio(1);
  const Params base = Params::at_criticality(7.5, 0.5, 700.0, r);

  const AttractorCheckReport rep = attractor_check(1, base, 0.5);
  c.require(rep.terminal_radius_sq.size() == 20, "wrong start count");
  c.require(rep.max_rel_radius_dev <= 1e-4,
            "terminal radius deviation " + std::to_string(rep.max_rel_radius_dev));
  c.require(rep.min_direction_spread > 1e-3, "terminal directions collapsed");

  // RK4 order on the logistic comparison.
  AmplitudeState s0 = AmplitudeState::zero(1);
  s0.at(0) = 0.3;
  const double beta = 0.5, q = 1.0, T = 10.0;
  const double y0 = s0.norm_sq();
  const auto terminal_err = [&](double dt) {
    const Trajectory traj = integrate(s0, beta, q, dt, T, 1 << 30);
    const double e = std::exp(2.0 * beta * T);
    const double exact = beta * y0 * e / (beta + q * y0 * (e - 1.0));
    return std::abs(traj.samples.back().norm_sq() - exact);
  };
  const double ratio = terminal_err(0.08) / terminal_err(0.04);
  c.require(ratio >= 13.0 && ratio <= 19.0,
            "dt-halving error ratio " + std::to_string(ratio));

  // Type-II divergence detection.
  AmplitudeState s1 = AmplitudeState::zero(1);
  s1.at(0) = 0.05;
  const Trajectory diverging = integrate(s1, 0.1, -1.0, 0.05, 2000.0, 1 << 30);
  c.require(diverging.diverged, "Type-II divergence missed");

  c.finish("reduced dynamics: attractor radius, RK4 order, divergence");
}

}  // namespace

int main() {
  std::printf("acceptance suite\n");
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  if (g_failures == 0) {
    std::printf("all criteria passed\n");
    return 0;
  }
  std::printf("%d criteria failed\n", g_failures);
  return 1;
}
