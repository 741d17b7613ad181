#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "sphthc/params.hpp"

using namespace sphthc;

namespace {
constexpr double kPi = std::numbers::pi;
const double kSigmaRB = 27.0 * kPi * kPi * kPi * kPi / 4.0;
}  // namespace

TEST_SUITE("params") {

TEST_CASE("wavenumber squared") {
  CHECK(wavenumber_sq(1, 2.0 / kPi) == doctest::Approx(kPi * kPi / 2.0).epsilon(1e-15));
  CHECK(wavenumber_sq(2, 2.0 * std::sqrt(3.0) / kPi) ==
        doctest::Approx(kPi * kPi / 2.0).epsilon(1e-15));
  CHECK(wavenumber_sq(0, 1.0) == 0.0);
  CHECK_THROWS_AS(wavenumber_sq(1, 0.0), InvalidParams);
}

TEST_CASE("threshold radii") {
  CHECK(threshold_radius(0) == 0.0);
  CHECK(std::abs(threshold_radius(1) - 0.844851) < 1e-6);
  CHECK(std::abs(threshold_radius(2) - 1.31566) < 1e-5);
}

TEST_CASE("critical degree selection") {
  CHECK(critical_degree(2.0 / kPi) == 1);
  CHECK(critical_degree(2.0 * std::sqrt(3.0) / kPi) == 2);
  // Exactly on a crossing radius the degree is ambiguous.
  CHECK_THROWS_AS(critical_degree(threshold_radius(1)), CriticalAspectRatio);
  CHECK_THROWS_AS(critical_degree(threshold_radius(2) + 5e-10),
                  CriticalAspectRatio);
}

TEST_CASE("sigma_crit closed form and brute force") {
  const SigmaCrit a = sigma_crit(2.0 / kPi);
  CHECK(a.l_c == 1);
  CHECK(std::abs(a.sigma_c - kSigmaRB) <= 1e-12 * kSigmaRB);
  const SigmaCrit b = sigma_crit(2.0 * std::sqrt(3.0) / kPi);
  CHECK(b.l_c == 2);
  CHECK(std::abs(b.sigma_c - kSigmaRB) <= 1e-12 * kSigmaRB);

  // Brute-force scan oracle at an arbitrary aspect ratio.
  const double r = 0.5;
  double best = 1e300;
  for (int l = 1; l <= 100; ++l) {
    const double a2 = wavenumber_sq(l, r);
    const double v = std::pow(kPi * kPi + a2, 3) / a2;
    best = std::min(best, v);
  }
  CHECK(sigma_crit(r).sigma_c == doctest::Approx(best).epsilon(1e-14));
}

TEST_CASE("critical degree matches the bracketing radii" *
          doctest::description("property over random aspect ratios")) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> unit(0.01, 0.99);
  for (int l = 1; l <= 8; ++l) {
    const double lo = threshold_radius(l - 1);
    const double hi = threshold_radius(l);
    for (int rep = 0; rep < 50; ++rep) {
      const double r = lo + (hi - lo) * unit(rng);
      CHECK(sigma_crit(r).l_c == l);
      CHECK(sigma_crit(r).sigma_c >= kSigmaRB * (1.0 - 1e-14));
    }
  }
}

TEST_CASE("criticality constructor pins sigma") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> le(0.01, 5.0);
  std::uniform_real_distribution<double> rr(0.3, 1.3);
  std::uniform_real_distribution<double> rayleigh(100.0, 2000.0);
  for (int rep = 0; rep < 200; ++rep) {
    double Le = le(rng);
    if (std::abs(Le - 1.0) < 0.05) Le += 0.1;
    double r = rr(rng);
    double sc;
    try {
      sc = sigma_crit(r).sigma_c;
    } catch (const CriticalAspectRatio&) {
      continue;
    }
    const Params p = Params::at_criticality(7.5, Le, rayleigh(rng), r);
    CHECK(std::abs(p.sigma() - sc) <= 1e-12 * sc);
    CHECK(p.Rtilde >= 0.0);
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(Params::make(7.5, 1.0, 600.0, 1.0, 0.6), InvalidParams);
  CHECK_THROWS_AS(Params::make(0.0, 0.5, 600.0, 1.0, 0.6), InvalidParams);
  CHECK_THROWS_AS(Params::make(7.5, 0.5, 600.0, -1.0, 0.6), InvalidParams);
  CHECK_THROWS_AS(Params::make(7.5, 0.5, 600.0, 1.0, -0.6), InvalidParams);
  CHECK_THROWS_AS(Params::make(7.5, 0.5, 600.0, 1.0, 0.6, 2), InvalidParams);
}

TEST_CASE("regime thresholds against tabulated values") {
  const double r = 2.0 / kPi;
  const RegimeReport a = regime(Params::at_criticality(7.5, 0.01, 620.0, r));
  CHECK(std::abs(a.R0 - 665.038) <= 1e-2);
  CHECK(std::abs(a.R1 - 657.577) <= 1e-2);
  CHECK(a.regime == Regime::SteadyMultiEquilibria);

  const RegimeReport b = regime(Params::at_criticality(7.5, 5.0, 300.0, r));
  CHECK(b.K > 0.0);
  CHECK(b.regime == Regime::SteadyMultiEquilibria);
  CHECK(b.R1 < 0.0);
}

TEST_CASE("eta thresholds") {
  const double r = 2.0 / kPi;
  const Params p = Params::at_criticality(7.5, 0.01, 620.0, r);
  const RegimeReport rep = regime(p);
  CHECK(rep.eta == doctest::Approx(p.R - (p.Pr + p.Le) / (p.Pr + 1.0) *
                                             p.rtilde_signed()));
  CHECK(rep.eta_c == doctest::Approx((7.5 + 0.01) * 1.01 * rep.sigma_c / 7.5));
}

TEST_CASE("K sign chart at criticality" *
          doctest::description("K > 0 iff Le > 1 or R < R0")) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> le(0.02, 3.0);
  std::uniform_real_distribution<double> rayleigh(50.0, 3000.0);
  const double r = 2.0 / kPi;
  for (int rep = 0; rep < 500; ++rep) {
    double Le = le(rng);
    if (std::abs(Le - 1.0) < 0.02) continue;
    const double R = rayleigh(rng);
    const RegimeReport reg = regime(Params::at_criticality(7.5, Le, R, r));
    const bool expect_positive = Le > 1.0 || R < reg.R0;
    if (std::abs(R - reg.R0) < 1e-6) continue;  // on the dividing line
    CHECK(std::signbit(reg.K) == !expect_positive);
    if (Le < 1.0) {
      CHECK(reg.R0 > reg.R1);
      CHECK(reg.R1 > 0.0);
    } else {
      CHECK(reg.R1 < 0.0);
    }
  }
}

TEST_CASE("regime is a pure function") {
  const Params p = Params::at_criticality(7.5, 0.5, 700.0, 2.0 / kPi);
  const RegimeReport a = regime(p);
  const RegimeReport b = regime(p);
  CHECK(a.K == b.K);
  CHECK(a.sigma == b.sigma);
  CHECK(a.sigma_c == b.sigma_c);
  CHECK(a.R0 == b.R0);
  CHECK(a.R1 == b.R1);
  CHECK(a.eta == b.eta);
  CHECK(a.eta_c == b.eta_c);
}

}  // TEST_SUITE
