#include "sphthc/params.hpp"

#include <cmath>
#include <numbers>

namespace sphthc {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kDegenerateTol = 1e-9;
}  // namespace

Params Params::make(double Pr, double Le, double R, double Rtilde, double r,
                    int s_sign) {
  if (!(Pr > 0.0)) throw InvalidParams("Pr must be positive");
  if (!(Le > 0.0)) throw InvalidParams("Le must be positive");
  if (Le == 1.0) throw InvalidParams("Le = 1 is excluded (R1 has a pole)");
  if (!(Rtilde >= 0.0)) throw InvalidParams("Rtilde must be nonnegative");
  if (!(r > 0.0)) throw InvalidParams("aspect ratio must be positive");
  if (s_sign != 1 && s_sign != -1) throw InvalidParams("s_sign must be +1 or -1");
  return Params{Pr, Le, R, Rtilde, r, s_sign};
}

Params Params::at_criticality(double Pr, double Le, double R, double r) {
  return with_sigma(Pr, Le, R, r, sigma_crit(r).sigma_c);
}

Params Params::with_sigma(double Pr, double Le, double R, double r,
                          double sigma) {
  const double rt = Le * (R - sigma);
  return make(Pr, Le, R, std::abs(rt), r, rt < 0.0 ? -1 : +1);
}

double wavenumber_sq(int l, double r) {
  if (l < 0) throw InvalidParams("degree l must be nonnegative");
  if (!(r > 0.0)) throw InvalidParams("aspect ratio must be positive");
  return static_cast<double>(l) * (l + 1) / (r * r);
}

double threshold_radius(int l) {
  if (l < 0) throw InvalidParams("degree l must be nonnegative");
  if (l == 0) return 0.0;
  const double ld = static_cast<double>(l);
  const double cube_a = std::cbrt(ld * (2.0 + ld) * (2.0 + ld));
  const double cube_b = std::cbrt(ld * ld * (2.0 + ld));
  return std::sqrt((1.0 + ld) * (cube_a + cube_b)) / kPi;
}

int critical_degree(double r) {
  if (!(r > 0.0)) throw InvalidParams("aspect ratio must be positive");
  for (int l = 1;; ++l) {
    const double rl = threshold_radius(l);
    if (std::abs(r - rl) <= kDegenerateTol)
      throw CriticalAspectRatio("aspect ratio coincides with a threshold radius");
    if (r < rl) return l;
  }
}

SigmaCrit sigma_crit(double r) {
  const int lc = critical_degree(r);
  const double a2 = wavenumber_sq(lc, r);
  const double s = kPi * kPi + a2;
  return SigmaCrit{s * s * s / a2, lc};
}

RegimeReport regime(const Params& p) {
  const SigmaCrit sc = sigma_crit(p.r);
  const double rt = p.rtilde_signed();
  const double sgn = p.Le < 1.0 ? 1.0 : -1.0;

  RegimeReport rep;
  rep.sigma = p.sigma();
  rep.sigma_c = sc.sigma_c;
  rep.l_c = sc.l_c;
  rep.K = sgn * (p.Le * p.Le / (1.0 - p.Le) * (1.0 + 1.0 / p.Pr) * sc.sigma_c - rt);
  rep.R0 = (p.Le + p.Pr) / ((1.0 - p.Le) * p.Pr) * sc.sigma_c;
  rep.R1 = sc.sigma_c / (1.0 - p.Le * p.Le);
  rep.eta = p.R - (p.Pr + p.Le) / (p.Pr + 1.0) * rt;
  rep.eta_c = (p.Pr + p.Le) * (1.0 + p.Le) / p.Pr * sc.sigma_c;
  rep.regime = rep.K > 0.0   ? Regime::SteadyMultiEquilibria
               : rep.K < 0.0 ? Regime::Oscillatory
                             : Regime::Degenerate;
  return rep;
}

}  // namespace sphthc
