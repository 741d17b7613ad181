#pragma once

#include "sphthc/errors.hpp"

namespace sphthc {

// Nondimensional control parameters of the spherical-shell problem.
//
// Rtilde is stored as a magnitude; s_sign carries the orientation of the
// basic salinity gradient, so the signed saline forcing entering the
// dispersion relation and the interaction coefficients is
// s_sign * Rtilde (see rtilde_signed()).
struct Params {
  double Pr;      // Prandtl number, > 0
  double Le;      // Lewis number, > 0 and != 1
  double R;       // thermal Rayleigh number
  double Rtilde;  // saline Rayleigh number magnitude, >= 0
  double r;       // aspect ratio a/h, > 0
  int s_sign;     // +1 or -1

  static Params make(double Pr, double Le, double R, double Rtilde, double r,
                     int s_sign = +1);

  // Fixes the saline forcing so that sigma() equals sigma_crit(r).sigma_c.
  // A negative Le*(R - sigma_c) is folded into s_sign = -1.
  static Params at_criticality(double Pr, double Le, double R, double r);

  // Fixes the saline forcing so that sigma() equals the given value.
  static Params with_sigma(double Pr, double Le, double R, double r,
                           double sigma);

  double rtilde_signed() const { return s_sign * Rtilde; }

  // Control parameter sigma = R - Le^{-1} * (signed saline forcing).
  double sigma() const { return R - rtilde_signed() / Le; }
};

enum class Regime { SteadyMultiEquilibria, Oscillatory, Degenerate };

struct RegimeReport {
  double sigma;
  double sigma_c;
  double K;      // regime discriminant; K > 0 selects steady convection
  double R0;     // pole of the zero-mode interaction, K sign threshold
  double R1;     // sign threshold of the zero-mode interaction
  double eta;    // oscillatory-branch control parameter
  double eta_c;  // its critical threshold
  Regime regime;
  int l_c;
};

// alpha_l^2 = l(l+1)/r^2; zero for l = 0.
double wavenumber_sq(int l, double r);

// Aspect ratio at which degrees l and l+1 become critical simultaneously.
// threshold_radius(0) == 0.
double threshold_radius(int l);

// Critical spherical-harmonic degree l_c for aspect ratio r. Throws
// CriticalAspectRatio when |r - r_l| <= 1e-9 for some l.
int critical_degree(double r);

struct SigmaCrit {
  double sigma_c;
  int l_c;
};

// Minimum of (pi^2 + alpha_l^2)^3 / alpha_l^2 over l >= 1, attained at l_c.
SigmaCrit sigma_crit(double r);

RegimeReport regime(const Params& p);

}  // namespace sphthc
