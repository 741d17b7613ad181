#pragma once

#include <array>
#include <complex>

#include "sphthc/params.hpp"

namespace sphthc {

// Addresses one eigenpair: spherical-harmonic degree l, order m, vertical
// wave index n, and branch k of the dispersion cubic (k in {1,2,3} when
// l != 0 and n != 0, k in {1,2} when l == 0).
struct ModeIndex {
  int l;
  int m;
  int n;
  int k;
};

struct DispersionCoefficients {
  double b0, b1, b2;
};

// The three roots of beta^3 + b2 beta^2 + b1 beta + b0 = 0 for one (l, n),
// ordered by descending real part.
struct SpectrumTriple {
  std::array<std::complex<double>, 3> betas;
  double b0, b1, b2;
};

// T/S amplitudes of one separated mode plus the velocity scalings
// (n*pi for the horizontal velocity potential, alpha_l^2 for w).
struct ModeCoefficients {
  std::complex<double> theta;
  std::complex<double> phi;
  double u_scale;
  double w_scale;
  bool adjoint;
};

struct PesReport {
  double sigma;
  double sigma_c;
  int l_c;
  std::complex<double> beta_crit;   // beta^1_{l_c,1}
  double max_noncritical_re;        // over every other scanned branch
  int argmax_l, argmax_n, argmax_k; // where the noncritical max occurred
  bool pattern_ok;                  // sign pattern consistent with sigma - sigma_c
  int l_max, n_max;
};

// Coefficients of the dispersion cubic for degree l >= 1, index n >= 1.
DispersionCoefficients dispersion_coefficients(int l, int n, const Params& p);

SpectrumTriple eigenvalues(int l, int n, const Params& p);

// n = 0 shear modes: beta_{l0} = -Pr * alpha_l^2, l >= 1.
double eigenvalue_shear(int l, const Params& p);

// l = 0 horizontal-mean modes for n >= 1: a temperature-only branch at
// -n^2 pi^2 and a salinity-only branch at -Le n^2 pi^2.
struct HorizontalMeanPair {
  double beta_thermal;  // eigenvector has T = sin(n pi z) only
  double beta_saline;   // eigenvector has S = sin(n pi z) only
};
HorizontalMeanPair eigenvalues_horizontal_mean(int n, const Params& p);

// Amplitudes of the separated eigenfunction (direct) or adjoint
// eigenfunction (adjoint = true, evaluated at conj(beta)).
// Throws SingularMode when an amplitude denominator falls below 1e-12.
ModeCoefficients mode_coefficients(const ModeIndex& idx,
                                   std::complex<double> beta, const Params& p,
                                   bool adjoint = false);

// Scans all branches with 1 <= l <= l_max, 0 <= n <= n_max plus the l = 0
// families and checks the exchange-of-stabilities sign pattern at the
// params' sigma. Requires K > 0 and l_max, n_max >= 2 l_c + 2. Throws
// ScanInconclusive if the noncritical maximum lands on the scan boundary.
PesReport verify_pes(const Params& p, int l_max = 50, int n_max = 50);

}  // namespace sphthc
