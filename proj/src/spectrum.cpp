#include "sphthc/spectrum.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "sphthc/cubic.hpp"

namespace sphthc {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kPi2 = kPi * kPi;

void require_mode(int l, int n) {
  if (l < 1) throw InvalidParams("dispersion modes need degree l >= 1");
  if (n < 1) throw InvalidParams("dispersion modes need wave index n >= 1");
}
}  // namespace

DispersionCoefficients dispersion_coefficients(int l, int n, const Params& p) {
  require_mode(l, n);
  const double a2 = wavenumber_sq(l, p.r);
  const double g = n * n * kPi2 + a2;
  const double rt = p.rtilde_signed();
  DispersionCoefficients d;
  d.b2 = g * (1.0 + p.Le + p.Pr);
  d.b1 = g * g * (p.Le + p.Pr + p.Le * p.Pr) - a2 / g * p.Pr * (p.R - rt);
  d.b0 = g * g * g * p.Le * p.Pr - a2 * p.Pr * (p.Le * p.R - rt);
  return d;
}

SpectrumTriple eigenvalues(int l, int n, const Params& p) {
  const DispersionCoefficients d = dispersion_coefficients(l, n, p);
  SpectrumTriple t;
  t.betas = solve_cubic(d.b2, d.b1, d.b0);
  t.b0 = d.b0;
  t.b1 = d.b1;
  t.b2 = d.b2;
  return t;
}

double eigenvalue_shear(int l, const Params& p) {
  if (l < 1) throw InvalidParams("shear modes need degree l >= 1");
  return -p.Pr * wavenumber_sq(l, p.r);
}

HorizontalMeanPair eigenvalues_horizontal_mean(int n, const Params& p) {
  if (n < 1) throw InvalidParams("horizontal-mean modes need n >= 1");
  const double n2pi2 = n * n * kPi2;
  return HorizontalMeanPair{-n2pi2, -p.Le * n2pi2};
}

ModeCoefficients mode_coefficients(const ModeIndex& idx,
                                   std::complex<double> beta, const Params& p,
                                   bool adjoint) {
  require_mode(idx.l, idx.n);
  if (std::abs(idx.m) > idx.l) throw InvalidParams("|m| must not exceed l");
  const double a2 = wavenumber_sq(idx.l, p.r);
  const double g = idx.n * idx.n * kPi2 + a2;
  const std::complex<double> be = adjoint ? std::conj(beta) : beta;
  const std::complex<double> den_t = g + be;
  const std::complex<double> den_s = p.Le * g + be;
  if (std::abs(den_t) < 1e-12 || std::abs(den_s) < 1e-12)
    throw SingularMode("mode amplitude denominator vanished");

  ModeCoefficients mc;
  mc.u_scale = idx.n * kPi;
  mc.w_scale = a2;
  mc.adjoint = adjoint;
  if (adjoint) {
    mc.theta = p.Pr * p.R * a2 / den_t;
    mc.phi = -p.Pr * p.rtilde_signed() * a2 / den_s;
  } else {
    mc.theta = a2 / den_t;
    mc.phi = a2 * static_cast<double>(p.s_sign) / den_s;
  }
  return mc;
}

PesReport verify_pes(const Params& p, int l_max, int n_max) {
  const RegimeReport reg = regime(p);
  if (!(reg.K > 0.0))
    throw UnsupportedRegime("exchange-of-stabilities scan needs K > 0");
  const int lc = reg.l_c;
  if (l_max < 2 * lc + 2 || n_max < 2 * lc + 2)
    throw InvalidParams("scan bounds must be at least 2 l_c + 2");

  PesReport rep;
  rep.sigma = reg.sigma;
  rep.sigma_c = reg.sigma_c;
  rep.l_c = lc;
  rep.l_max = l_max;
  rep.n_max = n_max;
  rep.beta_crit = eigenvalues(lc, 1, p).betas[0];

  double worst = -std::numeric_limits<double>::infinity();
  int wl = 0, wn = 0, wk = 0;
  const auto consider = [&](double re, int l, int n, int k) {
    if (re > worst) {
      worst = re;
      wl = l;
      wn = n;
      wk = k;
    }
  };

  for (int n = 1; n <= n_max; ++n) {
    const HorizontalMeanPair hm = eigenvalues_horizontal_mean(n, p);
    consider(hm.beta_thermal, 0, n, 1);
    consider(hm.beta_saline, 0, n, 2);
  }
  for (int l = 1; l <= l_max; ++l) {
    consider(eigenvalue_shear(l, p), l, 0, 1);
    for (int n = 1; n <= n_max; ++n) {
      const SpectrumTriple t = eigenvalues(l, n, p);
      for (int k = 0; k < 3; ++k) {
        if (k == 0 && l == lc && n == 1) continue;  // the critical branch
        consider(t.betas[k].real(), l, n, k + 1);
      }
    }
  }

  rep.max_noncritical_re = worst;
  rep.argmax_l = wl;
  rep.argmax_n = wn;
  rep.argmax_k = wk;
  if (wl == l_max || wn == n_max)
    throw ScanInconclusive("noncritical maximum on the scan boundary at (l=" +
                           std::to_string(wl) + ", n=" + std::to_string(wn) +
                           ")");

  constexpr double kZeroTol = 1e-7;
  bool ok = worst < 0.0;
  const double ds = rep.sigma - rep.sigma_c;
  if (std::abs(ds) <= 1e-9 * std::abs(rep.sigma_c)) {
    ok = ok && std::abs(rep.beta_crit) <= kZeroTol;
  } else if (ds < 0.0) {
    ok = ok && rep.beta_crit.real() < 0.0;
  } else {
    ok = ok && rep.beta_crit.real() > 0.0;
  }
  rep.pattern_ok = ok;
  return rep;
}

}  // namespace sphthc
