#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "sphthc/errors.hpp"

namespace sphthc {

struct HarmonicIndex {
  int l;
  int m;
};

// Exact integer arithmetic in the closed-form coupling coefficients stays
// cheap up to this degree; higher degrees are rejected.
inline constexpr int kMaxHarmonicDegree = 16;

// Orthonormal spherical harmonic with the Condon-Shortley phase, so that
// conj(Y_lm) = (-1)^m Y_{l,-m} and the integral of |Y_lm|^2 over the unit
// sphere is 1.
std::complex<double> ylm(int l, int m, double theta, double phi);

// d/dtheta of ylm at fixed phi. Valid away from the poles.
std::complex<double> ylm_dtheta(int l, int m, double theta, double phi);

// Integral of Y_{l1 m1} Y_{l2 m2} conj(Y_{l3 m3}) over the unit sphere by
// tensor-product quadrature: Gauss-Legendre in cos(theta) with
// l1 + l2 + l3 + 1 nodes and equispaced phi with |m1| + |m2| + |m3| + 1
// nodes, exact for the integrand's polynomial degree.
std::complex<double> triple_product_quadrature(HarmonicIndex a,
                                               HarmonicIndex b,
                                               HarmonicIndex c);

// Same with explicit node counts (must be at least the defaults above).
std::complex<double> triple_product_quadrature(HarmonicIndex a,
                                               HarmonicIndex b,
                                               HarmonicIndex c, int n_theta,
                                               int n_phi);

// The same integral in closed form via the Racah formula, with exact
// big-integer factorial arithmetic internally. Zero (exactly) outside the
// selection rules.
double gaunt_closed_form(HarmonicIndex a, HarmonicIndex b, HarmonicIndex c);

// Wigner 3j symbol for integer angular momenta.
double wigner_3j(int l1, int l2, int l3, int m1, int m2, int m3);

// (l, n) mode families reachable by quadratic interactions of the critical
// modes of degree l_c: the (l, 0) shear families for 1 <= l <= 2 l_c, the
// (0, 2) horizontal-mean family, and the parity-allowed (l, 2) families.
std::vector<std::pair<int, int>> interaction_support(int l_c);

struct GaussLegendre {
  std::vector<double> nodes;    // ascending, in (-1, 1)
  std::vector<double> weights;
};

GaussLegendre gauss_legendre(int n);

// Normalized associated Legendre function for m >= 0, Condon-Shortley
// phase included: ylm(l, m, theta, phi) = norm_assoc_legendre(l, m,
// cos(theta)) * exp(i m phi).
double norm_assoc_legendre(int l, int m, double x);

}  // namespace sphthc
