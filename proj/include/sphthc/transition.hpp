#pragma once

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include "sphthc/params.hpp"
#include "sphthc/spectrum.hpp"

namespace sphthc {

// Per-branch auxiliary coefficients of one interaction degree l. a and b
// are affine in beta_{l2}^k; c and f collect the thermal/saline amplitude
// responses of the (l, 2) modes.
struct BranchCoefficients {
  std::complex<double> beta;  // beta_{l2}^k
  std::complex<double> a;
  std::complex<double> b;
  std::complex<double> c;
  std::complex<double> f;
};

struct DegreeBranches {
  int l;
  std::array<BranchCoefficients, 3> k;
};

struct AuxCoefficients {
  int l_c;
  double g;  // shared normalization; carries the sign of (R0 - R)(1 - Le)
  std::vector<DegreeBranches> degrees;  // l = 2 (l_c = 1) or l = 2, 4 (l_c = 2)
};

// Center-manifold coefficient set. A02 is common to both critical degrees;
// A22 applies for l_c = 1, B22/B42 for l_c = 2 (the unused set is zero).
struct CenterManifoldCoeffs {
  int l_c;
  std::array<double, 2> A02;
  std::array<std::complex<double>, 3> A22;
  std::array<std::complex<double>, 3> B22;
  std::array<std::complex<double>, 3> B42;
};

enum class TransitionType { TypeI, TypeII, Marginal };

// One nonlinear-interaction contribution D_{(l_c,1),(l,n)} to the
// transition number.
struct DTerm {
  int l;
  int n;
  double value;
};

struct TransitionReport {
  int l_c;
  double q;                    // transition number, sum of d_terms
  std::vector<DTerm> d_terms;  // (0,2) first, then (2,2) [, (4,2)]
  TransitionType classification;
  // beta^1_{l_c 1}(sigma) / q, emitted only for Type-I with sigma > sigma_c.
  std::optional<double> attractor_radius_sq;
  CenterManifoldCoeffs cm;
  bool near_pole;  // |R0 - R| < 1e-6 |R0|; values are pole-dominated
};

// Requires the K > 0 regime and critical_degree(p.r) == l_c.
// Throws PoleAtR0 when |R0 - R| < 1e-9 |R0|.
AuxCoefficients aux_coefficients(int l_c, const Params& p);

// D_{(l_c,1),(0,2)} = (1+Le) alpha_{l_c}^4 (R1 - R) / (16 pi Le (R0 - R)).
double d_zero_mode(int l_c, const Params& p);

// D_{(l_c,1),(l,2)} for (l_c, l) in {(1,2), (2,2), (2,4)}; anything else
// throws UnsupportedInteraction.
double d_higher(int l_c, int l, const Params& p);

TransitionReport transition_number(int l_c, const Params& p);

// Root of R -> q_{l_c}(R at criticality) located by bisection to absolute
// 1e-4 on (sigma_c, R0). Throws NoSignChange for Le >= 1 or when q keeps
// one sign across the bracket.
double critical_R_star(int l_c, double Le, double Pr, double r);

CenterManifoldCoeffs center_manifold_coeffs(int l_c, const Params& p);

}  // namespace sphthc
