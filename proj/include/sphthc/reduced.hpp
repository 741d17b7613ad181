#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "sphthc/params.hpp"
#include "sphthc/transition.hpp"

namespace sphthc {

// The 2 l_c + 1 complex amplitudes x_m, m = -l_c..l_c, subject to the
// reality constraint x_{-m} = (-1)^m conj(x_m).
struct AmplitudeState {
  int l_c;
  double t;
  std::vector<std::complex<double>> x;  // index m + l_c

  static AmplitudeState zero(int l_c);

  std::complex<double>& at(int m) { return x[m + l_c]; }
  const std::complex<double>& at(int m) const { return x[m + l_c]; }

  double norm_sq() const;
  // Max deviation from the reality constraint.
  double reality_residue() const;
  // Projects back onto the constraint set (averages the m and -m data).
  void project_reality();
};

// dx_m/dt = beta x_m - q x_m |x|^2. Throws ConstraintViolated when the
// input reality residue exceeds 1e-9.
std::vector<std::complex<double>> reduced_rhs(const AmplitudeState& s,
                                              double beta, double q);

struct Trajectory {
  std::vector<AmplitudeState> samples;
  bool diverged;  // |x|^2 exceeded 1e12 (expected in the Type-II regime)
};

// Classic fixed-step RK4 with the reality constraint re-projected each
// step; samples every `stride` steps, always including the final state.
// Requires dt > 0 and dt * |beta| < 0.1.
Trajectory integrate(const AmplitudeState& s0, double beta, double q,
                     double dt, double horizon, int stride = 1);

struct AttractorCheckReport {
  double sigma;
  double beta_crit;
  double q;
  double expected_radius_sq;  // beta_crit / q
  std::vector<double> terminal_radius_sq;
  double max_rel_radius_dev;
  double min_direction_spread;  // min pairwise distance of terminal x/|x|
  std::uint64_t seed;
  bool ok;
};

// Integrates from n_starts random constraint-satisfying initial conditions
// at sigma = sigma_c + sigma_offset and checks that every terminal |x|^2
// matches beta/q while the terminal directions stay spread out.
// Throws TypeIIRegime unless the transition there is Type-I, and Diverged
// if any trajectory escapes.
AttractorCheckReport attractor_check(int l_c, const Params& p,
                                     double sigma_offset,
                                     std::uint64_t seed = 20240817,
                                     int n_starts = 20);

struct FieldSample {
  double theta, phi, z;
  double u_theta, u_phi, w, T, S;
};

struct GridSpec {
  std::vector<double> thetas;
  std::vector<double> phis;
  std::vector<double> zs;
};

// Evaluates the reconstructed fields (critical modes plus center-manifold
// correction) on the tensor grid. T, S, w come out real; an imaginary
// residue above 1e-9 relative raises Error.
std::vector<FieldSample> reconstruct_fields(const AmplitudeState& s,
                                            const CenterManifoldCoeffs& cm,
                                            const Params& p,
                                            const GridSpec& grid);

}  // namespace sphthc
