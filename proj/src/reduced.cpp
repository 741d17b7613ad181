#include "sphthc/reduced.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "sphthc/harmonics.hpp"

namespace sphthc {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kDivergenceBound = 1e12;

int parity_sign(int m) { return (m % 2 + 2) % 2 == 0 ? 1 : -1; }
}  // namespace

AmplitudeState AmplitudeState::zero(int l_c) {
  if (l_c < 1) throw InvalidParams("l_c must be positive");
  AmplitudeState s;
  s.l_c = l_c;
  s.t = 0.0;
  s.x.assign(2 * l_c + 1, {0.0, 0.0});
  return s;
}

double AmplitudeState::norm_sq() const {
  double n = 0.0;
  for (const auto& xm : x) n += std::norm(xm);
  return n;
}

double AmplitudeState::reality_residue() const {
  double res = std::abs(at(0).imag());
  for (int m = 1; m <= l_c; ++m)
    res = std::max(res, std::abs(at(-m) - static_cast<double>(parity_sign(m)) *
                                              std::conj(at(m))));
  return res;
}

void AmplitudeState::project_reality() {
  at(0) = {at(0).real(), 0.0};
  for (int m = 1; m <= l_c; ++m) {
    const double ps = parity_sign(m);
    const std::complex<double> avg = 0.5 * (at(m) + ps * std::conj(at(-m)));
    at(m) = avg;
    at(-m) = ps * std::conj(avg);
  }
}

std::vector<std::complex<double>> reduced_rhs(const AmplitudeState& s,
                                              double beta, double q) {
  if (s.reality_residue() > 1e-9)
    throw ConstraintViolated("amplitude state violates the reality constraint");
  const double n2 = s.norm_sq();
  std::vector<std::complex<double>> dx(s.x.size());
  for (std::size_t i = 0; i < s.x.size(); ++i)
    dx[i] = (beta - q * n2) * s.x[i];
  return dx;
}

Trajectory integrate(const AmplitudeState& s0, double beta, double q,
                     double dt, double horizon, int stride) {
  if (!(dt > 0.0)) throw InvalidParams("dt must be positive");
  if (!(dt * std::abs(beta) < 0.1))
    throw InvalidParams("dt too large for the linear rate");
  if (stride < 1) throw InvalidParams("stride must be positive");

  const auto rhs = [&](const std::vector<std::complex<double>>& x) {
    const double n2 = [&] {
      double n = 0.0;
      for (const auto& xm : x) n += std::norm(xm);
      return n;
    }();
    std::vector<std::complex<double>> dx(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) dx[i] = (beta - q * n2) * x[i];
    return dx;
  };

  Trajectory traj;
  traj.diverged = false;
  AmplitudeState s = s0;
  s.project_reality();
  traj.samples.push_back(s);

  const long n_steps = static_cast<long>(std::ceil(horizon / dt));
  std::vector<std::complex<double>> k1, k2, k3, k4, tmp(s.x.size());
  for (long step = 1; step <= n_steps; ++step) {
    k1 = rhs(s.x);
    for (std::size_t i = 0; i < s.x.size(); ++i)
      tmp[i] = s.x[i] + 0.5 * dt * k1[i];
    k2 = rhs(tmp);
    for (std::size_t i = 0; i < s.x.size(); ++i)
      tmp[i] = s.x[i] + 0.5 * dt * k2[i];
    k3 = rhs(tmp);
    for (std::size_t i = 0; i < s.x.size(); ++i) tmp[i] = s.x[i] + dt * k3[i];
    k4 = rhs(tmp);
    for (std::size_t i = 0; i < s.x.size(); ++i)
      s.x[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    s.t = s0.t + step * dt;
    s.project_reality();

    const bool last = step == n_steps;
    if (s.norm_sq() > kDivergenceBound) {
      traj.diverged = true;
      traj.samples.push_back(s);
      break;
    }
    if (step % stride == 0 || last) traj.samples.push_back(s);
  }
  return traj;
}

AttractorCheckReport attractor_check(int l_c, const Params& p,
                                     double sigma_offset, std::uint64_t seed,
                                     int n_starts) {
  if (sigma_offset < 0.0) throw InvalidParams("sigma_offset must be >= 0");
  if (n_starts < 2) throw InvalidParams("need at least two starts");
  const SigmaCrit sc = sigma_crit(p.r);
  const Params ps =
      Params::with_sigma(p.Pr, p.Le, p.R, p.r, sc.sigma_c + sigma_offset);
  const TransitionReport tr = transition_number(l_c, ps);
  if (tr.classification != TransitionType::TypeI)
    throw TypeIIRegime("attractor check needs a Type-I transition");

  const double beta = eigenvalues(l_c, 1, ps).betas[0].real();
  const double target = beta > 0.0 ? beta / tr.q : 0.0;

  AttractorCheckReport rep;
  rep.sigma = ps.sigma();
  rep.beta_crit = beta;
  rep.q = tr.q;
  rep.expected_radius_sq = target;
  rep.seed = seed;

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<std::vector<std::complex<double>>> directions;

  for (int run = 0; run < n_starts; ++run) {
    AmplitudeState s = AmplitudeState::zero(l_c);
    s.at(0) = {normal(rng), 0.0};
    for (int m = 1; m <= l_c; ++m) {
      s.at(m) = {normal(rng), normal(rng)};
      s.at(-m) = static_cast<double>(parity_sign(m)) * std::conj(s.at(m));
    }
    const double amp =
        target > 0.0 ? 0.3 * std::sqrt(target) : 1e-3;
    const double n0 = std::sqrt(s.norm_sq());
    for (auto& xm : s.x) xm *= amp / n0;

    const double rate = std::max({std::abs(beta), tr.q * s.norm_sq(), 1e-6});
    const double dt = 0.02 / rate;
    const double horizon = beta > 0.0 ? 14.0 / beta : 2e3;
    const Trajectory traj = integrate(s, beta, tr.q, dt, horizon, 1 << 20);
    if (traj.diverged) throw Diverged("trajectory escaped during attractor check");

    const AmplitudeState& fin = traj.samples.back();
    rep.terminal_radius_sq.push_back(fin.norm_sq());
    const double fn = std::sqrt(fin.norm_sq());
    std::vector<std::complex<double>> dir(fin.x);
    if (fn > 0.0)
      for (auto& d : dir) d /= fn;
    directions.push_back(std::move(dir));
  }

  rep.max_rel_radius_dev = 0.0;
  if (target > 0.0)
    for (double v : rep.terminal_radius_sq)
      rep.max_rel_radius_dev =
          std::max(rep.max_rel_radius_dev, std::abs(v - target) / target);

  rep.min_direction_spread = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < directions.size(); ++i)
    for (std::size_t j = i + 1; j < directions.size(); ++j) {
      double d2 = 0.0;
      for (std::size_t c = 0; c < directions[i].size(); ++c)
        d2 += std::norm(directions[i][c] - directions[j][c]);
      rep.min_direction_spread =
          std::min(rep.min_direction_spread, std::sqrt(d2));
    }

  rep.ok = target > 0.0
               ? rep.max_rel_radius_dev <= 1e-4 && rep.min_direction_spread > 1e-3
               : *std::max_element(rep.terminal_radius_sq.begin(),
                                   rep.terminal_radius_sq.end()) < 1e-5;
  return rep;
}

namespace {

// One separated mode's contribution at a grid point, accumulated into the
// complex field components.
struct FieldAccum {
  std::complex<double> u_theta, u_phi, w, T, S;
};

void add_mode(FieldAccum& f, const std::complex<double>& y, int l, int m,
              int n, const std::complex<double>& theta_amp,
              const std::complex<double>& phi_amp, const Params& p,
              double theta, double phi, double z) {
  const double a2 = wavenumber_sq(l, p.r);
  const std::complex<double> Y = ylm(l, m, theta, phi);
  const std::complex<double> dY = ylm_dtheta(l, m, theta, phi);
  const double cosz = std::cos(n * kPi * z);
  const double sinz = std::sin(n * kPi * z);
  const double npi = n * kPi;
  f.u_theta += y * npi * dY / p.r * cosz;
  f.u_phi += y * npi * std::complex<double>(0.0, m) * Y /
             (p.r * std::sin(theta)) * cosz;
  f.w += y * a2 * Y * sinz;
  f.T += y * theta_amp * Y * sinz;
  f.S += y * phi_amp * Y * sinz;
}

double take_real(const std::complex<double>& z, double scale) {
  if (std::abs(z.imag()) > 1e-9 * std::max(1.0, scale))
    throw Error("reconstructed field has an imaginary residue");
  return z.real();
}

}  // namespace

std::vector<FieldSample> reconstruct_fields(const AmplitudeState& s,
                                            const CenterManifoldCoeffs& cm,
                                            const Params& p,
                                            const GridSpec& grid) {
  if (s.l_c != cm.l_c) throw InvalidParams("state and coefficients disagree on l_c");
  if (s.l_c != 1 && s.l_c != 2)
    throw UnsupportedDegree("field reconstruction covers l_c in {1, 2}");
  if (grid.thetas.empty() || grid.phis.empty() || grid.zs.empty())
    throw InvalidParams("grid must be nonempty");
  const int lc = s.l_c;

  // Critical-mode amplitudes (branch 1) and the (l, 2) interaction modes.
  const std::complex<double> beta_c = eigenvalues(lc, 1, p).betas[0];
  const ModeCoefficients crit =
      mode_coefficients({lc, 0, 1, 1}, beta_c, p, false);

  struct Quad {
    int l;
    std::array<std::complex<double>, 3> betas;
    std::array<ModeCoefficients, 3> amps;
    // y_{l m 2}^k = coeff[k] * quadratic form in x
    std::array<std::complex<double>, 3> coeff;
  };
  std::vector<Quad> quads;
  for (int l = 2; l <= 2 * lc; l += 2) {
    Quad qd;
    qd.l = l;
    const SpectrumTriple trip = eigenvalues(l, 2, p);
    for (int k = 0; k < 3; ++k) {
      qd.betas[k] = trip.betas[k];
      qd.amps[k] = mode_coefficients({l, 0, 2, k + 1}, trip.betas[k], p, false);
      qd.coeff[k] = l == 2 ? (lc == 1 ? cm.A22[k] : cm.B22[k]) : cm.B42[k];
    }
    quads.push_back(qd);
  }

  const auto xm = [&](int m) { return s.at(m); };
  const std::complex<double> x0 = xm(0);

  // Quadratic forms multiplying the (0,2) and (l,2) center-manifold modes.
  std::complex<double> mean_form;
  if (lc == 1)
    mean_form = x0 * x0 - 2.0 * xm(-1) * xm(1);
  else
    mean_form = x0 * x0 - 2.0 * xm(-1) * xm(1) + 2.0 * xm(-2) * xm(2);

  const auto quad_form = [&](int l, int m) -> std::complex<double> {
    const double s6 = std::sqrt(6.0);
    if (lc == 1) {
      switch (m) {
        case -2: return xm(-1) * xm(-1);
        case 2: return xm(1) * xm(1);
        case -1: return std::sqrt(2.0) * xm(-1) * x0;
        case 1: return std::sqrt(2.0) * xm(1) * x0;
        default: return std::sqrt(2.0 / 3.0) * (x0 * x0 + xm(-1) * xm(1));
      }
    }
    if (l == 2) {
      switch (m) {
        case -2: return 4.0 * x0 * xm(-2) - s6 * xm(-1) * xm(-1);
        case 2: return 4.0 * x0 * xm(2) - s6 * xm(1) * xm(1);
        case -1: return 2.0 * (s6 * xm(1) * xm(-2) - x0 * xm(-1));
        case 1: return 2.0 * (s6 * xm(2) * xm(-1) - x0 * xm(1));
        default:
          return 2.0 * (2.0 * xm(2) * xm(-2) + xm(1) * xm(-1) - x0 * x0);
      }
    }
    switch (m) {
      case -4: return xm(-2) * xm(-2);
      case 4: return xm(2) * xm(2);
      case -3: return std::sqrt(2.0) * xm(-2) * xm(-1);
      case 3: return std::sqrt(2.0) * xm(2) * xm(1);
      case -2:
        return (2.0 * xm(-1) * xm(-1) + s6 * x0 * xm(-2)) / std::sqrt(7.0);
      case 2:
        return (2.0 * xm(1) * xm(1) + s6 * x0 * xm(2)) / std::sqrt(7.0);
      case -1:
        return std::sqrt(2.0 / 7.0) * (xm(1) * xm(-2) + s6 * x0 * xm(-1));
      case 1:
        // mirror of the m = -1 form under the reality constraint
        return std::sqrt(2.0 / 7.0) * (xm(-1) * xm(2) + s6 * x0 * xm(1));
      default:
        return std::sqrt(2.0 / 35.0) *
               (4.0 * xm(1) * xm(-1) + xm(2) * xm(-2) + 3.0 * x0 * x0);
    }
  };

  const double field_scale = std::max(1.0, s.norm_sq());
  std::vector<FieldSample> out;
  out.reserve(grid.thetas.size() * grid.phis.size() * grid.zs.size());
  for (double theta : grid.thetas)
    for (double phi : grid.phis)
      for (double z : grid.zs) {
        FieldAccum acc{};
        for (int m = -lc; m <= lc; ++m)
          add_mode(acc, xm(m), lc, m, 1, crit.theta, crit.phi, p, theta, phi, z);

        // (0, 2) horizontal-mean corrections: T-only and S-only profiles.
        const double sin2 = std::sin(2.0 * kPi * z);
        acc.T += cm.A02[0] * mean_form * sin2;
        acc.S += cm.A02[1] * mean_form * sin2;

        for (const Quad& qd : quads)
          for (int k = 0; k < 3; ++k)
            for (int m = -qd.l; m <= qd.l; ++m)
              add_mode(acc, qd.coeff[k] * quad_form(qd.l, m), qd.l, m, 2,
                       qd.amps[k].theta, qd.amps[k].phi, p, theta, phi, z);

        FieldSample fs;
        fs.theta = theta;
        fs.phi = phi;
        fs.z = z;
        fs.u_theta = take_real(acc.u_theta, field_scale);
        fs.u_phi = take_real(acc.u_phi, field_scale);
        fs.w = take_real(acc.w, field_scale);
        fs.T = take_real(acc.T, field_scale);
        fs.S = take_real(acc.S, field_scale);
        out.push_back(fs);
      }
  return out;
}

}  // namespace sphthc
