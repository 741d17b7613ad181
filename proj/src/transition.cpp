#include "sphthc/transition.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace sphthc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPi2 = kPi * kPi;

// Interaction weights of the (l, 2) mode families in the transition
// number. Pinned by the reference interaction tables and q-vs-R series
// (tests/ref_data.hpp); the series match to better than 1e-5 relative.
constexpr double weight(int l_c, int l) {
  if (l_c == 1 && l == 2) return -3.0 * kPi / 80.0;
  if (l_c == 2 && l == 2) return -45.0 * kPi / 784.0;
  if (l_c == 2 && l == 4) return -5.0 * kPi / 294.0;
  return 0.0;
}

struct Context {
  RegimeReport reg;
  double ac2;       // alpha_{l_c}^2
  double pole_sq;   // (pi^2 + alpha_{l_c}^2)^2
};

Context make_context(int l_c, const Params& p, bool need_k_positive) {
  if (l_c != 1 && l_c != 2)
    throw UnsupportedDegree("transition machinery covers l_c in {1, 2}");
  Context ctx{regime(p), 0.0, 0.0};
  if (ctx.reg.l_c != l_c)
    throw InvalidParams("aspect ratio selects critical degree " +
                        std::to_string(ctx.reg.l_c) + ", not " +
                        std::to_string(l_c));
  if (need_k_positive && !(ctx.reg.K > 0.0))
    throw UnsupportedRegime("transition number needs the K > 0 regime");
  ctx.ac2 = wavenumber_sq(l_c, p.r);
  const double s = kPi2 + ctx.ac2;
  ctx.pole_sq = s * s;
  return ctx;
}

void check_pole(const Context& ctx, const Params& p) {
  if (std::abs(ctx.reg.R0 - p.R) < 1e-9 * std::abs(ctx.reg.R0))
    throw PoleAtR0("R within 1e-9 relative of the pole at R0");
}

std::complex<double> branch_sum(const DegreeBranches& db) {
  std::complex<double> s = 0.0;
  for (const BranchCoefficients& bc : db.k) {
    const std::complex<double> den = bc.beta * bc.f;
    if (std::abs(den) < 1e-12)
      throw SingularBranch("beta * f vanished on an interaction branch");
    s += bc.c * bc.c / den;
  }
  return s;
}

double real_or_throw(std::complex<double> z, const char* what) {
  if (std::abs(z.imag()) > 1e-9 * std::max(1.0, std::abs(z.real())))
    throw Error(std::string(what) + ": imaginary residue above tolerance");
  return z.real();
}

const DegreeBranches& degree_branches(const AuxCoefficients& aux, int l) {
  for (const DegreeBranches& db : aux.degrees)
    if (db.l == l) return db;
  throw UnsupportedInteraction("interaction degree " + std::to_string(l) +
                               " not available for l_c = " +
                               std::to_string(aux.l_c));
}

double d_higher_from_aux(const AuxCoefficients& aux, int l) {
  const double pref = weight(aux.l_c, l);
  if (pref == 0.0)
    throw UnsupportedInteraction("no (l_c, l) = (" + std::to_string(aux.l_c) +
                                 ", " + std::to_string(l) + ") interaction");
  const std::complex<double> s = branch_sum(degree_branches(aux, l));
  return real_or_throw(pref / aux.g * s, "interaction term");
}

CenterManifoldCoeffs cm_from_aux(const AuxCoefficients& aux, const Params& p,
                                 const Context& ctx) {
  CenterManifoldCoeffs cm;
  cm.l_c = aux.l_c;
  cm.A22 = {};
  cm.B22 = {};
  cm.B42 = {};
  cm.A02[0] = ctx.ac2 * ctx.ac2 / (16.0 * kPi2 * (kPi2 + ctx.ac2));
  cm.A02[1] = static_cast<double>(p.s_sign) / (p.Le * p.Le) * cm.A02[0];
  const DegreeBranches& d2 = degree_branches(aux, 2);
  if (aux.l_c == 1) {
    const double c22 = -0.25 * std::sqrt(3.0 * kPi / 10.0);
    for (int k = 0; k < 3; ++k)
      cm.A22[k] = c22 * d2.k[k].c / (d2.k[k].beta * d2.k[k].f);
  } else {
    const DegreeBranches& d4 = degree_branches(aux, 4);
    const double c22 = 3.0 * std::sqrt(5.0 * kPi) / 56.0;
    const double c42 = -std::sqrt(5.0 * kPi / 14.0) / 6.0;
    for (int k = 0; k < 3; ++k) {
      cm.B22[k] = c22 * d2.k[k].c / (d2.k[k].beta * d2.k[k].f);
      cm.B42[k] = c42 * d4.k[k].c / (d4.k[k].beta * d4.k[k].f);
    }
  }
  return cm;
}

}  // namespace

AuxCoefficients aux_coefficients(int l_c, const Params& p) {
  const Context ctx = make_context(l_c, p, /*need_k_positive=*/true);
  check_pole(ctx, p);

  AuxCoefficients aux;
  aux.l_c = l_c;
  aux.g = ctx.ac2 / ctx.pole_sq * p.Pr * (1.0 - p.Le) / p.Le *
          (ctx.reg.R0 - p.R);

  const double sigma = p.sigma();
  const double rt = p.rtilde_signed();
  const double pole = kPi2 + ctx.ac2;
  for (int l = 2; l <= 2 * l_c; l += 2) {
    DegreeBranches db;
    db.l = l;
    const double al2 = wavenumber_sq(l, p.r);
    const double gamma0 = al2 + 4.0 * kPi2;
    const SpectrumTriple trip = eigenvalues(l, 2, p);
    for (int k = 0; k < 3; ++k) {
      BranchCoefficients& bc = db.k[k];
      bc.beta = trip.betas[k];
      bc.a = p.Le * gamma0 + bc.beta;
      bc.b = gamma0 + bc.beta;
      if (std::abs(bc.a) < 1e-12 || std::abs(bc.b) < 1e-12)
        throw SingularBranch("a or b denominator vanished; R too close to sigma_c");
      bc.c = ctx.ac2 * ctx.ac2 / ctx.pole_sq *
             (sigma + pole * p.Pr * (p.R / bc.b - rt / (bc.a * p.Le)));
      bc.f = 4.0 * kPi2 +
             al2 * (1.0 + p.Pr * (p.R / (bc.b * bc.b) - rt / (bc.a * bc.a)));
    }
    aux.degrees.push_back(db);
  }
  return aux;
}

double d_zero_mode(int l_c, const Params& p) {
  const Context ctx = make_context(l_c, p, /*need_k_positive=*/true);
  check_pole(ctx, p);
  return (1.0 + p.Le) * ctx.ac2 * ctx.ac2 * (ctx.reg.R1 - p.R) /
         (16.0 * kPi * p.Le * (ctx.reg.R0 - p.R));
}

double d_higher(int l_c, int l, const Params& p) {
  if (!((l_c == 1 && l == 2) || (l_c == 2 && (l == 2 || l == 4))))
    throw UnsupportedInteraction("supported interactions: (1,2), (2,2), (2,4)");
  return d_higher_from_aux(aux_coefficients(l_c, p), l);
}

TransitionReport transition_number(int l_c, const Params& p) {
  const Context ctx = make_context(l_c, p, /*need_k_positive=*/true);
  check_pole(ctx, p);
  const AuxCoefficients aux = aux_coefficients(l_c, p);

  TransitionReport rep;
  rep.l_c = l_c;
  rep.near_pole = std::abs(ctx.reg.R0 - p.R) < 1e-6 * std::abs(ctx.reg.R0);
  rep.d_terms.push_back({0, 2, d_zero_mode(l_c, p)});
  for (int l = 2; l <= 2 * l_c; l += 2)
    rep.d_terms.push_back({l, 2, d_higher_from_aux(aux, l)});

  rep.q = 0.0;
  for (const DTerm& d : rep.d_terms) rep.q += d.value;

  constexpr double kMarginalBand = 1e-10;
  rep.classification = std::abs(rep.q) < kMarginalBand ? TransitionType::Marginal
                       : rep.q > 0.0                   ? TransitionType::TypeI
                                                       : TransitionType::TypeII;

  rep.cm = cm_from_aux(aux, p, ctx);

  rep.attractor_radius_sq.reset();
  if (rep.classification == TransitionType::TypeI &&
      p.sigma() > ctx.reg.sigma_c) {
    const double beta1 = eigenvalues(l_c, 1, p).betas[0].real();
    if (beta1 > 0.0) rep.attractor_radius_sq = beta1 / rep.q;
  }
  return rep;
}

double critical_R_star(int l_c, double Le, double Pr, double r) {
  if (!(Le < 1.0))
    throw NoSignChange("q keeps one sign for Le >= 1");
  const SigmaCrit sc = sigma_crit(r);
  if (sc.l_c != l_c)
    throw InvalidParams("aspect ratio selects a different critical degree");
  const double R0 = (Le + Pr) / ((1.0 - Le) * Pr) * sc.sigma_c;

  const auto q_at = [&](double R) {
    return transition_number(l_c, Params::at_criticality(Pr, Le, R, r)).q;
  };
  // The printed interaction coefficients degenerate to 0/0 at R == sigma_c
  // (one branch has beta = -Le (alpha^2 + 4 pi^2) exactly when the saline
  // forcing vanishes), so the bracket starts a hair above it.
  double lo = sc.sigma_c * (1.0 + 1e-6);
  double hi = R0 * (1.0 - 1e-6);
  if (!(lo < hi)) throw NoSignChange("empty search bracket");
  double q_lo = q_at(lo);
  const double q_hi = q_at(hi);
  if (q_lo == 0.0) return lo;
  if (q_hi == 0.0) return hi;
  if ((q_lo > 0.0) == (q_hi > 0.0))
    throw NoSignChange("q keeps one sign across the search bracket");
  while (hi - lo > 1e-4) {
    const double mid = 0.5 * (lo + hi);
    const double q_mid = q_at(mid);
    if (q_mid == 0.0) return mid;
    if ((q_mid > 0.0) == (q_lo > 0.0)) {
      lo = mid;
      q_lo = q_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

CenterManifoldCoeffs center_manifold_coeffs(int l_c, const Params& p) {
  const Context ctx = make_context(l_c, p, /*need_k_positive=*/true);
  return cm_from_aux(aux_coefficients(l_c, p), p, ctx);
}

}  // namespace sphthc
