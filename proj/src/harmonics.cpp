#include "sphthc/harmonics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include <boost/multiprecision/cpp_int.hpp>

#include "sphthc/errors.hpp"

namespace sphthc {

namespace {

constexpr double kPi = std::numbers::pi;

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

void check_index(const HarmonicIndex& i) {
  if (i.l < 0) throw InvalidParams("harmonic degree must be nonnegative");
  if (i.l > kMaxHarmonicDegree)
    throw InvalidParams("harmonic degree exceeds the exact-arithmetic cap");
  if (std::abs(i.m) > i.l) throw InvalidParams("|m| must not exceed l");
}

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

int parity_sign(int e) { return (e % 2 + 2) % 2 == 0 ? 1 : -1; }

// Real theta-profile of Y_lm: Y_lm(theta, phi) = S_lm(cos theta) e^{i m phi}.
double theta_profile(const HarmonicIndex& i, double x) {
  const double p = norm_assoc_legendre(i.l, std::abs(i.m), x);
  return i.m >= 0 ? p : parity_sign(i.m) * p;
}

}  // namespace

namespace {

GaussLegendre compute_gauss_legendre(int n) {
  GaussLegendre gl;
  gl.nodes.assign(n, 0.0);
  gl.weights.assign(n, 0.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Root of P_n nearest to this Chebyshev-like guess, by Newton.
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    gl.nodes[i] = -x;
    gl.weights[i] = w;
    gl.nodes[n - 1 - i] = x;
    gl.weights[n - 1 - i] = w;
  }
  return gl;
}

}  // namespace

GaussLegendre gauss_legendre(int n) {
  if (n < 1) throw InvalidParams("need at least one quadrature node");
  static std::mutex mutex;
  static std::map<int, GaussLegendre> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_gauss_legendre(n)).first;
  return it->second;
}

// Stable forward recurrence on the fully normalized functions; the l = m
// seed carries the Condon-Shortley phase.
double norm_assoc_legendre(int l, int m, double x) {
  if (m < 0 || m > l) throw InvalidParams("need 0 <= m <= l");
  const double sx = std::sqrt(std::max(0.0, 1.0 - x * x));
  double pmm = std::sqrt(1.0 / (4.0 * kPi));
  for (int k = 1; k <= m; ++k)
    pmm *= -std::sqrt((2.0 * k + 1.0) / (2.0 * k)) * sx;
  if (l == m) return pmm;
  double pm1 = std::sqrt(2.0 * m + 3.0) * x * pmm;
  if (l == m + 1) return pm1;
  for (int k = m + 2; k <= l; ++k) {
    const double a = std::sqrt((4.0 * k * k - 1.0) /
                               (static_cast<double>(k - m) * (k + m)));
    const double b = std::sqrt((2.0 * k + 1.0) * (k - 1.0 - m) * (k - 1.0 + m) /
                               ((2.0 * k - 3.0) * (k - m) * (k + m)));
    const double pk = a * x * pm1 - b * pmm;
    pmm = pm1;
    pm1 = pk;
  }
  return pm1;
}

std::complex<double> ylm(int l, int m, double theta, double phi) {
  check_index({l, m});
  const double s = theta_profile({l, m}, std::cos(theta));
  return std::polar(1.0, m * phi) * s;
}

std::complex<double> ylm_dtheta(int l, int m, double theta, double phi) {
  check_index({l, m});
  const int ma = std::abs(m);
  const double x = std::cos(theta);
  const double sx = std::sin(theta);
  if (std::abs(sx) < 1e-12)
    throw InvalidParams("theta derivative is evaluated away from the poles");
  const double pl = norm_assoc_legendre(l, ma, x);
  double d = l * x * pl;
  if (l > ma) {
    const double c = std::sqrt((2.0 * l + 1.0) * (l + ma) * (l - ma) /
                               (2.0 * l - 1.0));
    d -= c * norm_assoc_legendre(l - 1, ma, x);
  }
  d /= sx;
  const double s = m >= 0 ? d : parity_sign(m) * d;
  return std::polar(1.0, m * phi) * s;
}

double wigner_3j(int l1, int l2, int l3, int m1, int m2, int m3) {
  if (l1 < 0 || l2 < 0 || l3 < 0) throw InvalidParams("negative degree");
  if (std::abs(m1) > l1 || std::abs(m2) > l2 || std::abs(m3) > l3) return 0.0;
  if (m1 + m2 + m3 != 0) return 0.0;
  if (l3 < std::abs(l1 - l2) || l3 > l1 + l2) return 0.0;

  const int tmin = std::max({0, l2 - l3 - m1, l1 - l3 + m2});
  const int tmax = std::min({l1 + l2 - l3, l1 - m1, l2 + m2});
  BigRat sum = 0;
  for (int t = tmin; t <= tmax; ++t) {
    BigInt den = factorial(t) * factorial(l3 - l2 + t + m1) *
                 factorial(l3 - l1 + t - m2) * factorial(l1 + l2 - l3 - t) *
                 factorial(l1 - t - m1) * factorial(l2 - t + m2);
    sum += BigRat(BigInt(t % 2 == 0 ? 1 : -1), den);
  }
  if (sum == 0) return 0.0;

  const BigRat delta(
      factorial(l1 + l2 - l3) * factorial(l1 - l2 + l3) *
          factorial(-l1 + l2 + l3),
      factorial(l1 + l2 + l3 + 1));
  const BigInt prod = factorial(l1 + m1) * factorial(l1 - m1) *
                      factorial(l2 + m2) * factorial(l2 - m2) *
                      factorial(l3 + m3) * factorial(l3 - m3);
  const BigRat under = delta * BigRat(prod) * sum * sum;
  const double mag = std::sqrt(under.convert_to<double>());
  const double sign = (sum > 0 ? 1.0 : -1.0) * parity_sign(l1 - l2 - m3);
  return sign * mag;
}

double gaunt_closed_form(HarmonicIndex a, HarmonicIndex b, HarmonicIndex c) {
  check_index(a);
  check_index(b);
  check_index(c);
  if (a.m + b.m != c.m) return 0.0;
  if (c.l < std::abs(a.l - b.l) || c.l > a.l + b.l) return 0.0;
  const double w0 = wigner_3j(a.l, b.l, c.l, 0, 0, 0);
  if (w0 == 0.0) return 0.0;
  const double wm = wigner_3j(a.l, b.l, c.l, a.m, b.m, -c.m);
  const double norm = std::sqrt((2.0 * a.l + 1.0) * (2.0 * b.l + 1.0) *
                                (2.0 * c.l + 1.0) / (4.0 * kPi));
  return parity_sign(c.m) * norm * w0 * wm;
}

std::complex<double> triple_product_quadrature(HarmonicIndex a,
                                               HarmonicIndex b,
                                               HarmonicIndex c, int n_theta,
                                               int n_phi) {
  check_index(a);
  check_index(b);
  check_index(c);
  const int need_theta = a.l + b.l + c.l + 1;
  const int need_phi = std::abs(a.m) + std::abs(b.m) + std::abs(c.m) + 1;
  if (n_theta < need_theta || n_phi < need_phi)
    throw InvalidParams("node counts below the exactness requirement");

  // The integrand factors into a theta polynomial and e^{i dm phi}; the
  // tensor-product sums are evaluated factor by factor.
  const GaussLegendre gl = gauss_legendre(n_theta);
  double theta_sum = 0.0;
  for (int i = 0; i < n_theta; ++i) {
    const double x = gl.nodes[i];
    theta_sum += gl.weights[i] * theta_profile(a, x) * theta_profile(b, x) *
                 theta_profile(c, x);
  }
  const int dm = a.m + b.m - c.m;
  std::complex<double> phi_sum = 0.0;
  for (int j = 0; j < n_phi; ++j)
    phi_sum += std::polar(1.0, dm * 2.0 * kPi * j / n_phi);
  phi_sum *= 2.0 * kPi / n_phi;
  return theta_sum * phi_sum;
}

std::complex<double> triple_product_quadrature(HarmonicIndex a,
                                               HarmonicIndex b,
                                               HarmonicIndex c) {
  return triple_product_quadrature(
      a, b, c, a.l + b.l + c.l + 1,
      std::abs(a.m) + std::abs(b.m) + std::abs(c.m) + 1);
}

std::vector<std::pair<int, int>> interaction_support(int l_c) {
  if (l_c != 1 && l_c != 2)
    throw UnsupportedDegree("interaction support is tabulated for l_c in {1, 2}");
  std::vector<std::pair<int, int>> out;
  for (int l = 1; l <= 2 * l_c; ++l) out.emplace_back(l, 0);
  out.emplace_back(0, 2);
  // Odd degrees drop out by parity of the triple products.
  for (int l = 2; l <= 2 * l_c; l += 2) out.emplace_back(l, 2);
  return out;
}

}  // namespace sphthc
