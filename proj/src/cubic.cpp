#include "sphthc/cubic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace sphthc {

namespace {

constexpr double kPi = std::numbers::pi;

// One Newton step on the monic cubic; real iterates stay real.
template <typename T>
T polish(T x, double b2, double b1, double b0) {
  const T val = ((x + b2) * x + b1) * x + b0;
  const T der = (3.0 * x + 2.0 * b2) * x + b1;
  if (std::abs(der) > 0.0) return x - val / der;
  return x;
}

}  // namespace

std::array<std::complex<double>, 3> solve_cubic(double b2, double b1,
                                                double b0) {
  // Depressed form t^3 + p t + q with x = t - b2/3.
  const double shift = b2 / 3.0;
  const double p = b1 - b2 * b2 / 3.0;
  const double q = b2 * (2.0 * b2 * b2 / 27.0 - b1 / 3.0) + b0;
  const double half_q = 0.5 * q;
  const double third_p = p / 3.0;
  const double disc = half_q * half_q + third_p * third_p * third_p;
  const double scale =
      std::max(half_q * half_q, std::abs(third_p * third_p * third_p));

  std::array<std::complex<double>, 3> roots;
  if (disc < -1e-12 * scale) {
    // Three distinct real roots, trigonometric form (p < 0 here).
    const double m = 2.0 * std::sqrt(-third_p);
    const double arg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
    const double theta = std::acos(arg) / 3.0;
    for (int k = 0; k < 3; ++k) {
      const double t = m * std::cos(theta - 2.0 * kPi * k / 3.0);
      roots[k] = polish(t - shift, b2, b1, b0);
    }
  } else {
    // One real root plus a conjugate pair; borderline discriminants fall
    // through here with a near-zero imaginary part.
    const double s = std::sqrt(std::max(disc, 0.0));
    const double u3 = half_q > 0.0 ? -half_q - s : -half_q + s;
    const double u = std::cbrt(u3);
    const double v = u != 0.0 ? -third_p / u : 0.0;
    const double real_root = polish(u + v - shift, b2, b1, b0);
    std::complex<double> z(-0.5 * (u + v) - shift,
                           0.5 * std::sqrt(3.0) * std::abs(u - v));
    z = polish(z, b2, b1, b0);
    if (z.imag() < 0.0) z = std::conj(z);
    roots = {std::complex<double>(real_root, 0.0), z, std::conj(z)};
  }

  std::sort(roots.begin(), roots.end(),
            [](const std::complex<double>& a, const std::complex<double>& b) {
              if (a.real() != b.real()) return a.real() > b.real();
              return a.imag() > b.imag();
            });
  return roots;
}

}  // namespace sphthc
