#pragma once

#include <array>
#include <complex>

namespace sphthc {

// Roots of the monic cubic x^3 + b2 x^2 + b1 x + b0 with real coefficients,
// ordered by descending real part, ties broken by descending imaginary part.
//
// Closed form (trigonometric for three real roots, Cardano otherwise)
// followed by one Newton step per root. Non-real roots are returned as an
// exact conjugate pair. Borderline discriminants (within 1e-12 relative of
// zero) are resolved toward the complex-pair branch before polishing.
std::array<std::complex<double>, 3> solve_cubic(double b2, double b1,
                                                double b0);

}  // namespace sphthc
