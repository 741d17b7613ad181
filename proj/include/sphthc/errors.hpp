#pragma once

#include <stdexcept>

namespace sphthc {

// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidParams : Error { using Error::Error; };

// Aspect ratio within 1e-9 of a degree-crossing radius r_l; the critical
// degree is ambiguous there (double-critical case, unsupported).
struct CriticalAspectRatio : Error { using Error::Error; };

// A mode-amplitude denominator vanished (resonant degeneracy).
struct SingularMode : Error { using Error::Error; };

// The spectrum scan attained its maximum on the scan boundary.
struct ScanInconclusive : Error { using Error::Error; };

// Operation requires the steady (K > 0) regime.
struct UnsupportedRegime : Error { using Error::Error; };

// R within 1e-9 relative of the pole at R0.
struct PoleAtR0 : Error { using Error::Error; };

struct UnsupportedInteraction : Error { using Error::Error; };
struct SingularBranch : Error { using Error::Error; };
struct UnsupportedDegree : Error { using Error::Error; };
struct NoSignChange : Error { using Error::Error; };
struct ConstraintViolated : Error { using Error::Error; };
struct Diverged : Error { using Error::Error; };
struct TypeIIRegime : Error { using Error::Error; };

}  // namespace sphthc
