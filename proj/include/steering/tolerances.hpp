#pragma once

// Every tolerance used by a public contract, in one place. Values are part of
// the behavioral contract of the library and are asserted by the test suite.

namespace steering::tol {

inline constexpr double kUnitNorm = 1e-12;        // normalization contract for vectors and states
inline constexpr double kIdentity = 1e-12;        // exact operator identities
inline constexpr double kHermitian = 1e-10;       // admissible Hermiticity defect of inputs
inline constexpr double kResidual = 1e-10;        // eigenpair residual contract
inline constexpr double kCluster = 1e-9;          // degenerate-eigenvalue grouping width
inline constexpr double kOrthonormal = 1e-10;     // pairwise-dot bound for an orthonormal set
inline constexpr double kNearOrthonormal = 1e-6;  // upper edge of the rejected near-orthonormal band
inline constexpr double kDecision = 1e-9;         // violation verdict margin
inline constexpr double kPhase = 1e-10;           // reconstruction up to global phase
inline constexpr double kOptimizerGap = 1e-6;     // certification gap budget over optimizer noise
inline constexpr double kCrossCheck = 1e-10;      // closed-form vs matrix-path agreement

}  // namespace steering::tol
