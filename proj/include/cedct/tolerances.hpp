#pragma once

// Numeric tolerances used across the library and its test suites, collected
// in one place. All values are calibrated for IEEE double precision with
// grids up to a few hundred intervals.

namespace cedct::tol {

// max-norm bound for D_N * Psi_N - I, N <= 64
inline constexpr double kMatrixInverse = 1e-10;

// discrete orthogonality of the weighted cosine basis, N <= 32
inline constexpr double kOrthogonality = 1e-9;

// reconstruction of samples at grid knots by the cosine series
inline constexpr double kGridExactness = 1e-9;

// agreement between the closed-form kernel sum and the cosine series
inline constexpr double kKernelEquivalence = 1e-9;

// forward transform of a constant: every non-leading coefficient
inline constexpr double kConstantAnnihilation = 1e-12;

inline constexpr double kLinearity = 1e-10;

// derivative of the series vs. the closed-form knot derivative, N <= 32
inline constexpr double kDerivativeConsistency = 1e-8;

// DFT round trip on the first N samples
inline constexpr double kDftRoundTrip = 1e-12;

// Near-knot guard for the closed-form kernel evaluation. Within this band
// the kernel denominators lose too many digits to cancellation, so the
// evaluation falls back to the plain cosine series. Two predicates: a band
// on the normalized distance to the nearest knot, and a band on the cosine
// gap itself (the gap flattens quadratically near the interval endpoints,
// where the distance band alone is not enough).
inline constexpr double kKernelKnotBand = 1e-6;
inline constexpr double kKernelCosineBand = 1e-6;

}  // namespace cedct::tol
