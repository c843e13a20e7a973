#pragma once

namespace hardy {

// Amplitude-level comparison tolerance. Every canonical amplitude in this
// project is a dyadic rational times a power of 1/sqrt(2), so doubles carry
// them to ~1e-16 and 1e-9 leaves seven orders of headroom.
inline constexpr double kAmplitudeTol = 1e-9;

// Amplitudes with modulus below this are dropped from sparse states.
inline constexpr double kPruneThreshold = 1e-12;

// Tolerance for Minkowski interval classification and boosted-time ties.
inline constexpr double kGeomEpsilon = 1e-9;

// A conditional probability >= 1 - kCertaintyTol counts as "probability one".
inline constexpr double kCertaintyTol = 1e-9;

}  // namespace hardy
