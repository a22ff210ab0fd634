#pragma once

namespace nvgroups {

// Point equality on S^3 and on SO(3).
inline constexpr double kPointEps = 1e-9;

// Allowed drift of |q| from 1 after explicit renormalization.
inline constexpr double kUnitEps = 1e-12;

// Matched-pair distance allowed by the axiom checks. Products of n^2
// branches accumulate more error than a single point comparison.
inline constexpr double kAxiomTolerance = 1e-6;

// Real-part preservation under conjugation.
inline constexpr double kReTolerance = 1e-12;

// Two G-images closer than this mark a sample as near the singular set.
inline constexpr double kGenericSeparation = 100 * kPointEps;

// Distinct G-images this close to the canonical maximum raise a tie warning.
inline constexpr double kTieBand = 10 * kPointEps;

}  // namespace nvgroups
