/**
 * @file info.hpp
 * @brief Shannon quantities over joints: entropy, MI, conditional MI,
 *        interaction information.
 *
 * Conventions (shared library-wide):
 *   - all results are float64 bits; logs are evaluated at the final step;
 *   - 0 * log 0 := 0 — zero-probability cells are skipped in every sum;
 *   - quantities that are mathematically nonnegative are clamped to 0 when
 *     they land in (-1e-12, 0); anything at or below -1e-12 indicates an
 *     internal inconsistency and raises InvariantError.
 */
#pragma once

#include "pidtensor/joint.hpp"

namespace pidtensor {

/// Library-wide default comparison tolerance (float mode).
inline constexpr double kDefaultTolerance = 1e-9;
/// Floor below which a "nonnegative" float result is treated as a bug.
inline constexpr double kNonNegFloor = 1e-12;

/// Clamp tiny negative rounding noise to zero; InvariantError below -1e-12.
double clamp_nonneg(double x, const char* what);

/// Equality under the dual-arithmetic convention: exact operands compare
/// exactly; otherwise within tol.
bool prob_close(const Prob& a, const Prob& b, double tol);

/// -sum p log2 p  in bits.
double entropy(const Pmf& pmf);

/// Entropy of the joined marginal of `vars`.
double entropy(const JointDistribution& joint, const VarSet& vars);

/// I(a;b) in bits; OverlapError if the sets share a variable.
double mutual_information(const JointDistribution& joint, const VarSet& a, const VarSet& b);

/// I(a;b|given) in bits; OverlapError if any two sets share a variable.
double conditional_mutual_information(const JointDistribution& joint, const VarSet& a,
                                      const VarSet& b, const VarSet& given);

/// I(x;y|z) - I(x;y) in bits; signed. OverlapError on shared variables.
double interaction_information(const JointDistribution& joint, const VarSet& x,
                               const VarSet& y, const VarSet& z);

}  // namespace pidtensor
