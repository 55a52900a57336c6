/**
 * @file tensor.hpp
 * @brief Causal tensors: row-stochastic transition matrices between
 *        (possibly joined) variables, their composition along transmission
 *        paths, Bayes reconstruction, and path mutual information.
 *
 * A CausalTensor holds A^j_i = p(destination = j | source = i) with rows
 * indexed by the source's joined alphabet and columns by the destination's.
 * Rows whose source symbol has zero marginal probability are unsupported:
 * they are stored as zeros, flagged in row_support, and excluded from
 * equality tests, no-information tests, and information sums.
 *
 * Path mutual information uses the cascade-induced joint p^i T^k_i — the
 * source marginal pushed through the composed tensor — NOT the observed
 * joint of the endpoint variables.  Because every edge tensor is extracted
 * from the same joint, each intermediate induced marginal equals the true
 * marginal, which is what makes the reversal symmetry (see
 * reconstruction_tensor) exact.
 */
#pragma once

#include <vector>

#include "pidtensor/info.hpp"
#include "pidtensor/joint.hpp"

namespace pidtensor {

/// Row-stochastic transition matrix between two (possibly joined) variables.
struct CausalTensor {
  VarSet source;
  VarSet destination;
  Alphabet source_alphabet;
  Alphabet destination_alphabet;
  ProbMatrix matrix;              ///< rows: source symbols; cols: destination symbols
  std::vector<bool> row_support;  ///< false where the source symbol has zero mass

  std::size_t rows() const { return source_alphabet.size(); }
  std::size_t cols() const { return destination_alphabet.size(); }
};

/// Ordered sequence of VarSets: {source}{mediators...}{destination}.
/// Consecutive vertices must differ, except the self-path segment {x}{x}.
struct Path {
  std::vector<VarSet> vertices;

  /// Validates length >= 2. (Equal-adjacent segments are allowed; they
  /// contribute identity tensors.)
  static Path of(std::vector<VarSet> vertices);

  std::string label() const;  ///< "{X}{Y}{Z}" display form
};

/// p(dst | src) from the joint; OverlapError if src and dst share variables.
CausalTensor tensor_from_joint(const JointDistribution& joint, const VarSet& src,
                               const VarSet& dst);

namespace detail {

/// As tensor_from_joint but permits overlapping VarSets (used by paths
/// through joined lattice nodes such as {XY} -> {XZ}; shared components
/// must agree, all other combinations get zero mass).
CausalTensor edge_tensor(const JointDistribution& joint, const VarSet& src, const VarSet& dst);

/// Identity (Kronecker delta) tensor of the {x}{x} self-path segment.
CausalTensor identity_tensor(const JointDistribution& joint, const VarSet& vars);

}  // namespace detail

/// Bayes inversion: A^{++i}_j = A^j_i p^i / p^j where p^j = src_pmf * A.
/// The result maps the destination pmf back to src_pmf.
/// InvariantError if a destination symbol with zero mass receives mass.
CausalTensor reconstruction_tensor(const CausalTensor& tensor, const Pmf& src_pmf);

/// Matrix product: T^k_i = sum_j A^j_i B^k_j; ShapeError on alphabet mismatch.
CausalTensor compose(const CausalTensor& first, const CausalTensor& second);

/// p_out^j = sum_i p_in^i A^j_i; ShapeError on alphabet mismatch.
Pmf apply(const CausalTensor& tensor, const Pmf& input);

/// True iff all supported rows are pairwise equal (exact mode: exactly;
/// float mode: within tol).  Identical rows transmit zero information.
bool is_no_information(const CausalTensor& tensor, double tol = kDefaultTolerance);

/// Elementwise equality on supported rows; ShapeError on alphabet mismatch.
/// Rows supported in one tensor but not the other compare unequal.
bool tensors_equal(const CausalTensor& a, const CausalTensor& b, double tol = kDefaultTolerance);

/// Left-fold of compose over consecutive edge tensors; {x}{x} contributes
/// the identity.  Consecutive overlapping VarSets are permitted.
CausalTensor path_tensor(const JointDistribution& joint, const Path& path);

/// I = sum_{i,k} p^i T^k_i log2(T^k_i / q^k) with q = p * T (the induced
/// destination marginal); p is the path source's marginal from the joint.
double path_mutual_information(const JointDistribution& joint, const Path& path);

}  // namespace pidtensor
