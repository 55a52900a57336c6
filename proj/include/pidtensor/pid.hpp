/**
 * @file pid.hpp
 * @brief Partial information decomposition over transmission paths:
 *        redundancy as the weakest permutation path, unique information by
 *        subtraction, synergy as the residual, full lattice atoms by
 *        Möbius inversion, plus the hidden-common-cause test and the
 *        ordering/overdetermination reports.
 *
 * Redundancy of a source collection is the minimum path mutual information
 * over every permutation of the collection's elements followed by the
 * target, keeping only paths whose consecutive edges exist in the given
 * structure.  An empty path set means redundancy 0 (nothing is transmitted
 * along any admissible route).  A single-element collection contributes
 * the ungated self-path {x}{x}{t}, so self-redundancy is always I(X;T).
 *
 * Unique information is I(source_k; target) minus the bottom-node
 * redundancy; genuine negativity (not float noise) indicates an
 * inconsistent pinned structure and raises InvariantError.  Synergy is the
 * residual total − Σ unique − redundancy and may legitimately be negative;
 * a negative value (or any negative lattice atom) is flagged, never
 * suppressed.
 */
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pidtensor/lattice.hpp"
#include "pidtensor/structure.hpp"

namespace pidtensor {

/// Antichain of source VarSets plus the target they inform about.
struct SourceCollection {
  std::vector<VarSet> elements;
  VarSet target;

  /// Validates: >= 1 element, no element's name set contained in
  /// another's (NotSupported), target disjoint from every element
  /// (OverlapError).
  static SourceCollection of(std::vector<VarSet> elements, VarSet target);
};

/// All admissible transmission paths for the collection (possibly none).
std::vector<Path> redundancy_paths(const Structure& structure, const SourceCollection& sources);

/// Weakest admissible path in bits; 0 when no path exists. Always >= 0.
double redundancy(const JointDistribution& joint, const Structure& structure,
                  const SourceCollection& sources);

/// I(source_k; target) − redundancy(sources); >= 0 up to the numeric
/// floor, below which InvariantError (the pinned structure is
/// inconsistent with the joint).
double unique(const JointDistribution& joint, const Structure& structure, const VarSet& source_k,
              const SourceCollection& sources);

/// Residual total − Σ unique − redundancy; signed.
double synergy(const JointDistribution& joint, const Structure& structure,
               const SourceCollection& sources);

/// One lattice node's cumulative redundancy and Möbius atom.
struct PidAtom {
  LatticeNode node;
  std::string label;   ///< "{1}{2}" display form
  double cumulative;   ///< redundancy of the node's realized collection
  double atom;         ///< Möbius increment at this node
};

struct PidFlags {
  bool negative_atom = false;          ///< some lattice atom < -1e-9
  bool hidden_cause_warning = false;   ///< some source pair triggers the hidden test
  bool structural_ambiguity = false;   ///< several structures explain the joint
};

/// Full decomposition result.
struct PidResult {
  std::vector<VarSet> sources;
  VarSet target;
  double total;                 ///< I(all sources joined; target)
  double redundancy;            ///< bottom lattice node cumulative
  std::vector<double> unique;   ///< aligned with sources
  double synergy;               ///< residual; equals the top atom for 2 sources
  std::vector<PidAtom> atoms;   ///< every lattice node, canonical order
  PidFlags flags;
  EdgeSet structure_used;
  std::vector<EdgeSet> structure_candidates;
};

/// Decompose I(sources; target) over the redundancy lattice.  2 or 3
/// sources (NotSupported otherwise); sources form an antichain and are
/// disjoint from the target.  When no structure is given, the canonical
/// inferred one is used and any inference ambiguity is flagged.
PidResult decompose(std::shared_ptr<const JointDistribution> joint, const VarSet& target,
                    const std::vector<VarSet>& sources,
                    const std::optional<Structure>& structure = std::nullopt,
                    double tol = kDefaultTolerance);

/// Hidden-common-cause verdict for a variable pair and a target.
struct HiddenCauseReport {
  bool flagged = false;
  double margin = 0.0;  ///< interaction information + min one-mediator path MI
};

/// Flags when the interaction information is strictly more negative than
/// the weakest one-mediator path can account for — evidence of an
/// unobserved common cause.  x, y, z must be pairwise disjoint.
HiddenCauseReport check_hidden_variable(const JointDistribution& joint, const VarSet& x,
                                        const VarSet& y, const VarSet& z,
                                        double tol = kDefaultTolerance);

/// One lattice cover relation evaluated against computed redundancies.
struct LatticeOrderEntry {
  LatticeNode lower;
  LatticeNode upper;
  double lower_value;
  double upper_value;
  double slack;       ///< upper_value - lower_value
  bool satisfied;     ///< slack >= -tol
  bool guaranteed;    ///< ordering provable from the DPI alone
};

/// Evaluate every Hasse edge of the lattice; violations are reported,
/// and never occur on the `guaranteed` subclass.
std::vector<LatticeOrderEntry> lattice_order_report(const JointDistribution& joint,
                                                    const Structure& structure,
                                                    const std::vector<VarSet>& sources,
                                                    const VarSet& target,
                                                    double tol = kDefaultTolerance);

/// Source-unique totals versus what the target can hold.
struct OverdeterminationReport {
  double unique_sum;
  double target_entropy;
  bool negative_forced;  ///< unique_sum > target_entropy + tol
};

/// When per-source unique information exceeds H(target), some lattice
/// atom is forced negative.  Structure defaults to the canonical
/// inferred one.
OverdeterminationReport overdetermination_report(
    std::shared_ptr<const JointDistribution> joint, const VarSet& target,
    const std::vector<VarSet>& sources, const std::optional<Structure>& structure = std::nullopt,
    double tol = kDefaultTolerance);

}  // namespace pidtensor
