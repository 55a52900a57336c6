/**
 * @file structure.hpp
 * @brief Graph structure inference: classifying every variable pair as a
 *        direct edge, an indirect (cascade-explained) edge, or an absent
 *        (no-information) edge, and enumerating the maximal consistent
 *        edge-removal outcomes.
 *
 * An edge is removable for two reasons:
 *   - no_information: its tensor has identical supported rows;
 *   - indirect: some mediator sequence of other variables reproduces the
 *     edge tensor exactly (within tolerance) in BOTH orientations.
 *
 * infer_structures enumerates every subset of informative edges that can be
 * removed simultaneously — each removed edge must be explainable by a
 * cascade whose hops all survive — such that no kept edge remains
 * explainable (maximality).  Several outcomes may coexist; ambiguity is
 * surfaced, never silently resolved, and callers may pin a choice via a
 * structure override (a JSON list of retained edge name-pairs).
 *
 * A Structure also answers edge-existence queries for paths through joined
 * (composite) variable sets: singleton pairs use the retained-edge set,
 * while pairs involving a joined VarSet are classified on demand against
 * the joint with the same mediator rule (mediators are the remaining
 * singleton variables).
 */
#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pidtensor/tensor.hpp"

namespace pidtensor {

/// Classification of one variable-pair edge.
enum class EdgeKind { Direct, Indirect, NoInformation };

/// Edge verdict; indirect carries the witness mediator sequence (in the
/// orientation first -> mediators -> second of the normalized pair).
struct EdgeStatus {
  EdgeKind kind = EdgeKind::Direct;
  std::vector<std::string> witness;  ///< mediator names, empty unless indirect
};

/// Unordered variable pair, normalized so first < second.
using EdgePair = std::pair<std::string, std::string>;

/// Normalize an unordered pair.
EdgePair make_edge(const std::string& a, const std::string& b);

/// Set of retained edges — the serialized structure-override format.
using EdgeSet = std::set<EdgePair>;

/// Inferred (or pinned) graph over a joint's variables.
class Structure {
 public:
  Structure(std::shared_ptr<const JointDistribution> joint, EdgeSet retained,
            std::map<EdgePair, EdgeStatus> edges, double tol);

  /// Structure in which every edge exists (no gating at all): redundancy
  /// over it is the plain minimum over all permutation transmission paths.
  static Structure complete(std::shared_ptr<const JointDistribution> joint,
                            double tol = kDefaultTolerance);

  const JointDistribution& joint() const { return *joint_; }
  std::shared_ptr<const JointDistribution> joint_ptr() const { return joint_; }
  const EdgeSet& retained_edges() const { return retained_; }
  const std::map<EdgePair, EdgeStatus>& edges() const { return edges_; }
  double tolerance() const { return tol_; }

  bool ambiguity_flag() const { return ambiguous_; }
  const std::vector<EdgeSet>& candidates() const { return candidates_; }
  void set_candidates(std::vector<EdgeSet> candidates, bool ambiguous);

  /// Edge existence between two path vertices.  Singleton-singleton pairs
  /// look up the retained set; pairs involving a joined VarSet are
  /// classified on demand (Direct means the edge exists).
  bool edge_exists(const VarSet& a, const VarSet& b) const;

 private:
  std::shared_ptr<const JointDistribution> joint_;
  EdgeSet retained_;
  std::map<EdgePair, EdgeStatus> edges_;
  std::vector<EdgeSet> candidates_;
  bool ambiguous_ = false;
  bool complete_ = false;
  double tol_;
};

/// Classify the edge between disjoint VarSets a and b; OverlapError on
/// overlap.  Mediator sequences range over ordered tuples of distinct
/// remaining singleton variables; indirect requires tensor equality in
/// both orientations.
EdgeStatus edge_test(const JointDistribution& joint, const VarSet& a, const VarSet& b,
                     double tol = kDefaultTolerance);

/// Enumerate all maximal consistent edge-removal outcomes (see file docs).
/// More than one outcome sets ambiguity_flag on every result.
std::vector<Structure> infer_structures(std::shared_ptr<const JointDistribution> joint,
                                        double tol = kDefaultTolerance);
std::vector<Structure> infer_structures(const JointDistribution& joint,
                                        double tol = kDefaultTolerance);

/// Deterministic pick among candidates: fewest edges, then largest total
/// MI over retained edges, then lexicographically smallest retained edge
/// set.  The result carries the full candidate list; InternalError if the
/// list is empty.
Structure canonical_structure(const std::vector<Structure>& candidates);

/// Build a Structure from an explicit retained-edge set (override files).
/// Edges must name distinct known variables; NameError otherwise.
Structure structure_from_retained(std::shared_ptr<const JointDistribution> joint,
                                  const EdgeSet& retained, double tol = kDefaultTolerance);

namespace detail {

/// Edge classification that permits joined/overlapping VarSets (the
/// composite-node gating rule; mediators are the remaining singletons).
EdgeStatus edge_status_general(const JointDistribution& joint, const VarSet& a, const VarSet& b,
                               double tol);

}  // namespace detail

}  // namespace pidtensor
