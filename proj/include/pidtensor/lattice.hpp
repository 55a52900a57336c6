/**
 * @file lattice.hpp
 * @brief The redundancy lattice: antichains of source-index subsets, their
 *        partial order, Hasse diagram, and node realization.
 *
 * A lattice node is an antichain of nonempty subsets of {0..n-1} (source
 * indices); subsets are stored as bitmasks.  alpha <= beta iff every
 * element of beta contains some element of alpha — moving up the lattice
 * means coarser, more synergistic collections.
 *
 * Hasse edges are tagged `guaranteed` when the cumulative-information
 * ordering along them follows from the data-processing inequality alone:
 *   - collection-subset steps (the upper node's elements are a subset of
 *     the lower node's — dropping a minimand cannot decrease a minimum);
 *   - single-element enlargements ({S} -> {T} with S a subset of T — the
 *     information a joined variable carries grows with its parts).
 * The remaining cover relations can be violated by particular joints; the
 * library reports their ordering but never asserts it.
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pidtensor/joint.hpp"

namespace pidtensor {

/// One collection element: bitmask over source indices (bit i = source i).
using SourceMask = std::uint32_t;

/// Antichain of source-index subsets; elements canonically sorted by
/// (popcount, then index order) and pairwise incomparable.
struct LatticeNode {
  std::vector<SourceMask> elements;

  /// Canonicalizes (sorts, validates nonempty elements and antichain
  /// property; InternalError otherwise).
  static LatticeNode of(std::vector<SourceMask> elements);

  bool operator==(const LatticeNode& o) const { return elements == o.elements; }
  bool operator!=(const LatticeNode& o) const { return !(*this == o); }
  bool operator<(const LatticeNode& o) const;  ///< canonical listing order
};

/// "{1}{23}" display form (1-based source digits).
std::string node_label(const LatticeNode& node);

/// alpha <= beta in the redundancy lattice.
bool node_leq(const LatticeNode& alpha, const LatticeNode& beta);

/// All antichains of nonempty subsets of {0..n-1}, canonically ordered
/// (4 nodes for n = 2, 18 for n = 3).  NotSupported outside 1..3.
std::vector<LatticeNode> antichain_nodes(std::size_t n_sources);

/// Cover relation of the lattice with the DPI tag (see file docs).
struct HasseEdge {
  LatticeNode lower;
  LatticeNode upper;
  bool guaranteed = false;
};

std::vector<HasseEdge> hasse_edges(const std::vector<LatticeNode>& nodes);

/// Realize a node's elements as joined VarSets: element {i,j} becomes the
/// concatenation of sources[i] and sources[j] in index order.
std::vector<VarSet> realize_node(const LatticeNode& node, const std::vector<VarSet>& sources);

}  // namespace pidtensor
