/**
 * @file lattice.cpp
 * @brief Antichain enumeration, lattice order, Hasse covers.
 */
#include "pidtensor/lattice.hpp"

#include <algorithm>
#include <bit>

#include "pidtensor/errors.hpp"

namespace pidtensor {

namespace {

bool mask_subset(SourceMask a, SourceMask b) { return (a & b) == a; }

/// Canonical element order: fewer indices first, then by index sequence.
bool element_less(SourceMask a, SourceMask b) {
  int pa = std::popcount(a), pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  // Equal popcount: compare index sequences lexicographically.  The lowest
  // set bits decide, so compare from the least significant end.
  while (a != 0 && b != 0) {
    int la = std::countr_zero(a), lb = std::countr_zero(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return false;
}

bool element_list_less(const std::vector<SourceMask>& a, const std::vector<SourceMask>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), element_less);
}

}  // namespace

LatticeNode LatticeNode::of(std::vector<SourceMask> elements) {
  if (elements.empty()) throw InternalError("lattice node requires at least one element");
  std::sort(elements.begin(), elements.end(), element_less);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] == 0) throw InternalError("lattice node element is empty");
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      if (mask_subset(elements[i], elements[j]) || mask_subset(elements[j], elements[i])) {
        throw InternalError("lattice node elements must form an antichain");
      }
    }
  }
  return LatticeNode{std::move(elements)};
}

bool LatticeNode::operator<(const LatticeNode& o) const {
  if (elements.size() != o.elements.size()) return elements.size() < o.elements.size();
  return element_list_less(elements, o.elements);
}

std::string node_label(const LatticeNode& node) {
  std::string out;
  for (SourceMask el : node.elements) {
    out += '{';
    for (int i = 0; i < 32; ++i) {
      if (el >> i & 1) out += static_cast<char>('1' + i);
    }
    out += '}';
  }
  return out;
}

bool node_leq(const LatticeNode& alpha, const LatticeNode& beta) {
  return std::all_of(beta.elements.begin(), beta.elements.end(), [&](SourceMask b) {
    return std::any_of(alpha.elements.begin(), alpha.elements.end(),
                       [&](SourceMask a) { return mask_subset(a, b); });
  });
}

std::vector<LatticeNode> antichain_nodes(std::size_t n_sources) {
  if (n_sources < 1 || n_sources > 3) {
    throw NotSupported("redundancy lattice supports 1 to 3 sources, got " +
                       std::to_string(n_sources));
  }
  std::vector<SourceMask> subsets;
  for (SourceMask m = 1; m < (SourceMask{1} << n_sources); ++m) subsets.push_back(m);
  std::sort(subsets.begin(), subsets.end(), element_less);

  std::vector<LatticeNode> nodes;
  std::vector<SourceMask> current;
  auto extend = [&](auto&& self, std::size_t start) -> void {
    if (!current.empty()) nodes.push_back(LatticeNode::of(current));
    for (std::size_t i = start; i < subsets.size(); ++i) {
      bool comparable = std::any_of(current.begin(), current.end(), [&](SourceMask c) {
        return mask_subset(c, subsets[i]) || mask_subset(subsets[i], c);
      });
      if (comparable) continue;
      current.push_back(subsets[i]);
      self(self, i + 1);
      current.pop_back();
    }
  };
  extend(extend, 0);
  std::sort(nodes.begin(), nodes.end());
  return nodes;
}

std::vector<HasseEdge> hasse_edges(const std::vector<LatticeNode>& nodes) {
  std::vector<HasseEdge> edges;
  for (const auto& a : nodes) {
    for (const auto& b : nodes) {
      if (a == b || !node_leq(a, b)) continue;
      bool covered = std::any_of(nodes.begin(), nodes.end(), [&](const LatticeNode& c) {
        return c != a && c != b && node_leq(a, c) && node_leq(c, b);
      });
      if (covered) continue;
      // DPI-provable cover classes: dropping minimands, or enlarging the
      // element of a single-element node.
      bool subset_step =
          std::all_of(b.elements.begin(), b.elements.end(), [&](SourceMask eb) {
            return std::find(a.elements.begin(), a.elements.end(), eb) != a.elements.end();
          });
      bool enlarge_step = a.elements.size() == 1 && b.elements.size() == 1;
      edges.push_back({a, b, subset_step || enlarge_step});
    }
  }
  return edges;
}

std::vector<VarSet> realize_node(const LatticeNode& node, const std::vector<VarSet>& sources) {
  std::vector<VarSet> out;
  out.reserve(node.elements.size());
  for (SourceMask el : node.elements) {
    VarSet joined;
    for (std::size_t i = 0; i < sources.size(); ++i) {
      if (el >> i & 1) joined.insert(joined.end(), sources[i].begin(), sources[i].end());
    }
    if (joined.empty()) throw InternalError("lattice node element names no sources");
    out.push_back(std::move(joined));
  }
  return out;
}

}  // namespace pidtensor
