/**
 * @file pid.cpp
 * @brief Redundancy over transmission paths, Möbius atoms, decomposition
 *        flags, hidden-cause test, ordering and overdetermination reports.
 */
#include "pidtensor/pid.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "pidtensor/info.hpp"
#include "pidtensor/tensor.hpp"

namespace pidtensor {

namespace {

bool name_subset(const VarSet& a, const VarSet& b) {
  return std::all_of(a.begin(), a.end(), [&](const std::string& n) {
    return std::find(b.begin(), b.end(), n) != b.end();
  });
}

VarSet dedup_concat(const std::vector<VarSet>& parts) {
  VarSet out;
  for (const auto& part : parts) {
    for (const auto& name : part) {
      if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
    }
  }
  return out;
}

/// Redundancy of an already-validated element list (lattice nodes may
/// realize to name sets that are not antichains; Definition 2's paths are
/// still well-formed for them).
double redundancy_raw(const JointDistribution& joint, const Structure& structure,
                      const std::vector<VarSet>& elements, const VarSet& target) {
  SourceCollection collection{elements, target};
  auto paths = redundancy_paths(structure, collection);
  if (paths.empty()) return 0.0;
  double weakest = path_mutual_information(joint, paths.front());
  for (std::size_t i = 1; i < paths.size(); ++i) {
    weakest = std::min(weakest, path_mutual_information(joint, paths[i]));
  }
  return clamp_nonneg(weakest, "redundancy");
}

Structure default_structure(const std::shared_ptr<const JointDistribution>& joint, double tol) {
  return canonical_structure(infer_structures(joint, tol));
}

}  // namespace

SourceCollection SourceCollection::of(std::vector<VarSet> elements, VarSet target) {
  if (elements.empty()) {
    throw NotSupported("source collection requires at least one element");
  }
  for (const auto& e : elements) {
    if (e.empty()) throw NameError("source element names no variables");
  }
  if (target.empty()) throw NameError("target names no variables");
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < elements.size(); ++j) {
      if (i != j && name_subset(elements[i], elements[j])) {
        throw NotSupported("source elements must form an antichain: " +
                           varset_label(elements[i]) + " is contained in " +
                           varset_label(elements[j]));
      }
    }
  }
  for (const auto& e : elements) {
    for (const auto& name : e) {
      if (std::find(target.begin(), target.end(), name) != target.end()) {
        throw OverlapError("target " + varset_label(target) + " overlaps source " +
                           varset_label(e));
      }
    }
  }
  return SourceCollection{std::move(elements), std::move(target)};
}

std::vector<Path> redundancy_paths(const Structure& structure, const SourceCollection& sources) {
  const auto& els = sources.elements;
  if (els.empty()) throw NotSupported("source collection requires at least one element");
  if (els.size() == 1) {
    // Self-path; never gated (self-redundancy must equal I(X;T)).
    return {Path::of({els.front(), els.front(), sources.target})};
  }
  std::vector<std::size_t> order(els.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<Path> paths;
  do {
    std::vector<VarSet> verts;
    verts.reserve(els.size() + 1);
    for (std::size_t i : order) verts.push_back(els[i]);
    verts.push_back(sources.target);
    bool admissible = true;
    for (std::size_t i = 0; i + 1 < verts.size() && admissible; ++i) {
      admissible = structure.edge_exists(verts[i], verts[i + 1]);
    }
    if (admissible) paths.push_back(Path::of(std::move(verts)));
  } while (std::next_permutation(order.begin(), order.end()));
  return paths;
}

double redundancy(const JointDistribution& joint, const Structure& structure,
                  const SourceCollection& sources) {
  return redundancy_raw(joint, structure, sources.elements, sources.target);
}

double unique(const JointDistribution& joint, const Structure& structure, const VarSet& source_k,
              const SourceCollection& sources) {
  if (std::find(sources.elements.begin(), sources.elements.end(), source_k) ==
      sources.elements.end()) {
    throw NameError("unique information requested for " + varset_label(source_k) +
                    ", which is not in the source collection");
  }
  double mi = mutual_information(joint, source_k, sources.target);
  double r = redundancy(joint, structure, sources);
  return clamp_nonneg(mi - r, "unique information");
}

double synergy(const JointDistribution& joint, const Structure& structure,
               const SourceCollection& sources) {
  if (sources.elements.size() < 2) {
    throw NotSupported("synergy requires at least two sources");
  }
  double total = mutual_information(joint, dedup_concat(sources.elements), sources.target);
  double residual = total - redundancy(joint, structure, sources);
  for (const auto& e : sources.elements) {
    residual -= unique(joint, structure, e, sources);
  }
  return residual;
}

PidResult decompose(std::shared_ptr<const JointDistribution> joint, const VarSet& target,
                    const std::vector<VarSet>& sources,
                    const std::optional<Structure>& structure, double tol) {
  if (!joint) throw InternalError("decomposition requires a joint distribution");
  if (sources.size() < 2 || sources.size() > 3) {
    throw NotSupported("decomposition supports two or three sources, got " +
                       std::to_string(sources.size()));
  }
  SourceCollection collection = SourceCollection::of(sources, target);
  for (const auto& e : sources) joint->indices_of(e);
  joint->indices_of(target);

  Structure st = structure ? *structure : default_structure(joint, tol);

  // Cumulative redundancy at every lattice node.
  const std::size_t n = sources.size();
  std::vector<LatticeNode> nodes = antichain_nodes(n);
  std::vector<double> cumulative(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    cumulative[i] =
        redundancy_raw(*joint, st, realize_node(nodes[i], sources), target);
  }

  // Möbius inversion in a linear extension of the lattice order.
  std::vector<std::size_t> below_count(nodes.size(), 0);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (node_leq(nodes[j], nodes[i])) ++below_count[i];
    }
  }
  std::vector<std::size_t> order(nodes.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return below_count[a] < below_count[b]; });
  std::vector<double> atom(nodes.size(), 0.0);
  for (std::size_t idx : order) {
    double below = 0.0;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (j != idx && node_leq(nodes[j], nodes[idx])) below += atom[j];
    }
    atom[idx] = cumulative[idx] - below;
  }

  PidResult result;
  result.sources = sources;
  result.target = target;
  result.total = mutual_information(*joint, dedup_concat(sources), target);

  std::vector<SourceMask> bottom_masks;
  for (std::size_t i = 0; i < n; ++i) bottom_masks.push_back(SourceMask{1} << i);
  LatticeNode bottom = LatticeNode::of(bottom_masks);
  auto bottom_it = std::find(nodes.begin(), nodes.end(), bottom);
  result.redundancy = cumulative[static_cast<std::size_t>(bottom_it - nodes.begin())];

  for (const auto& e : sources) {
    result.unique.push_back(
        clamp_nonneg(mutual_information(*joint, e, target) - result.redundancy,
                     "unique information"));
  }
  result.synergy = result.total - result.redundancy -
                   std::accumulate(result.unique.begin(), result.unique.end(), 0.0);

  for (std::size_t i = 0; i < nodes.size(); ++i) {
    result.atoms.push_back({nodes[i], node_label(nodes[i]), cumulative[i], atom[i]});
  }

  result.flags.negative_atom =
      std::any_of(atom.begin(), atom.end(), [](double a) { return a < -1e-9; });
  for (std::size_t i = 0; i < n && !result.flags.hidden_cause_warning; ++i) {
    for (std::size_t j = i + 1; j < n && !result.flags.hidden_cause_warning; ++j) {
      result.flags.hidden_cause_warning =
          check_hidden_variable(*joint, sources[i], sources[j], target, tol).flagged;
    }
  }
  result.flags.structural_ambiguity = st.ambiguity_flag();
  result.structure_used = st.retained_edges();
  result.structure_candidates = st.candidates();
  return result;
}

HiddenCauseReport check_hidden_variable(const JointDistribution& joint, const VarSet& x,
                                        const VarSet& y, const VarSet& z, double tol) {
  double ii = interaction_information(joint, x, y, z);
  double through_y = path_mutual_information(joint, Path::of({x, y, z}));
  double through_x = path_mutual_information(joint, Path::of({y, x, z}));
  double margin = ii + std::min(through_y, through_x);
  return {margin < -tol, margin};
}

std::vector<LatticeOrderEntry> lattice_order_report(const JointDistribution& joint,
                                                    const Structure& structure,
                                                    const std::vector<VarSet>& sources,
                                                    const VarSet& target, double tol) {
  SourceCollection::of(sources, target);
  std::vector<LatticeNode> nodes = antichain_nodes(sources.size());
  std::vector<double> value(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    value[i] = redundancy_raw(joint, structure, realize_node(nodes[i], sources), target);
  }
  std::vector<LatticeOrderEntry> report;
  for (const auto& edge : hasse_edges(nodes)) {
    auto at = [&](const LatticeNode& n) {
      return value[static_cast<std::size_t>(
          std::find(nodes.begin(), nodes.end(), n) - nodes.begin())];
    };
    double lo = at(edge.lower), hi = at(edge.upper);
    report.push_back(
        {edge.lower, edge.upper, lo, hi, hi - lo, hi - lo >= -tol, edge.guaranteed});
  }
  return report;
}

OverdeterminationReport overdetermination_report(
    std::shared_ptr<const JointDistribution> joint, const VarSet& target,
    const std::vector<VarSet>& sources, const std::optional<Structure>& structure, double tol) {
  if (!joint) throw InternalError("overdetermination report requires a joint distribution");
  SourceCollection collection = SourceCollection::of(sources, target);
  Structure st = structure ? *structure : default_structure(joint, tol);
  // With a single source there is nothing to share with: the shared term
  // is 0 and the source's full MI counts as unique.
  double shared = sources.size() >= 2 ? redundancy(*joint, st, collection) : 0.0;
  double unique_sum = 0.0;
  for (const auto& e : sources) {
    unique_sum += clamp_nonneg(mutual_information(*joint, e, target) - shared,
                               "unique information");
  }
  double h = entropy(*joint, target);
  return {unique_sum, h, unique_sum > h + tol};
}

}  // namespace pidtensor
