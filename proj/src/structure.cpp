/**
 * @file structure.cpp
 * @brief Edge classification and enumeration of maximal edge-removal
 *        outcomes (see structure.hpp for the rules).
 */
#include "pidtensor/structure.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "pidtensor/info.hpp"

namespace pidtensor {

namespace {

/// Visit every ordered sequence (length 1..pool.size()) of distinct pool
/// elements, in pool order within each length, shortest lengths first.
/// Stops early when visit returns true; returns whether any visit did.
bool for_each_sequence(const std::vector<std::string>& pool,
                       const std::function<bool(const std::vector<std::string>&)>& visit) {
  std::vector<std::string> seq;
  std::vector<bool> used(pool.size(), false);
  std::function<bool(std::size_t)> extend = [&](std::size_t want) -> bool {
    if (seq.size() == want) return visit(seq);
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (used[i]) continue;
      used[i] = true;
      seq.push_back(pool[i]);
      bool hit = extend(want);
      seq.pop_back();
      used[i] = false;
      if (hit) return true;
    }
    return false;
  };
  for (std::size_t r = 1; r <= pool.size(); ++r) {
    if (extend(r)) return true;
  }
  return false;
}

std::vector<VarSet> as_singleton_path(const VarSet& a, const std::vector<std::string>& mediators,
                                      const VarSet& b, bool reversed) {
  std::vector<VarSet> verts;
  verts.push_back(reversed ? b : a);
  if (reversed) {
    for (auto it = mediators.rbegin(); it != mediators.rend(); ++it) verts.push_back({*it});
  } else {
    for (const auto& m : mediators) verts.push_back({m});
  }
  verts.push_back(reversed ? a : b);
  return verts;
}

/// True iff the mediator sequence reproduces the edge tensor in both
/// orientations (the cascade-equivalence criterion for removability).
bool sequence_explains(const JointDistribution& joint, const VarSet& a, const VarSet& b,
                       const CausalTensor& fwd_ref, const CausalTensor& rev_ref,
                       const std::vector<std::string>& mediators, double tol) {
  CausalTensor fwd = path_tensor(joint, Path::of(as_singleton_path(a, mediators, b, false)));
  if (!tensors_equal(fwd, fwd_ref, tol)) return false;
  CausalTensor rev = path_tensor(joint, Path::of(as_singleton_path(a, mediators, b, true)));
  return tensors_equal(rev, rev_ref, tol);
}

std::vector<std::string> remaining_singletons(const JointDistribution& joint, const VarSet& a,
                                              const VarSet& b) {
  std::vector<std::string> rest;
  for (const auto& name : joint.names()) {
    bool taken = std::find(a.begin(), a.end(), name) != a.end() ||
                 std::find(b.begin(), b.end(), name) != b.end();
    if (!taken) rest.push_back(name);
  }
  return rest;
}

/// Classify every unordered singleton pair of the joint's variables.
std::map<EdgePair, EdgeStatus> classify_all_pairs(const JointDistribution& joint, double tol) {
  std::map<EdgePair, EdgeStatus> edges;
  const auto& names = joint.names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = i + 1; j < names.size(); ++j) {
      edges.emplace(make_edge(names[i], names[j]),
                    detail::edge_status_general(joint, {names[i]}, {names[j]}, tol));
    }
  }
  return edges;
}

double retained_total_mi(const JointDistribution& joint, const EdgeSet& retained) {
  double total = 0.0;
  for (const auto& [a, b] : retained) {
    total += mutual_information(joint, {a}, {b});
  }
  return total;
}

}  // namespace

EdgePair make_edge(const std::string& a, const std::string& b) {
  return a < b ? EdgePair{a, b} : EdgePair{b, a};
}

Structure::Structure(std::shared_ptr<const JointDistribution> joint, EdgeSet retained,
                     std::map<EdgePair, EdgeStatus> edges, double tol)
    : joint_(std::move(joint)),
      retained_(std::move(retained)),
      edges_(std::move(edges)),
      tol_(tol) {
  if (!joint_) throw InternalError("structure requires a joint distribution");
}

Structure Structure::complete(std::shared_ptr<const JointDistribution> joint, double tol) {
  Structure s(std::move(joint), {}, {}, tol);
  s.complete_ = true;
  return s;
}

void Structure::set_candidates(std::vector<EdgeSet> candidates, bool ambiguous) {
  candidates_ = std::move(candidates);
  ambiguous_ = ambiguous;
}

bool Structure::edge_exists(const VarSet& a, const VarSet& b) const {
  if (complete_) return true;
  if (a.size() == 1 && b.size() == 1) {
    return retained_.count(make_edge(a.front(), b.front())) > 0;
  }
  // Composite (joined) vertices are classified on demand against the joint;
  // the edge exists only when the pair is a direct edge.
  return detail::edge_status_general(*joint_, a, b, tol_).kind == EdgeKind::Direct;
}

namespace detail {

EdgeStatus edge_status_general(const JointDistribution& joint, const VarSet& a, const VarSet& b,
                               double tol) {
  CausalTensor fwd_ref = edge_tensor(joint, a, b);
  if (is_no_information(fwd_ref, tol)) return {EdgeKind::NoInformation, {}};
  CausalTensor rev_ref = edge_tensor(joint, b, a);
  EdgeStatus status{EdgeKind::Direct, {}};
  for_each_sequence(remaining_singletons(joint, a, b),
                    [&](const std::vector<std::string>& mediators) {
                      if (!sequence_explains(joint, a, b, fwd_ref, rev_ref, mediators, tol)) {
                        return false;
                      }
                      status = {EdgeKind::Indirect, mediators};
                      return true;
                    });
  return status;
}

}  // namespace detail

EdgeStatus edge_test(const JointDistribution& joint, const VarSet& a, const VarSet& b,
                     double tol) {
  auto ia = joint.indices_of(a);
  auto ib = joint.indices_of(b);
  for (std::size_t i : ia) {
    if (std::find(ib.begin(), ib.end(), i) != ib.end()) {
      throw OverlapError("edge test requires disjoint variable sets: " + varset_label(a) +
                         " overlaps " + varset_label(b));
    }
  }
  return detail::edge_status_general(joint, a, b, tol);
}

std::vector<Structure> infer_structures(std::shared_ptr<const JointDistribution> joint,
                                        double tol) {
  if (!joint) throw InternalError("structure inference requires a joint distribution");
  const JointDistribution& j = *joint;
  std::map<EdgePair, EdgeStatus> edges = classify_all_pairs(j, tol);

  // Informative edges only; no-information pairs are absent outright.
  std::vector<EdgePair> informative;
  for (const auto& [pair, status] : edges) {
    if (status.kind != EdgeKind::NoInformation) informative.push_back(pair);
  }

  // An edge is explainable relative to the kept set when some mediator
  // chain whose hops all survive reproduces its tensor both ways.
  auto explainable = [&](const EdgePair& edge, const EdgeSet& kept) {
    VarSet a{edge.first}, b{edge.second};
    CausalTensor fwd_ref = detail::edge_tensor(j, a, b);
    CausalTensor rev_ref = detail::edge_tensor(j, b, a);
    return for_each_sequence(
        remaining_singletons(j, a, b), [&](const std::vector<std::string>& mediators) {
          std::vector<std::string> chain;
          chain.push_back(edge.first);
          chain.insert(chain.end(), mediators.begin(), mediators.end());
          chain.push_back(edge.second);
          for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
            if (kept.count(make_edge(chain[i], chain[i + 1])) == 0) return false;
          }
          return sequence_explains(j, a, b, fwd_ref, rev_ref, mediators, tol);
        });
  };

  std::vector<EdgeSet> outcomes;
  const std::size_t n = informative.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    EdgeSet kept;
    std::vector<EdgePair> removed;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) {
        removed.push_back(informative[i]);
      } else {
        kept.insert(informative[i]);
      }
    }
    bool consistent = std::all_of(removed.begin(), removed.end(),
                                  [&](const EdgePair& e) { return explainable(e, kept); });
    bool maximal = std::none_of(kept.begin(), kept.end(),
                                [&](const EdgePair& e) { return explainable(e, kept); });
    if (consistent && maximal) outcomes.push_back(std::move(kept));
  }
  std::sort(outcomes.begin(), outcomes.end());

  if (outcomes.empty()) {
    throw InternalError("edge-removal enumeration produced no consistent outcome");
  }
  bool ambiguous = outcomes.size() > 1;
  std::vector<Structure> result;
  result.reserve(outcomes.size());
  for (const auto& kept : outcomes) {
    Structure s(joint, kept, edges, tol);
    s.set_candidates(outcomes, ambiguous);
    result.push_back(std::move(s));
  }
  return result;
}

std::vector<Structure> infer_structures(const JointDistribution& joint, double tol) {
  return infer_structures(std::make_shared<const JointDistribution>(joint), tol);
}

Structure canonical_structure(const std::vector<Structure>& candidates) {
  if (candidates.empty()) {
    throw InternalError("canonical structure selection over an empty candidate list");
  }
  const Structure* best = &candidates.front();
  double best_mi = retained_total_mi(best->joint(), best->retained_edges());
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    const Structure& c = candidates[i];
    double c_mi = retained_total_mi(c.joint(), c.retained_edges());
    std::size_t bn = best->retained_edges().size(), cn = c.retained_edges().size();
    bool better = cn < bn ||
                  (cn == bn && (c_mi > best_mi + kNonNegFloor ||
                                (std::abs(c_mi - best_mi) <= kNonNegFloor &&
                                 c.retained_edges() < best->retained_edges())));
    if (better) {
      best = &c;
      best_mi = c_mi;
    }
  }
  return *best;
}

Structure structure_from_retained(std::shared_ptr<const JointDistribution> joint,
                                  const EdgeSet& retained, double tol) {
  if (!joint) throw InternalError("structure override requires a joint distribution");
  for (const auto& [a, b] : retained) {
    joint->index_of(a);
    joint->index_of(b);
    if (a == b) throw NameError("structure edge joins a variable to itself: " + a);
  }
  Structure s(joint, retained, classify_all_pairs(*joint, tol), tol);
  s.set_candidates({retained}, false);
  return s;
}

}  // namespace pidtensor
