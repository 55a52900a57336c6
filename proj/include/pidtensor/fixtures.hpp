/**
 * @file fixtures.hpp
 * @brief Built-in exact-rational example distributions.
 *
 * Each fixture is a small named joint distribution that exercises a
 * distinct information-sharing pattern (redundant, unique, synergistic,
 * negative-synergy, overdetermined, ...).  All probabilities are exact
 * rationals.  A fixture may ship a pinned analysis structure: a retained
 * edge set that decomposition commands apply by default, used where
 * structure inference alone is ambiguous or where the intended analysis
 * deliberately keeps a cascade-explainable edge.
 */
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pidtensor/joint.hpp"
#include "pidtensor/structure.hpp"

namespace pidtensor {

/// One named built-in distribution, plus its default analysis structure.
struct Fixture {
  std::string name;
  std::string summary;  ///< one-line description of the generating process
  std::shared_ptr<const JointDistribution> joint;
  /// Retained edges to use for decomposition unless the caller overrides;
  /// unset means "infer the structure from the distribution".
  std::optional<EdgeSet> pinned_edges;
};

/// All built-in fixtures, in catalog order.
const std::vector<Fixture>& fixture_catalog();

/// Look up a fixture by name; NameError lists the available names.
const Fixture& fixture(const std::string& name);

/// Catalog names in order (for help text and error messages).
std::vector<std::string> fixture_names();

}  // namespace pidtensor
