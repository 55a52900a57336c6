/**
 * @file joint.hpp
 * @brief Alphabets, pmfs, and joint distributions over named finite variables.
 *
 * A JointDistribution is the single source of truth: every tensor, marginal,
 * and information quantity in the library is derived from one.  Variables
 * are named, each with an ordered finite Alphabet; the probability table is
 * dense and row-major over the declared variable order.
 *
 * VarSet names an ordered subset of a joint's variables.  A multi-name
 * VarSet denotes the *joined* variable (e.g. XY): its alphabet is the full
 * Cartesian product of the member alphabets (row-major), with zero mass on
 * unsupported combinations.  Joined symbols display as the member symbols
 * separated by commas.
 */
#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pidtensor/errors.hpp"
#include "pidtensor/scalar.hpp"

namespace pidtensor {

/// Ordered list of distinct symbols with token -> position lookup.
class Alphabet {
 public:
  /// Takes symbols in the given (fixed, total) order; rejects duplicates.
  explicit Alphabet(std::vector<std::string> symbols);

  std::size_t size() const { return symbols_.size(); }
  const std::string& symbol(std::size_t k) const { return symbols_.at(k); }
  const std::vector<std::string>& symbols() const { return symbols_; }

  /// Position of a token; AlphabetError if the token is unknown.
  std::size_t index(const std::string& token) const;
  bool contains(const std::string& token) const { return index_.count(token) > 0; }

  bool operator==(const Alphabet& o) const { return symbols_ == o.symbols_; }
  bool operator!=(const Alphabet& o) const { return !(*this == o); }

 private:
  std::vector<std::string> symbols_;
  std::map<std::string, std::size_t> index_;
};

/// Ordered subset of a joint's variable names; multi-name means joined.
using VarSet = std::vector<std::string>;

/// Render a VarSet as "{X}", "{X,Y}".
std::string varset_label(const VarSet& vs);

/// A pmf over one alphabet.
struct Pmf {
  Alphabet alphabet;
  ProbVector probs;

  bool exact() const;
  /// Sum of entries (1 within the mode's tolerance for a valid pmf).
  Prob total() const;
};

/// Full joint pmf over N named finite-alphabet variables.
class JointDistribution {
 public:
  /// Validates: unique names, table size = product of alphabet sizes,
  /// entries >= 0, total = 1 (exact mode) or within 1e-9 (float mode).
  JointDistribution(std::vector<std::pair<std::string, Alphabet>> variables,
                    std::vector<Prob> table);

  std::size_t variable_count() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const Alphabet& alphabet(std::size_t i) const { return alphabets_.at(i); }
  const Alphabet& alphabet(const std::string& name) const { return alphabets_.at(index_of(name)); }

  /// Index of the named variable; NameError if unknown.
  std::size_t index_of(const std::string& name) const;

  /// Resolve a VarSet: validates known names and no duplicates.
  std::vector<std::size_t> indices_of(const VarSet& vars) const;

  std::size_t cell_count() const { return table_.size(); }
  const std::vector<Prob>& table() const { return table_; }

  /// Probability of one cell given per-variable symbol indices.
  const Prob& prob_at(const std::vector<std::size_t>& cell) const;

  /// True iff every entry is exact-rational.
  bool exact() const { return exact_; }
  /// True iff some entry carries the precision-downgrade flag.
  bool downgraded() const { return downgraded_; }

  /// Joined alphabet of a VarSet (full Cartesian product, row-major).
  Alphabet joined_alphabet(const VarSet& vars) const;

  /// Marginal pmf over the joined alphabet of a VarSet.
  Pmf marginal_pmf(const VarSet& vars) const;

  /// Joined index of `vars` in a full cell (row-major over `vars` order).
  std::size_t joined_index(const std::vector<std::size_t>& var_indices,
                           const std::vector<std::size_t>& cell) const;

  /// Iterate all cells: f(cell_indices, probability). Skips nothing.
  template <typename F>
  void for_each_cell(F&& f) const {
    std::vector<std::size_t> cell(names_.size(), 0);
    for (std::size_t flat = 0; flat < table_.size(); ++flat) {
      f(static_cast<const std::vector<std::size_t>&>(cell), table_[flat]);
      for (std::size_t i = names_.size(); i-- > 0;) {
        if (++cell[i] < alphabets_[i].size()) break;
        cell[i] = 0;
      }
    }
  }

 private:
  std::vector<std::string> names_;
  std::vector<Alphabet> alphabets_;
  std::vector<Prob> table_;  // dense, row-major over declared order
  bool exact_;
  bool downgraded_;
};

/// Marginal joint over `vars` (order follows `vars`); NameError on unknown.
JointDistribution marginalize(const JointDistribution& joint, const VarSet& vars);

/// p(target | given = given_value); UnsupportedCondition on zero-mass events.
Pmf conditional_pmf(const JointDistribution& joint, const VarSet& target,
                    const VarSet& given, const std::vector<std::string>& given_value);

/// Empirical relative-frequency joint (exact mode) from sample rows.
/// Alphabets are inferred (lexicographically sorted) when not supplied.
/// FormatError on ragged/empty rows; AlphabetError on undeclared symbols.
JointDistribution joint_from_samples(
    const std::vector<std::vector<std::string>>& rows,
    const std::vector<std::string>& names,
    const std::optional<std::vector<Alphabet>>& alphabets = std::nullopt);

}  // namespace pidtensor
