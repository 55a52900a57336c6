#include "pidtensor/joint.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace pidtensor {

namespace {

constexpr double kPmfTolerance = 1e-9;

}  // namespace

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw AlphabetError("alphabet must be non-empty");
  for (std::size_t k = 0; k < symbols_.size(); ++k) {
    if (!index_.emplace(symbols_[k], k).second)
      throw AlphabetError("duplicate symbol '" + symbols_[k] + "' in alphabet");
  }
}

std::size_t Alphabet::index(const std::string& token) const {
  auto it = index_.find(token);
  if (it == index_.end()) throw AlphabetError("symbol '" + token + "' not in alphabet");
  return it->second;
}

std::string varset_label(const VarSet& vs) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) os << ',';
    os << vs[i];
  }
  os << '}';
  return os.str();
}

bool Pmf::exact() const {
  for (Eigen::Index i = 0; i < probs.size(); ++i)
    if (!probs[i].exact()) return false;
  return true;
}

Prob Pmf::total() const {
  Prob t(0);
  for (Eigen::Index i = 0; i < probs.size(); ++i) t += probs[i];
  return t;
}

JointDistribution::JointDistribution(
    std::vector<std::pair<std::string, Alphabet>> variables, std::vector<Prob> table)
    : table_(std::move(table)), exact_(true), downgraded_(false) {
  if (variables.empty()) throw ShapeError("joint needs at least one variable");
  std::size_t cells = 1;
  std::set<std::string> seen;
  for (auto& [name, alpha] : variables) {
    if (!seen.insert(name).second)
      throw NameError("duplicate variable name '" + name + "'");
    names_.push_back(name);
    cells *= alpha.size();
    alphabets_.push_back(std::move(alpha));
  }
  if (table_.size() != cells)
    throw ShapeError("joint table has " + std::to_string(table_.size()) +
                     " entries, expected " + std::to_string(cells));
  Prob total(0);
  for (const Prob& p : table_) {
    if (p < Prob(0)) throw InvariantError("negative probability in joint table");
    exact_ = exact_ && p.exact();
    downgraded_ = downgraded_ || p.downgraded();
    total += p;
  }
  if (exact_) {
    if (total != Prob(1)) throw InvariantError("exact joint total " + total.str() + " != 1");
  } else if (std::abs(total.to_double() - 1.0) > kPmfTolerance) {
    throw InvariantError("joint total " + std::to_string(total.to_double()) +
                         " outside normalization tolerance");
  }
}

std::size_t JointDistribution::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  throw NameError("unknown variable '" + name + "'");
}

std::vector<std::size_t> JointDistribution::indices_of(const VarSet& vars) const {
  if (vars.empty()) throw NameError("empty variable set");
  std::vector<std::size_t> out;
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (!seen.insert(v).second) throw NameError("duplicate variable '" + v + "' in set");
    out.push_back(index_of(v));
  }
  return out;
}

const Prob& JointDistribution::prob_at(const std::vector<std::size_t>& cell) const {
  std::size_t flat = 0;
  for (std::size_t i = 0; i < names_.size(); ++i) flat = flat * alphabets_[i].size() + cell.at(i);
  return table_.at(flat);
}

Alphabet JointDistribution::joined_alphabet(const VarSet& vars) const {
  const auto idx = indices_of(vars);
  if (idx.size() == 1) return alphabets_[idx[0]];
  std::size_t count = 1;
  for (std::size_t vi : idx) count *= alphabets_[vi].size();
  std::vector<std::string> symbols;
  symbols.reserve(count);
  std::vector<std::size_t> digit(idx.size(), 0);
  for (std::size_t n = 0; n < count; ++n) {
    std::string tok;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (i) tok += ',';
      tok += alphabets_[idx[i]].symbol(digit[i]);
    }
    symbols.push_back(std::move(tok));
    for (std::size_t i = idx.size(); i-- > 0;) {
      if (++digit[i] < alphabets_[idx[i]].size()) break;
      digit[i] = 0;
    }
  }
  return Alphabet(std::move(symbols));
}

std::size_t JointDistribution::joined_index(const std::vector<std::size_t>& var_indices,
                                            const std::vector<std::size_t>& cell) const {
  std::size_t j = 0;
  for (std::size_t vi : var_indices) j = j * alphabets_[vi].size() + cell[vi];
  return j;
}

Pmf JointDistribution::marginal_pmf(const VarSet& vars) const {
  const auto idx = indices_of(vars);
  Alphabet alpha = joined_alphabet(vars);
  ProbVector probs = ProbVector::Constant(static_cast<Eigen::Index>(alpha.size()), Prob(0));
  for_each_cell([&](const std::vector<std::size_t>& cell, const Prob& p) {
    if (p.is_zero()) return;
    probs[static_cast<Eigen::Index>(joined_index(idx, cell))] += p;
  });
  return Pmf{std::move(alpha), std::move(probs)};
}

JointDistribution marginalize(const JointDistribution& joint, const VarSet& vars) {
  const auto idx = joint.indices_of(vars);
  std::vector<std::pair<std::string, Alphabet>> variables;
  std::size_t cells = 1;
  for (std::size_t vi : idx) {
    variables.emplace_back(joint.name(vi), joint.alphabet(vi));
    cells *= joint.alphabet(vi).size();
  }
  std::vector<Prob> table(cells, Prob(0));
  joint.for_each_cell([&](const std::vector<std::size_t>& cell, const Prob& p) {
    if (p.is_zero()) return;
    table[joint.joined_index(idx, cell)] += p;
  });
  return JointDistribution(std::move(variables), std::move(table));
}

Pmf conditional_pmf(const JointDistribution& joint, const VarSet& target,
                    const VarSet& given, const std::vector<std::string>& given_value) {
  const auto tgt_idx = joint.indices_of(target);
  const auto giv_idx = joint.indices_of(given);
  if (given_value.size() != given.size())
    throw ShapeError("conditioning value arity does not match variable set");
  std::vector<std::size_t> value_idx;
  for (std::size_t i = 0; i < giv_idx.size(); ++i)
    value_idx.push_back(joint.alphabet(giv_idx[i]).index(given_value[i]));

  Alphabet alpha = joint.joined_alphabet(target);
  ProbVector probs = ProbVector::Constant(static_cast<Eigen::Index>(alpha.size()), Prob(0));
  Prob mass(0);
  joint.for_each_cell([&](const std::vector<std::size_t>& cell, const Prob& p) {
    if (p.is_zero()) return;
    for (std::size_t i = 0; i < giv_idx.size(); ++i)
      if (cell[giv_idx[i]] != value_idx[i]) return;
    mass += p;
    probs[static_cast<Eigen::Index>(joint.joined_index(tgt_idx, cell))] += p;
  });
  if (mass.is_zero())
    throw UnsupportedCondition("conditioning event has zero probability");
  for (Eigen::Index i = 0; i < probs.size(); ++i) probs[i] /= mass;
  return Pmf{std::move(alpha), std::move(probs)};
}

JointDistribution joint_from_samples(
    const std::vector<std::vector<std::string>>& rows,
    const std::vector<std::string>& names,
    const std::optional<std::vector<Alphabet>>& alphabets) {
  if (rows.empty()) throw FormatError("no sample rows");
  for (const auto& r : rows)
    if (r.size() != names.size())
      throw FormatError("ragged sample row: expected " + std::to_string(names.size()) +
                        " symbols, got " + std::to_string(r.size()));

  std::vector<Alphabet> alphas;
  if (alphabets) {
    if (alphabets->size() != names.size())
      throw ShapeError("alphabet count does not match variable count");
    alphas = *alphabets;
    for (const auto& r : rows)
      for (std::size_t i = 0; i < r.size(); ++i)
        if (!alphas[i].contains(r[i]))
          throw AlphabetError("symbol '" + r[i] + "' outside declared alphabet of " + names[i]);
  } else {
    for (std::size_t i = 0; i < names.size(); ++i) {
      std::set<std::string> seen;
      for (const auto& r : rows) seen.insert(r[i]);
      alphas.emplace_back(std::vector<std::string>(seen.begin(), seen.end()));
    }
  }

  std::size_t cells = 1;
  for (const auto& a : alphas) cells *= a.size();
  std::vector<long> counts(cells, 0);
  for (const auto& r : rows) {
    std::size_t flat = 0;
    for (std::size_t i = 0; i < r.size(); ++i)
      flat = flat * alphas[i].size() + alphas[i].index(r[i]);
    ++counts[flat];
  }
  std::vector<Prob> table;
  table.reserve(cells);
  const long total = static_cast<long>(rows.size());
  for (long c : counts) table.push_back(Prob::rational(c, total));

  std::vector<std::pair<std::string, Alphabet>> variables;
  for (std::size_t i = 0; i < names.size(); ++i) variables.emplace_back(names[i], alphas[i]);
  return JointDistribution(std::move(variables), std::move(table));
}

}  // namespace pidtensor
