/**
 * @file fixtures.cpp
 * @brief Definitions of the built-in exact-rational distributions.
 */
#include "pidtensor/fixtures.hpp"

#include <utility>

namespace pidtensor {

namespace {

using Cell = std::pair<std::vector<std::string>, Prob>;

/// Dense joint from a sparse cell list (unlisted cells get probability 0).
std::shared_ptr<const JointDistribution> sparse_joint(
    std::vector<std::pair<std::string, Alphabet>> vars, const std::vector<Cell>& cells) {
  std::size_t total = 1;
  for (const auto& v : vars) total *= v.second.size();
  std::vector<Prob> table(total, Prob(0));
  for (const auto& [syms, p] : cells) {
    std::size_t flat = 0;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      flat = flat * vars[i].second.size() + vars[i].second.index(syms[i]);
    }
    table[flat] += p;
  }
  return std::make_shared<JointDistribution>(std::move(vars), std::move(table));
}

std::vector<Fixture> build_catalog() {
  const Alphabet bit({"0", "1"});
  const Alphabet quad({"0", "1", "2", "3"});
  const Alphabet pairs({"00", "01", "10", "11"});
  const Prob q = Prob::rational(1, 4);
  const Prob e = Prob::rational(1, 8);

  std::vector<Fixture> cat;

  cat.push_back({"tbc",
                 "two-bit copy: Z records both independent uniform bits X and Y",
                 sparse_joint({{"X", bit}, {"Y", bit}, {"Z", pairs}},
                              {{{"0", "0", "00"}, q},
                               {{"0", "1", "01"}, q},
                               {{"1", "0", "10"}, q},
                               {{"1", "1", "11"}, q}}),
                 std::nullopt});

  cat.push_back({"neg-synergy",
                 "correlated sources whose decomposition over the full triangle has "
                 "negative synergy (signature of an unobserved common cause)",
                 sparse_joint({{"X", bit}, {"Y", bit}, {"Z", bit}},
                              {{{"0", "0", "0"}, q},
                               {{"0", "1", "0"}, q},
                               {{"1", "1", "0"}, q},
                               {{"1", "1", "1"}, q}}),
                 EdgeSet{make_edge("X", "Y"), make_edge("X", "Z"), make_edge("Y", "Z")}});

  cat.push_back({"neg-synergy-hidden",
                 "the neg-synergy process with the common cause Zt made observable",
                 sparse_joint({{"X", bit}, {"Y", bit}, {"Z", bit}, {"Zt", pairs}},
                              {{{"0", "0", "0", "00"}, q},
                               {{"0", "1", "0", "01"}, q},
                               {{"1", "1", "0", "10"}, q},
                               {{"1", "1", "1", "11"}, q}}),
                 std::nullopt});

  cat.push_back({"dyadic",
                 "three quaternary variables built from three shared bits, one bit "
                 "per pair of variables",
                 sparse_joint({{"X", quad}, {"Y", quad}, {"Z", quad}},
                              {{{"0", "0", "0"}, e},
                               {{"0", "2", "1"}, e},
                               {{"1", "0", "2"}, e},
                               {{"1", "2", "3"}, e},
                               {{"2", "1", "0"}, e},
                               {{"2", "3", "1"}, e},
                               {{"3", "1", "2"}, e},
                               {{"3", "3", "3"}, e}}),
                 std::nullopt});

  cat.push_back({"triadic",
                 "three quaternary variables coupled by a shared three-way sum bit "
                 "and a shared global bit",
                 sparse_joint({{"X", quad}, {"Y", quad}, {"Z", quad}},
                              {{{"0", "0", "0"}, e},
                               {{"1", "1", "1"}, e},
                               {{"0", "2", "2"}, e},
                               {{"1", "3", "3"}, e},
                               {{"2", "0", "2"}, e},
                               {{"3", "1", "3"}, e},
                               {{"2", "2", "0"}, e},
                               {{"3", "3", "1"}, e}}),
                 std::nullopt});

  cat.push_back({"pwunq",
                 "pointwise unique: in every outcome exactly one source carries the "
                 "target's value",
                 sparse_joint({{"X", Alphabet({"0", "1", "2"})},
                               {"Y", Alphabet({"0", "1", "2"})},
                               {"Z", Alphabet({"1", "2"})}},
                              {{{"0", "1", "1"}, q},
                               {{"1", "0", "1"}, q},
                               {{"0", "2", "2"}, q},
                               {{"2", "0", "2"}, q}}),
                 std::nullopt});

  cat.push_back({"rnderr",
                 "random error: Z copies X exactly while Y is a noisy copy of X "
                 "(flip probability 1/4)",
                 sparse_joint({{"X", bit}, {"Y", bit}, {"Z", bit}},
                              {{{"0", "0", "0"}, Prob::rational(3, 8)},
                               {{"1", "1", "1"}, Prob::rational(3, 8)},
                               {{"0", "1", "0"}, e},
                               {{"1", "0", "1"}, e}}),
                 EdgeSet{make_edge("X", "Y"), make_edge("X", "Z")}});

  cat.push_back({"unq",
                 "unique: Z copies X; Y is independent uniform noise",
                 sparse_joint({{"X", bit}, {"Y", bit}, {"Z", bit}},
                              {{{"0", "0", "0"}, q},
                               {{"1", "1", "1"}, q},
                               {{"0", "1", "0"}, q},
                               {{"1", "0", "1"}, q}}),
                 EdgeSet{make_edge("X", "Z")}});

  cat.push_back({"and",
                 "Z = X AND Y for independent uniform bits",
                 sparse_joint({{"X", bit}, {"Y", bit}, {"Z", bit}},
                              {{{"0", "0", "0"}, q},
                               {{"1", "0", "0"}, q},
                               {{"0", "1", "0"}, q},
                               {{"1", "1", "1"}, q}}),
                 std::nullopt});

  cat.push_back({"xor",
                 "Z = X XOR Y for independent uniform bits",
                 sparse_joint({{"X", bit}, {"Y", bit}, {"Z", bit}},
                              {{{"0", "0", "0"}, q},
                               {{"1", "0", "1"}, q},
                               {{"0", "1", "1"}, q},
                               {{"1", "1", "0"}, q}}),
                 std::nullopt});

  cat.push_back({"sum",
                 "Z = X + Y for independent uniform bits",
                 sparse_joint({{"X", bit}, {"Y", bit}, {"Z", Alphabet({"0", "1", "2"})}},
                              {{{"0", "0", "0"}, q},
                               {{"1", "0", "1"}, q},
                               {{"0", "1", "1"}, q},
                               {{"1", "1", "2"}, q}}),
                 std::nullopt});

  cat.push_back({"rauh4",
                 "overdetermined target: X, Y independent bits, W = X XOR Y, and T "
                 "records all three (any two sources determine T)",
                 sparse_joint({{"X", bit},
                               {"Y", bit},
                               {"W", bit},
                               {"T", Alphabet({"000", "011", "101", "110"})}},
                              {{{"0", "0", "0", "000"}, q},
                               {{"0", "1", "1", "011"}, q},
                               {{"1", "0", "1", "101"}, q},
                               {{"1", "1", "0", "110"}, q}}),
                 std::nullopt});

  return cat;
}

}  // namespace

const std::vector<Fixture>& fixture_catalog() {
  static const std::vector<Fixture> cat = build_catalog();
  return cat;
}

const Fixture& fixture(const std::string& name) {
  for (const auto& f : fixture_catalog()) {
    if (f.name == name) return f;
  }
  std::string known;
  for (const auto& f : fixture_catalog()) {
    if (!known.empty()) known += ", ";
    known += f.name;
  }
  throw NameError("unknown fixture '" + name + "'; available: " + known);
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& f : fixture_catalog()) out.push_back(f.name);
  return out;
}

}  // namespace pidtensor
