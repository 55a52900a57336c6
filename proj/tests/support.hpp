/**
 * @file support.hpp
 * @brief Shared helpers for the randomized suites and the acceptance gate:
 *        exact random joints, an independent brute-force path-MI oracle
 *        (explicit cascade-joint enumeration, no matrix products), and the
 *        invariant-suite runners with violation counts.
 */
#pragma once

#include <chrono>
#include <cmath>
#include <cstddef>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "pidtensor/info.hpp"
#include "pidtensor/joint.hpp"
#include "pidtensor/lattice.hpp"
#include "pidtensor/pid.hpp"
#include "pidtensor/scalar.hpp"
#include "pidtensor/structure.hpp"
#include "pidtensor/tensor.hpp"

namespace testsupport {

using pidtensor::Alphabet;
using pidtensor::JointDistribution;
using pidtensor::Path;
using pidtensor::Pmf;
using pidtensor::Prob;
using pidtensor::SourceCollection;
using pidtensor::Structure;
using pidtensor::VarSet;

inline Alphabet digits_alphabet(std::size_t n) {
  std::vector<std::string> syms;
  syms.reserve(n);
  for (std::size_t i = 0; i < n; ++i) syms.push_back(std::to_string(i));
  return Alphabet(syms);
}

/// Dense random joint with exact rational cells: integer weights 1..16
/// normalized by their total, so every cell is strictly positive.
inline std::shared_ptr<const JointDistribution> random_exact_joint(
    std::mt19937& rng, const std::vector<std::string>& names,
    const std::vector<std::size_t>& sizes) {
  std::vector<std::pair<std::string, Alphabet>> vars;
  std::size_t cells = 1;
  for (std::size_t k = 0; k < names.size(); ++k) {
    vars.emplace_back(names[k], digits_alphabet(sizes[k]));
    cells *= sizes[k];
  }
  std::uniform_int_distribution<long> weight(1, 16);
  std::vector<long> numer(cells);
  long total = 0;
  for (auto& w : numer) {
    w = weight(rng);
    total += w;
  }
  std::vector<Prob> table;
  table.reserve(cells);
  for (long w : numer) table.push_back(Prob::rational(w, total));
  return std::make_shared<JointDistribution>(std::move(vars), std::move(table));
}

inline std::size_t random_size(std::mt19937& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Path mutual information recomputed from first principles: enumerate the
/// cascade-induced joint over every path vertex explicitly (conditional
/// tables accumulated cell by cell, exact arithmetic until the logs),
/// instead of folding matrix products.  Used as the independent oracle the
/// production implementation is compared against.
inline double brute_force_path_mi(const JointDistribution& joint,
                                  const std::vector<VarSet>& path) {
  const std::size_t n = path.size();
  std::vector<std::vector<std::size_t>> vidx(n);
  std::vector<std::size_t> vsize(n);
  for (std::size_t t = 0; t < n; ++t) {
    vidx[t] = joint.indices_of(path[t]);
    vsize[t] = joint.joined_alphabet(path[t]).size();
  }

  // True marginal of each vertex.
  std::vector<std::vector<Prob>> marg(n);
  for (std::size_t t = 0; t < n; ++t) {
    marg[t].assign(vsize[t], Prob());
    joint.for_each_cell([&](const std::vector<std::size_t>& cell, const Prob& p) {
      if (!p.is_zero()) marg[t][joint.joined_index(vidx[t], cell)] += p;
    });
  }

  // Per-step conditional tables p(next | prev); a repeated vertex is an
  // identity step and keeps an empty table.
  std::vector<std::vector<Prob>> pair_table(n - 1);
  std::vector<bool> identity_step(n - 1, false);
  for (std::size_t t = 0; t + 1 < n; ++t) {
    if (path[t] == path[t + 1]) {
      identity_step[t] = true;
      continue;
    }
    pair_table[t].assign(vsize[t] * vsize[t + 1], Prob());
    joint.for_each_cell([&](const std::vector<std::size_t>& cell, const Prob& p) {
      if (p.is_zero()) return;
      const std::size_t a = joint.joined_index(vidx[t], cell);
      const std::size_t b = joint.joined_index(vidx[t + 1], cell);
      pair_table[t][a * vsize[t + 1] + b] += p;
    });
  }

  // Walk every vertex-index tuple, multiplying the source mass by the
  // step conditionals, and accumulate the endpoint joint exactly.
  const auto step_factor = [&](std::size_t t, std::size_t a, std::size_t b) {
    if (identity_step[t]) return a == b ? Prob(1) : Prob();
    const Prob& pair = pair_table[t][a * vsize[t + 1] + b];
    if (pair.is_zero()) return Prob();
    return pair / marg[t][a];
  };
  std::vector<Prob> endpoint(vsize.front() * vsize.back(), Prob());
  std::vector<Prob> dest(vsize.back(), Prob());
  std::size_t tuples = 1;
  for (std::size_t s : vsize) tuples *= s;
  std::vector<std::size_t> tuple(n);
  for (std::size_t flat = 0; flat < tuples; ++flat) {
    std::size_t rem = flat;
    for (std::size_t t = n; t-- > 0;) {
      tuple[t] = rem % vsize[t];
      rem /= vsize[t];
    }
    Prob p = marg[0][tuple[0]];
    for (std::size_t t = 0; t + 1 < n && !p.is_zero(); ++t) {
      p = p * step_factor(t, tuple[t], tuple[t + 1]);
    }
    if (!p.is_zero()) {
      endpoint[tuple.front() * vsize.back() + tuple.back()] += p;
      dest[tuple.back()] += p;
    }
  }

  double mi = 0.0;
  for (std::size_t i = 0; i < vsize.front(); ++i) {
    for (std::size_t k = 0; k < vsize.back(); ++k) {
      const Prob& pik = endpoint[i * vsize.back() + k];
      if (pik.is_zero()) continue;
      const Prob ratio = pik / (marg[0][i] * dest[k]);
      mi += pik.to_double() * pidtensor::log2_value(ratio);
    }
  }
  return mi;
}

/// One randomized invariant suite's outcome.
struct SuiteResult {
  std::string name;
  int checked = 0;
  int violations = 0;
  double seconds = 0.0;
};

namespace detail {

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

inline std::shared_ptr<const JointDistribution> random_xyz(std::mt19937& rng) {
  return random_exact_joint(
      rng, {"X", "Y", "Z"},
      {random_size(rng, 2, 4), random_size(rng, 2, 4), random_size(rng, 2, 4)});
}

}  // namespace detail

constexpr double kPropTol = 1e-9;

/// Path MI is invariant under path reversal.
inline SuiteResult run_lemma1(int n, unsigned seed) {
  detail::Timer timer;
  std::mt19937 rng(seed);
  SuiteResult out{"path reversal symmetry", n, 0, 0.0};
  for (int i = 0; i < n; ++i) {
    auto j = detail::random_xyz(rng);
    const double fwd =
        pidtensor::path_mutual_information(*j, Path::of({{"X"}, {"Y"}, {"Z"}}));
    const double rev =
        pidtensor::path_mutual_information(*j, Path::of({{"Z"}, {"Y"}, {"X"}}));
    if (std::abs(fwd - rev) > kPropTol) ++out.violations;
  }
  out.seconds = timer.seconds();
  return out;
}

/// Redundancy axioms: source-permutation symmetry, self-redundancy
/// = I(X;T), and weak monotonicity under added sources.
inline SuiteResult run_wb_axioms(int n, unsigned seed) {
  detail::Timer timer;
  std::mt19937 rng(seed);
  SuiteResult out{"redundancy axioms", n, 0, 0.0};
  for (int i = 0; i < n; ++i) {
    auto j = detail::random_xyz(rng);
    const Structure st = Structure::complete(j);
    const double self_x =
        pidtensor::redundancy(*j, st, SourceCollection::of({{"X"}}, {"Z"}));
    const double r_xy =
        pidtensor::redundancy(*j, st, SourceCollection::of({{"X"}, {"Y"}}, {"Z"}));
    const double r_yx =
        pidtensor::redundancy(*j, st, SourceCollection::of({{"Y"}, {"X"}}, {"Z"}));
    const double self_y =
        pidtensor::redundancy(*j, st, SourceCollection::of({{"Y"}}, {"Z"}));
    bool ok = std::abs(self_x - pidtensor::mutual_information(*j, {"X"}, {"Z"})) <= kPropTol;
    ok = ok && std::abs(r_xy - r_yx) <= 1e-12;
    ok = ok && r_xy <= self_x + kPropTol && r_xy <= self_y + kPropTol;
    if (!ok) ++out.violations;
  }
  out.seconds = timer.seconds();
  return out;
}

/// Redundancy of two sources about their own join equals their mutual
/// information.  The target deliberately reuses the source names, so the
/// collection is assembled directly rather than through the validating
/// factory (which enforces name disjointness for ordinary decompositions).
inline SuiteResult run_identity(int n, unsigned seed) {
  detail::Timer timer;
  std::mt19937 rng(seed);
  SuiteResult out{"identity on joined target", n, 0, 0.0};
  for (int i = 0; i < n; ++i) {
    auto j = random_exact_joint(rng, {"X", "Y"},
                                {random_size(rng, 2, 4), random_size(rng, 2, 4)});
    const Structure st = Structure::complete(j);
    const SourceCollection join_target{{{"X"}, {"Y"}}, {"X", "Y"}};
    const double r = pidtensor::redundancy(*j, st, join_target);
    if (std::abs(r - pidtensor::mutual_information(*j, {"X"}, {"Y"})) > kPropTol) {
      ++out.violations;
    }
  }
  out.seconds = timer.seconds();
  return out;
}

/// Enlarging the target never lowers redundancy.
inline SuiteResult run_left_monotonicity(int n, unsigned seed) {
  detail::Timer timer;
  std::mt19937 rng(seed);
  SuiteResult out{"target monotonicity", n, 0, 0.0};
  for (int i = 0; i < n; ++i) {
    auto j = random_exact_joint(rng, {"X", "Y", "Z1", "Z2"},
                                {random_size(rng, 2, 4), random_size(rng, 2, 4),
                                 random_size(rng, 2, 3), random_size(rng, 2, 3)});
    const Structure st = Structure::complete(j);
    const double wide =
        pidtensor::redundancy(*j, st, SourceCollection::of({{"X"}, {"Y"}}, {"Z1", "Z2"}));
    const double narrow =
        pidtensor::redundancy(*j, st, SourceCollection::of({{"X"}, {"Y"}}, {"Z1"}));
    if (wide < narrow - kPropTol) ++out.violations;
  }
  out.seconds = timer.seconds();
  return out;
}

/// Target-swap disjunction: R(X,Y;Z) dominates at least one of the two
/// redundancies obtained by trading the target against a source.
inline SuiteResult run_theorem_target_swap(int n, unsigned seed) {
  detail::Timer timer;
  std::mt19937 rng(seed);
  SuiteResult out{"target-swap dominance", n, 0, 0.0};
  for (int i = 0; i < n; ++i) {
    auto j = detail::random_xyz(rng);
    const Structure st = Structure::complete(j);
    const double r1 =
        pidtensor::redundancy(*j, st, SourceCollection::of({{"X"}, {"Y"}}, {"Z"}));
    const double r2 =
        pidtensor::redundancy(*j, st, SourceCollection::of({{"Z"}, {"Y"}}, {"X"}));
    const double r3 =
        pidtensor::redundancy(*j, st, SourceCollection::of({{"Z"}, {"X"}}, {"Y"}));
    if (!(r1 >= r2 - kPropTol || r1 >= r3 - kPropTol)) ++out.violations;
  }
  out.seconds = timer.seconds();
  return out;
}

/// Per-source and total reconciliation of a two-source decomposition:
/// I(k;T) = U_k + R and total = R + U_1 + U_2 + S.
inline SuiteResult run_reconciliation(int n, unsigned seed) {
  detail::Timer timer;
  std::mt19937 rng(seed);
  SuiteResult out{"decomposition reconciliation", n, 0, 0.0};
  for (int i = 0; i < n; ++i) {
    auto j = detail::random_xyz(rng);
    const auto res =
        pidtensor::decompose(j, {"Z"}, {{"X"}, {"Y"}}, Structure::complete(j));
    const double ix = pidtensor::mutual_information(*j, {"X"}, {"Z"});
    const double iy = pidtensor::mutual_information(*j, {"Y"}, {"Z"});
    bool ok = std::abs(res.total - (res.redundancy + res.unique[0] + res.unique[1] +
                                    res.synergy)) <= kPropTol;
    ok = ok && std::abs(ix - (res.unique[0] + res.redundancy)) <= kPropTol;
    ok = ok && std::abs(iy - (res.unique[1] + res.redundancy)) <= kPropTol;
    if (!ok) ++out.violations;
  }
  out.seconds = timer.seconds();
  return out;
}

/// Synergy minus redundancy equals the interaction information.
inline SuiteResult run_synergy_interaction(int n, unsigned seed) {
  detail::Timer timer;
  std::mt19937 rng(seed);
  SuiteResult out{"synergy-redundancy balance", n, 0, 0.0};
  for (int i = 0; i < n; ++i) {
    auto j = detail::random_xyz(rng);
    const Structure st = Structure::complete(j);
    const auto sc = SourceCollection::of({{"X"}, {"Y"}}, {"Z"});
    const double s = pidtensor::synergy(*j, st, sc);
    const double r = pidtensor::redundancy(*j, st, sc);
    const double ii = pidtensor::interaction_information(*j, {"X"}, {"Y"}, {"Z"});
    if (std::abs((s - r) - ii) > kPropTol) ++out.violations;
  }
  out.seconds = timer.seconds();
  return out;
}

/// Two-source lattice: every cover relation is both guaranteed and
/// satisfied on every joint.
inline SuiteResult run_lattice_order_two(int n, unsigned seed) {
  detail::Timer timer;
  std::mt19937 rng(seed);
  SuiteResult out{"two-source lattice order", n, 0, 0.0};
  for (int i = 0; i < n; ++i) {
    auto j = detail::random_xyz(rng);
    const auto report = pidtensor::lattice_order_report(*j, Structure::complete(j),
                                                        {{"X"}, {"Y"}}, {"Z"});
    bool ok = report.size() == 4;
    for (const auto& e : report) ok = ok && e.guaranteed && e.satisfied;
    if (!ok) ++out.violations;
  }
  out.seconds = timer.seconds();
  return out;
}

/// Three-source lattice: the cover relations provable from the data
/// processing inequality alone are never violated.
inline SuiteResult run_lattice_order_three(int n, unsigned seed) {
  detail::Timer timer;
  std::mt19937 rng(seed);
  SuiteResult out{"three-source lattice order", n, 0, 0.0};
  for (int i = 0; i < n; ++i) {
    auto j = random_exact_joint(rng, {"A", "B", "C", "T"},
                                {random_size(rng, 2, 3), random_size(rng, 2, 3),
                                 random_size(rng, 2, 3), random_size(rng, 2, 3)});
    const auto report = pidtensor::lattice_order_report(*j, Structure::complete(j),
                                                        {{"A"}, {"B"}, {"C"}}, {"T"});
    bool ok = !report.empty();
    for (const auto& e : report) {
      if (e.guaranteed && !e.satisfied) ok = false;
    }
    if (!ok) ++out.violations;
  }
  out.seconds = timer.seconds();
  return out;
}

/// All randomized invariant suites at the given sample count.
inline std::vector<SuiteResult> run_all_suites(int n) {
  return {
      run_lemma1(n, 101),
      run_wb_axioms(n, 202),
      run_identity(n, 303),
      run_left_monotonicity(n, 404),
      run_theorem_target_swap(n, 505),
      run_reconciliation(n, 606),
      run_synergy_interaction(n, 707),
      run_lattice_order_two(n, 808),
      run_lattice_order_three(n, 909),
  };
}

}  // namespace testsupport
