/**
 * @file te.cpp
 * @brief Time-series embedding, subchannel partitioning, transfer entropy,
 *        collapse, and multiplexed composition.
 */
#include "pidtensor/te.hpp"

#include <algorithm>
#include <set>

#include "pidtensor/info.hpp"

namespace pidtensor {

namespace {

/// Alphabet of k-symbol windows over `base`, earliest symbol major,
/// comma-joined (matches the joined-variable display convention).
Alphabet window_alphabet(const Alphabet& base, std::size_t k) {
  std::vector<std::string> symbols{""};
  for (std::size_t q = 0; q < k; ++q) {
    std::vector<std::string> next;
    next.reserve(symbols.size() * base.size());
    for (const auto& prefix : symbols) {
      for (const auto& s : base.symbols()) {
        next.push_back(q == 0 ? s : prefix + "," + s);
      }
    }
    symbols = std::move(next);
  }
  return Alphabet(std::move(symbols));
}

/// Index of the window ending at position `end` (exclusive), length k.
std::size_t window_index(const std::vector<std::string>& col, const Alphabet& base,
                         std::size_t end, std::size_t k) {
  std::size_t idx = 0;
  for (std::size_t q = end - k; q < end; ++q) {
    idx = idx * base.size() + base.index(col[q]);
  }
  return idx;
}

Alphabet column_alphabet(const std::vector<std::string>& col) {
  std::set<std::string> uniq(col.begin(), col.end());
  return Alphabet(std::vector<std::string>(uniq.begin(), uniq.end()));
}

}  // namespace

TimeSeries TimeSeries::of(std::vector<std::string> names,
                          std::vector<std::vector<std::string>> columns) {
  if (names.empty()) throw FormatError("time series requires at least one variable");
  if (names.size() != columns.size()) {
    throw FormatError("time series has " + std::to_string(names.size()) + " names but " +
                      std::to_string(columns.size()) + " columns");
  }
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!seen.insert(n).second) throw NameError("duplicate time-series variable: " + n);
  }
  for (const auto& c : columns) {
    if (c.size() != columns.front().size()) {
      throw FormatError("time-series columns have unequal lengths");
    }
  }
  if (columns.front().empty()) throw FormatError("time series is empty");
  return TimeSeries{std::move(names), std::move(columns)};
}

const std::vector<std::string>& TimeSeries::column(const std::string& name) const {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw NameError("unknown time-series variable: " + name);
  return columns[static_cast<std::size_t>(it - names.begin())];
}

void TeConfig::validate() const {
  if (history_length < 1 || window_length < 1) {
    throw LengthError("embedding orders must be at least 1");
  }
}

JointDistribution embed(const TimeSeries& series, const std::string& cause_var,
                        const std::string& effect_var, const TeConfig& cfg) {
  cfg.validate();
  if (cause_var == effect_var) {
    throw NameError("cause and effect must be different variables, both are " + cause_var);
  }
  const auto& xs = series.column(cause_var);
  const auto& ys = series.column(effect_var);
  const std::size_t n = series.length();
  const std::size_t l = cfg.history_length, m = cfg.window_length;
  if (n <= l + m) {
    throw LengthError("time series of length " + std::to_string(n) +
                      " is too short for history " + std::to_string(l) + " + window " +
                      std::to_string(m));
  }

  Alphabet xa = column_alphabet(xs), ya = column_alphabet(ys);
  Alphabet wa = window_alphabet(xa, m), ha = window_alphabet(ya, l);

  const std::size_t start = std::max(l, m);
  const std::size_t windows = n - start;
  std::vector<long> counts(wa.size() * ha.size() * ya.size(), 0);
  for (std::size_t t = start; t < n; ++t) {
    std::size_t i = window_index(xs, xa, t, m);
    std::size_t g = window_index(ys, ya, t, l);
    std::size_t j = ya.index(ys[t]);
    ++counts[(i * ha.size() + g) * ya.size() + j];
  }
  std::vector<Prob> table;
  table.reserve(counts.size());
  for (long c : counts) table.push_back(Prob::rational(c, static_cast<long>(windows)));
  return JointDistribution({{cause_var + "_past", wa}, {effect_var + "_past", ha},
                            {effect_var, ya}},
                           std::move(table));
}

MultiplexTensor te_tensor(const JointDistribution& joint_embedded) {
  if (joint_embedded.variable_count() != 3) {
    throw ShapeError("subchannel partitioning expects an embedded joint over "
                     "(window, history, effect), got " +
                     std::to_string(joint_embedded.variable_count()) + " variables");
  }
  const Alphabet& ia = joint_embedded.alphabet(0);
  const Alphabet& ga = joint_embedded.alphabet(1);
  const Alphabet& ja = joint_embedded.alphabet(2);

  std::vector<ProbMatrix> matrices(
      ga.size(), ProbMatrix::Constant(static_cast<Eigen::Index>(ia.size()),
                                      static_cast<Eigen::Index>(ja.size()), Prob(0)));
  ProbVector weights = ProbVector::Constant(static_cast<Eigen::Index>(ga.size()), Prob(0));
  std::vector<std::vector<Prob>> mass(ga.size(), std::vector<Prob>(ia.size(), Prob(0)));

  joint_embedded.for_each_cell([&](const std::vector<std::size_t>& cell, const Prob& p) {
    if (p.is_zero()) return;
    std::size_t i = cell[0], g = cell[1], j = cell[2];
    matrices[g](static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) += p;
    mass[g][i] += p;
    weights(static_cast<Eigen::Index>(g)) += p;
  });

  std::vector<std::vector<bool>> row_support;
  std::vector<bool> subchannel_support;
  for (std::size_t g = 0; g < ga.size(); ++g) {
    std::vector<bool> support(ia.size(), false);
    for (std::size_t i = 0; i < ia.size(); ++i) {
      if (mass[g][i].is_zero()) continue;
      support[i] = true;
      for (std::size_t j = 0; j < ja.size(); ++j) {
        matrices[g](static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) /= mass[g][i];
      }
    }
    row_support.push_back(std::move(support));
    subchannel_support.push_back(!weights(static_cast<Eigen::Index>(g)).is_zero());
  }
  return MultiplexTensor{{joint_embedded.name(0)},
                         {joint_embedded.name(2)},
                         {joint_embedded.name(1)},
                         ia,
                         ja,
                         ga,
                         std::move(matrices),
                         std::move(row_support),
                         std::move(weights),
                         std::move(subchannel_support)};
}

double transfer_entropy(const MultiplexTensor& mux, const JointDistribution& joint_embedded) {
  if (joint_embedded.variable_count() != 3 ||
      joint_embedded.alphabet(0) != mux.source_alphabet ||
      joint_embedded.alphabet(1) != mux.subchannel_alphabet ||
      joint_embedded.alphabet(2) != mux.destination_alphabet) {
    throw ShapeError("multiplex tensor does not match the embedded joint");
  }
  const std::size_t js = mux.destination_alphabet.size();
  std::vector<Prob> pg(mux.subchannel_alphabet.size(), Prob(0));
  std::vector<Prob> pgj(pg.size() * js, Prob(0));
  joint_embedded.for_each_cell([&](const std::vector<std::size_t>& cell, const Prob& p) {
    if (p.is_zero()) return;
    pg[cell[1]] += p;
    pgj[cell[1] * js + cell[2]] += p;
  });
  double te = 0.0;
  joint_embedded.for_each_cell([&](const std::vector<std::size_t>& cell, const Prob& p) {
    if (p.is_zero()) return;
    std::size_t i = cell[0], g = cell[1], j = cell[2];
    Prob a = mux.matrices[g](static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    Prob q = pgj[g * js + j] / pg[g];
    te += p.to_double() * log2_value(a / q);
  });
  return clamp_nonneg(te, "transfer entropy");
}

ConditionWeights condition_weights(const JointDistribution& joint, const VarSet& subchannel_g,
                                   const VarSet& condition_h, const VarSet& source_i) {
  VarSet hig = condition_h;
  hig.insert(hig.end(), source_i.begin(), source_i.end());
  hig.insert(hig.end(), subchannel_g.begin(), subchannel_g.end());
  Pmf full = joint.marginal_pmf(hig);  // h-major, g fastest

  VarSet hi = condition_h;
  hi.insert(hi.end(), source_i.begin(), source_i.end());
  Pmf pair = joint.marginal_pmf(hi);

  Alphabet ha = joint.joined_alphabet(condition_h);
  Alphabet ia = joint.joined_alphabet(source_i);
  Alphabet ga = joint.joined_alphabet(subchannel_g);

  const std::size_t hs = ha.size(), is = ia.size(), gs = ga.size();
  std::vector<ProbMatrix> per_condition;
  std::vector<std::vector<bool>> row_support;
  for (std::size_t h = 0; h < hs; ++h) {
    ProbMatrix mat = ProbMatrix::Constant(static_cast<Eigen::Index>(is),
                                          static_cast<Eigen::Index>(gs), Prob(0));
    std::vector<bool> support(is, false);
    for (std::size_t i = 0; i < is; ++i) {
      Prob massv = pair.probs(static_cast<Eigen::Index>(h * is + i));
      if (massv.is_zero()) continue;
      support[i] = true;
      for (std::size_t g = 0; g < gs; ++g) {
        mat(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(g)) =
            full.probs(static_cast<Eigen::Index>((h * is + i) * gs + g)) / massv;
      }
    }
    per_condition.push_back(std::move(mat));
    row_support.push_back(std::move(support));
  }
  return ConditionWeights{condition_h,         source_i,
                          subchannel_g,        std::move(ha),
                          std::move(ia),       std::move(ga),
                          std::move(per_condition), std::move(row_support)};
}

CausalTensor collapse_subchannels(const MultiplexTensor& mux, const ConditionWeights& weights) {
  if (weights.source_alphabet != mux.source_alphabet ||
      weights.subchannel_alphabet != mux.subchannel_alphabet) {
    throw ShapeError("conditioning weights do not match the multiplex tensor's alphabets");
  }
  const std::size_t hs = weights.condition_alphabet.size();
  const std::size_t is = mux.source_alphabet.size();
  const std::size_t js = mux.destination_alphabet.size();
  const std::size_t gs = mux.subchannel_alphabet.size();

  std::vector<std::string> row_symbols;
  row_symbols.reserve(hs * is);
  for (std::size_t h = 0; h < hs; ++h) {
    for (std::size_t i = 0; i < is; ++i) {
      row_symbols.push_back(weights.condition_alphabet.symbol(h) + "," +
                            mux.source_alphabet.symbol(i));
    }
  }
  Alphabet row_alpha(std::move(row_symbols));

  ProbMatrix matrix = ProbMatrix::Constant(static_cast<Eigen::Index>(hs * is),
                                           static_cast<Eigen::Index>(js), Prob(0));
  std::vector<bool> row_support(hs * is, false);

  const double tol = kDefaultTolerance;
  for (std::size_t h = 0; h < hs; ++h) {
    for (std::size_t i = 0; i < is; ++i) {
      if (!weights.row_support[h][i]) continue;
      std::size_t row = h * is + i;
      row_support[row] = true;
      Prob weight_sum(0);
      for (std::size_t g = 0; g < gs; ++g) {
        Prob wg = weights.per_condition[h](static_cast<Eigen::Index>(i),
                                           static_cast<Eigen::Index>(g));
        weight_sum += wg;
        if (wg.is_zero()) continue;
        for (std::size_t j = 0; j < js; ++j) {
          matrix(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(j)) +=
              wg * mux.matrices[g](static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        }
      }
      if (!prob_close(weight_sum, Prob(1), tol)) {
        throw WeightError("conditioning weights for row " + row_alpha.symbol(row) +
                          " sum to " + weight_sum.str());
      }
      Prob row_sum(0);
      for (std::size_t j = 0; j < js; ++j) {
        row_sum += matrix(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(j));
      }
      if (!prob_close(row_sum, Prob(1), tol)) {
        throw WeightError("collapsed row " + row_alpha.symbol(row) +
                          " is not a distribution (weights reach unsupported subchannel "
                          "rows); sums to " +
                          row_sum.str());
      }
    }
  }

  VarSet source = weights.condition;
  source.insert(source.end(), weights.source.begin(), weights.source.end());
  return CausalTensor{std::move(source),     mux.destination,
                      std::move(row_alpha),  mux.destination_alphabet,
                      std::move(matrix),     std::move(row_support)};
}

MultiplexTensor mux_compose(const CausalTensor& collapsed, const MultiplexTensor& second) {
  if (collapsed.destination_alphabet != second.source_alphabet) {
    throw ShapeError("collapsed stage outputs " +
                     std::to_string(collapsed.destination_alphabet.size()) +
                     " symbols but the second stage accepts " +
                     std::to_string(second.source_alphabet.size()));
  }
  const std::size_t hs = second.subchannel_alphabet.size();
  if (collapsed.rows() % hs != 0) {
    throw ShapeError("collapsed tensor rows do not partition over the second stage's " +
                     std::to_string(hs) + " subchannels");
  }
  const std::size_t is = collapsed.rows() / hs;

  // Recover the input alphabet: every row symbol must be "<h>,<i>".
  std::vector<std::string> input_symbols;
  for (std::size_t h = 0; h < hs; ++h) {
    const std::string prefix = second.subchannel_alphabet.symbol(h) + ",";
    for (std::size_t i = 0; i < is; ++i) {
      const std::string& sym = collapsed.source_alphabet.symbol(h * is + i);
      if (sym.rfind(prefix, 0) != 0) {
        throw ShapeError("collapsed row symbol '" + sym +
                         "' is not conditioned on second-stage subchannel '" +
                         second.subchannel_alphabet.symbol(h) + "'");
      }
      std::string suffix = sym.substr(prefix.size());
      if (h == 0) {
        input_symbols.push_back(std::move(suffix));
      } else if (suffix != input_symbols[i]) {
        throw ShapeError("collapsed rows carry inconsistent input symbols: '" + suffix +
                         "' vs '" + input_symbols[i] + "'");
      }
    }
  }

  // The collapsed source VarSet is (condition names, input names).
  const VarSet& cond = second.subchannel;
  if (collapsed.source.size() <= cond.size() ||
      !std::equal(cond.begin(), cond.end(), collapsed.source.begin())) {
    throw ShapeError("collapsed tensor source is not conditioned on " + varset_label(cond));
  }

  std::vector<ProbMatrix> matrices;
  std::vector<std::vector<bool>> row_support;
  for (std::size_t h = 0; h < hs; ++h) {
    ProbMatrix block = collapsed.matrix.block(static_cast<Eigen::Index>(h * is), 0,
                                              static_cast<Eigen::Index>(is),
                                              collapsed.matrix.cols());
    matrices.push_back(block * second.matrices[h]);
    std::vector<bool> support(is, false);
    for (std::size_t i = 0; i < is; ++i) support[i] = collapsed.row_support[h * is + i];
    row_support.push_back(std::move(support));
  }
  VarSet source(collapsed.source.begin() + static_cast<std::ptrdiff_t>(cond.size()),
                collapsed.source.end());
  return MultiplexTensor{std::move(source),
                         second.destination,
                         second.subchannel,
                         Alphabet(std::move(input_symbols)),
                         second.destination_alphabet,
                         second.subchannel_alphabet,
                         std::move(matrices),
                         std::move(row_support),
                         second.weights,
                         second.subchannel_support};
}

}  // namespace pidtensor
