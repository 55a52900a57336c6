/**
 * @file te.hpp
 * @brief Transfer entropy as transmission over an inverse multiplexer:
 *        sliding-window embedding of time series, per-subchannel tensors
 *        partitioned on the effect's past, subchannel collapse, and
 *        multiplexed cascade composition.
 *
 * The effect's recent history selects which subchannel the source symbol
 * travels through: a MultiplexTensor holds one row-stochastic matrix
 * A^j_{gi} = p(effect = j | window = i, history = g) per history symbol g,
 * alongside the history weights p(g).  Transfer entropy is the information
 * transmitted by such a device, and equals the conditional mutual
 * information I(window; effect | history) on the embedded joint.
 *
 * Cascading two multiplexed stages needs the first stage averaged over its
 * own subchannels conditioned on the second stage's history: collapse with
 * weights p(g | h, i) produces the tensor A-bar^j_{hi}, and composition then
 * proceeds per second-stage subchannel h.  Histories with zero empirical
 * count are unsupported and excluded from every sum.
 */
#pragma once

#include "pidtensor/tensor.hpp"

namespace pidtensor {

/// Equal-length named symbol columns, one row per time step.
struct TimeSeries {
  std::vector<std::string> names;
  std::vector<std::vector<std::string>> columns;  ///< aligned with names

  /// Validates distinct names, equal nonempty column lengths
  /// (FormatError / NameError).
  static TimeSeries of(std::vector<std::string> names,
                       std::vector<std::vector<std::string>> columns);

  std::size_t length() const { return columns.empty() ? 0 : columns.front().size(); }
  const std::vector<std::string>& column(const std::string& name) const;  ///< NameError
};

/// Embedding orders: the effect is treated as a Markov process of order
/// history_length, driven by windows of window_length source symbols.
struct TeConfig {
  std::size_t history_length = 1;  ///< effect-history symbols per window
  std::size_t window_length = 1;   ///< cause symbols per window

  /// Both orders >= 1; LengthError otherwise.
  void validate() const;
};

/// Empirical joint over (cause window, effect history, effect), exact
/// rational, from sliding windows.  Variables are named
/// "<cause>_past", "<effect>_past", "<effect>" in that order; per-column
/// alphabets are the sorted distinct symbols, windows their Cartesian
/// powers.  LengthError when length <= history_length + window_length;
/// NameError when cause and effect are the same column.
JointDistribution embed(const TimeSeries& series, const std::string& cause_var,
                        const std::string& effect_var, const TeConfig& cfg);

/// Per-subchannel transition matrices partitioned on the effect history.
struct MultiplexTensor {
  VarSet source;                    ///< cause-window variable
  VarSet destination;               ///< effect variable
  VarSet subchannel;                ///< history variable
  Alphabet source_alphabet;         ///< i symbols
  Alphabet destination_alphabet;    ///< j symbols
  Alphabet subchannel_alphabet;     ///< g symbols
  std::vector<ProbMatrix> matrices; ///< per g: rows i, cols j
  std::vector<std::vector<bool>> row_support;  ///< per g, per i: count > 0
  ProbVector weights;               ///< p(g)
  std::vector<bool> subchannel_support;        ///< p(g) > 0

  std::size_t subchannel_count() const { return subchannel_alphabet.size(); }
};

/// Partition an embedded joint (3 variables in embed's order) into
/// subchannel tensors; ShapeError unless the joint has exactly 3 variables.
MultiplexTensor te_tensor(const JointDistribution& joint_embedded);

/// TE = sum_{i,j,g} p(i,g,j) log2[A^j_{gi} / p(j|g)] in bits; >= 0.
/// Equals I(window; effect | history) on the same joint.
/// ShapeError when mux and joint disagree.
double transfer_entropy(const MultiplexTensor& mux, const JointDistribution& joint_embedded);

/// Conditioning weights p(g | h, i) for collapsing a first stage over its
/// subchannels g, given the second stage's history h and the input i.
struct ConditionWeights {
  VarSet condition;                 ///< h variable
  VarSet source;                    ///< i variable
  VarSet subchannel;                ///< g variable
  Alphabet condition_alphabet;
  Alphabet source_alphabet;
  Alphabet subchannel_alphabet;
  std::vector<ProbMatrix> per_condition;       ///< per h: rows i, cols g
  std::vector<std::vector<bool>> row_support;  ///< per h, per i: p(h,i) > 0
};

/// Estimate p(g | h, i) empirically from a joint carrying all three
/// variables.  Rows with p(h, i) = 0 are unsupported.
ConditionWeights condition_weights(const JointDistribution& joint, const VarSet& subchannel_g,
                                   const VarSet& condition_h, const VarSet& source_i);

/// A-bar^j_{hi} = sum_g p^g_{hi} A^j_{gi}: average the subchannel matrices
/// under the conditioning weights.  Result rows are (h, i) pairs, h-major,
/// with "h,i" joined symbols.  ShapeError on alphabet mismatch; WeightError
/// when a supported row's weights do not sum to 1 or the collapsed row is
/// not a pmf (weights touching unsupported subchannel rows).
CausalTensor collapse_subchannels(const MultiplexTensor& mux, const ConditionWeights& weights);

/// T^k_{hi} = sum_j A-bar^j_{hi} B^k_{hj}: compose a collapsed first stage
/// with a multiplexed second stage, one matrix product per subchannel h.
/// The collapsed tensor's rows must be (h, i) pairs over exactly the second
/// stage's subchannel alphabet (ShapeError otherwise).  With a single
/// subchannel this reduces bit-exactly to plain compose.
MultiplexTensor mux_compose(const CausalTensor& collapsed, const MultiplexTensor& second);

}  // namespace pidtensor
