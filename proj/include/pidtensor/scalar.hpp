/**
 * @file scalar.hpp
 * @brief Dual-arithmetic probability scalar.
 *
 * Prob holds either an exact arbitrary-precision rational (GMP mpq_class)
 * or a float64, tagged by mode.  Arithmetic between two exact values stays
 * exact; as soon as a float operand enters, the result is float and carries
 * a sticky precision-downgrade flag that propagates through every further
 * operation.  All logarithms are evaluated in float64 at the final step
 * (see log2_value).
 *
 * Conventions:
 *   - exact mode compares with exact rational equality;
 *   - float mode comparisons are plain double comparisons (tolerances are
 *     applied by callers, a single config value, not baked into the scalar);
 *   - Prob is Eigen-compatible: NumTraits<Prob> is specialized below so
 *     Matrix<Prob, Dynamic, Dynamic> supports products and sums.
 */
#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <cmath>
#include <cstdint>
#include <string>

namespace pidtensor {

/// Dual exact-rational / float64 scalar for probabilities and weights.
class Prob {
 public:
  /// Zero, exact.
  Prob() : exact_(true), downgraded_(false), q_(0), d_(0.0) {}
  /// Small integer, exact (also the implicit Scalar(0)/Scalar(1) Eigen uses).
  Prob(long n) : exact_(true), downgraded_(false), q_(static_cast<long>(n)), d_(0.0) {}
  Prob(int n) : Prob(static_cast<long>(n)) {}

  /// Exact rational value.
  static Prob rational(const mpq_class& q) {
    Prob p;
    p.q_ = q;
    p.q_.canonicalize();
    return p;
  }
  static Prob rational(long num, long den) { return rational(mpq_class(num, den)); }

  /// Float64 value (enters float mode; not flagged as downgraded by itself).
  static Prob floating(double d) {
    Prob p;
    p.exact_ = false;
    p.d_ = d;
    return p;
  }

  bool exact() const { return exact_; }
  /// True iff this value is the product of mixing exact and float operands.
  bool downgraded() const { return downgraded_; }

  double to_double() const { return exact_ ? q_.get_d() : d_; }

  /// The exact rational payload; callers must check exact() first.
  const mpq_class& rat() const { return q_; }

  bool is_zero() const { return exact_ ? q_ == 0 : d_ == 0.0; }

  Prob& operator+=(const Prob& o) { return apply(o, Op::Add); }
  Prob& operator-=(const Prob& o) { return apply(o, Op::Sub); }
  Prob& operator*=(const Prob& o) { return apply(o, Op::Mul); }
  Prob& operator/=(const Prob& o) { return apply(o, Op::Div); }

  friend Prob operator+(Prob a, const Prob& b) { return a += b; }
  friend Prob operator-(Prob a, const Prob& b) { return a -= b; }
  friend Prob operator*(Prob a, const Prob& b) { return a *= b; }
  friend Prob operator/(Prob a, const Prob& b) { return a /= b; }
  friend Prob operator-(const Prob& a) { return Prob(0) - a; }

  friend bool operator==(const Prob& a, const Prob& b) {
    if (a.exact_ && b.exact_) return a.q_ == b.q_;
    return a.to_double() == b.to_double();
  }
  friend bool operator!=(const Prob& a, const Prob& b) { return !(a == b); }
  friend bool operator<(const Prob& a, const Prob& b) {
    if (a.exact_ && b.exact_) return a.q_ < b.q_;
    return a.to_double() < b.to_double();
  }
  friend bool operator>(const Prob& a, const Prob& b) { return b < a; }
  friend bool operator<=(const Prob& a, const Prob& b) { return !(b < a); }
  friend bool operator>=(const Prob& a, const Prob& b) { return !(a < b); }

  /// Render exact values as "num/den" (or "n" for integers), floats as digits.
  std::string str() const {
    if (exact_) return q_.get_str();
    return std::to_string(d_);
  }

 private:
  enum class Op { Add, Sub, Mul, Div };

  Prob& apply(const Prob& o, Op op) {
    if (exact_ && o.exact_) {
      switch (op) {
        case Op::Add: q_ += o.q_; break;
        case Op::Sub: q_ -= o.q_; break;
        case Op::Mul: q_ *= o.q_; break;
        case Op::Div: q_ /= o.q_; break;
      }
      downgraded_ = downgraded_ || o.downgraded_;
      return *this;
    }
    const bool mixing = exact_ != o.exact_;
    double a = to_double();
    const double b = o.to_double();
    switch (op) {
      case Op::Add: a += b; break;
      case Op::Sub: a -= b; break;
      case Op::Mul: a *= b; break;
      case Op::Div: a /= b; break;
    }
    exact_ = false;
    d_ = a;
    q_ = 0;
    downgraded_ = downgraded_ || o.downgraded_ || mixing;
    return *this;
  }

  bool exact_;
  bool downgraded_;
  mpq_class q_;
  double d_;
};

/// log2 of a Prob, evaluated in float64 (the final-step convention).
inline double log2_value(const Prob& p) { return std::log2(p.to_double()); }

inline Prob abs(const Prob& p) { return p < Prob(0) ? -p : p; }

/// Dense row-major matrix of probabilities (tensor storage).
using ProbMatrix = Eigen::Matrix<Prob, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
/// Dense probability vector (pmf storage).
using ProbVector = Eigen::Matrix<Prob, Eigen::Dynamic, 1>;

}  // namespace pidtensor

namespace Eigen {

template <>
struct NumTraits<pidtensor::Prob> : GenericNumTraits<pidtensor::Prob> {
  using Real = pidtensor::Prob;
  using NonInteger = pidtensor::Prob;
  using Nested = pidtensor::Prob;
  using Literal = long;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 40,
    MulCost = 40,
  };

  static inline Real epsilon() { return pidtensor::Prob(0); }
  static inline Real dummy_precision() { return pidtensor::Prob(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
