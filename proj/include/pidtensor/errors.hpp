/**
 * @file errors.hpp
 * @brief Error taxonomy for the pidtensor library.
 *
 * Every failure mode surfaces as a typed exception derived from Error
 * (itself a std::runtime_error), so callers can catch broadly or narrowly.
 * The CLI maps Error subtypes onto its documented exit codes: input-shaped
 * problems (Name/Format/Alphabet/Shape/Length/Overlap/Weight/Io/
 * UnsupportedCondition) exit 2, internal consistency violations
 * (InvariantError/InternalError) exit 3.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace pidtensor {

/// Base class of all pidtensor exceptions.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// An identifier (variable name, fixture name, ...) is unknown.
class NameError : public Error {
 public:
  using Error::Error;
};

/// Conditioning on an event of zero probability.
class UnsupportedCondition : public Error {
 public:
  using Error::Error;
};

/// Variable sets overlap where disjointness is required.
class OverlapError : public Error {
 public:
  using Error::Error;
};

/// Malformed external input (JSON / CSV / sample rows).
class FormatError : public Error {
 public:
  using Error::Error;
};

/// An external file cannot be opened, read, or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// A symbol falls outside its declared alphabet.
class AlphabetError : public Error {
 public:
  using Error::Error;
};

/// Dimension or alphabet mismatch between operands.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Weights that should form a conditional pmf fail to normalize.
class WeightError : public Error {
 public:
  using Error::Error;
};

/// A sequence is too short for the requested embedding.
class LengthError : public Error {
 public:
  using Error::Error;
};

/// A mathematical invariant the library guarantees was violated.
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// The request is valid but outside the library's supported scope.
class NotSupported : public Error {
 public:
  using Error::Error;
};

/// A bug: an internal precondition no caller can trigger legitimately.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace pidtensor
