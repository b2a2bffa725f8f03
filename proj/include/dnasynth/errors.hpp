#pragma once

#include <stdexcept>
#include <string>

namespace dnasynth {

/// Input does not have the expected shape (odd bit count, bad symbol, wrong length).
class MalformedInput : public std::invalid_argument {
 public:
  explicit MalformedInput(const std::string& what) : std::invalid_argument(what) {}
};

/// Codec or counting parameters are inconsistent.
class ParameterError : public std::invalid_argument {
 public:
  explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

/// No admissible parameter set exists (e.g. synthesis budget too small).
class Infeasible : public std::runtime_error {
 public:
  explicit Infeasible(const std::string& what) : std::runtime_error(what) {}
};

/// A rank outside 1..N, or a query on an empty set.
class RangeError : public std::out_of_range {
 public:
  explicit RangeError(const std::string& what) : std::out_of_range(what) {}
};

/// A word handed to a ranking function is not a member of the target set.
class MembershipError : public std::invalid_argument {
 public:
  explicit MembershipError(const std::string& what) : std::invalid_argument(what) {}
};

/// The received word is not within one indel of any codeword.
class DecodeFailure : public std::runtime_error {
 public:
  explicit DecodeFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dnasynth
