#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pmdet {

/// Invalid arguments or ill-formed input: bad modulus, shape or context
/// mismatch, out-of-range shift, unparsable file.  Maps to CLI exit code 1.
class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A violated internal invariant.  Indicates a bug in this library (or a
/// corrupted intermediate), never a user mistake.  Maps to CLI exit code 2.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// A full-row-rank precondition failed.  Carries the rank actually found so
/// callers (and diagnostics) can report how far the input fell short.
class RankDeficientError : public std::runtime_error {
public:
  RankDeficientError(std::size_t rank, std::size_t required)
      : std::runtime_error("rank deficient: rank " + std::to_string(rank) +
                           " < required " + std::to_string(required)),
        rank_(rank), required_(required) {}

  std::size_t rank() const noexcept { return rank_; }
  std::size_t required() const noexcept { return required_; }

private:
  std::size_t rank_;
  std::size_t required_;
};

} // namespace pmdet
