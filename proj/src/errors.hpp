#pragma once

#include <stdexcept>
#include <string>

namespace qloop {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid input from the caller (bad config, malformed text, bad sizes).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Mathematically undefined request: division by zero, non-invertible leading
/// term, inconsistent weights.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A result depends on basis vectors outside the truncation window.
class EscapeError : public Error {
 public:
  using Error::Error;
};

/// Internal invariant broken (heuristic gcd gave up, inconsistent table, ...).
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace qloop
