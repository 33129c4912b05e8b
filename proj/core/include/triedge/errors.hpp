#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace triedge {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph6 input. `offset` is the byte position of the problem.
class ParseError : public Error {
 public:
  ParseError(const std::string& detail, std::size_t offset, std::size_t line = 0)
      : Error((line ? "line " + std::to_string(line) + ": " : std::string()) + detail + " at byte " +
              std::to_string(offset)),
        detail_(detail),
        offset_(offset),
        line_(line) {}

  const std::string& detail() const noexcept { return detail_; }
  std::size_t offset() const noexcept { return offset_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string detail_;
  std::size_t offset_;
  std::size_t line_;
};

/// (n, e) pair outside the domain of a bound or formula.
class InfeasibleInstance : public Error {
 public:
  using Error::Error;
};

/// build_construction preconditions or its computed postcondition failed.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// Request exceeds a fixed capacity (n > 64 for graphs, n > 10 for search).
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// An internal invariant of the library did not hold.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// A proven bound (e.g. t <= Tr <= g) failed on concrete data.
class AssertionViolation : public Error {
 public:
  using Error::Error;
};

/// A search hit its wall-clock budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace triedge

namespace triedge {

/// Bad record in a graph stream (wrong order or size, empty input).
class StreamError : public Error {
 public:
  StreamError(const std::string& what, std::size_t line)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace triedge
