#ifndef GCA_ERRORS_HPP
#define GCA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gca {

// Base for all user-facing failures (bad input, bad arguments, caps).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

// Arguments that are well formed but outside an operation's domain
// (unknown vertex, non-composable paths, S not inside sigma, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A configured enumeration cap was exceeded.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

// Internal consistency check failed. Indicates a bug, not bad input.
class InvariantBreach : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace gca

#endif
