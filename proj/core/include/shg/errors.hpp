#ifndef SHG_ERRORS_HPP
#define SHG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace shg {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Dimension mismatches, invalid indices, carrier/universe mixing, and
/// arguments that violate an operation's structural preconditions.
class StructuralError : public Error {
 public:
  explicit StructuralError(const std::string& what) : Error(what) {}
};

/// Raised by the structure-file reader; carries the offending line.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& reason)
      : Error(reason + " at line " + std::to_string(line)), line_(line), reason_(reason) {}

  int line() const { return line_; }
  const std::string& reason() const { return reason_; }

 private:
  int line_;
  std::string reason_;
};

/// Raised when an exhaustive enumeration would exceed the configured cap.
/// The message tells the caller how to proceed with explicit candidates.
class CapExceededError : public Error {
 public:
  explicit CapExceededError(const std::string& what) : Error(what) {}
};

}  // namespace shg

#endif  // SHG_ERRORS_HPP
