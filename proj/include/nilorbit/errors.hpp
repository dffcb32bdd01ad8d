#ifndef NILORBIT_ERRORS_HPP
#define NILORBIT_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace nilorbit {

/// Coarse classification used by the CLI to pick an exit code and an
/// `error[...]` prefix.
enum class ErrorKind {
  usage,      // malformed text, unknown flag
  cap,        // enumeration cap exceeded
  size,       // partition total does not fit the group
  parity,     // partition fails a parity / validity precondition
  parameter,  // Arthur parameter violates a structural rule
  invariant,  // internal consistency failure (non-unique extremum, ...)
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::usage: return "usage";
    case ErrorKind::cap: return "cap";
    case ErrorKind::size: return "size";
    case ErrorKind::parity: return "parity";
    case ErrorKind::parameter: return "parameter";
    case ErrorKind::invariant: return "invariant";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(ErrorKind::usage, what) {}
};

class InvalidPartition : public Error {
 public:
  explicit InvalidPartition(const std::string& what) : Error(ErrorKind::usage, what) {}
};

class CapExceeded : public Error {
 public:
  explicit CapExceeded(const std::string& what) : Error(ErrorKind::cap, what) {}
};

class SizeMismatch : public Error {
 public:
  explicit SizeMismatch(const std::string& what) : Error(ErrorKind::size, what) {}
};

class ParityViolation : public Error {
 public:
  explicit ParityViolation(const std::string& what) : Error(ErrorKind::parity, what) {}
};

class InvalidParameter : public Error {
 public:
  explicit InvalidParameter(const std::string& what) : Error(ErrorKind::parameter, what) {}
};

class InvariantViolation : public Error {
 public:
  explicit InvariantViolation(const std::string& what) : Error(ErrorKind::invariant, what) {}
};

}  // namespace nilorbit

#endif  // NILORBIT_ERRORS_HPP
