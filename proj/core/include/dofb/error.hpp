#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace dofb {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

struct Violation {
  std::string message;
  std::string subject;  // offending node or edge, rendered as text

  friend bool operator==(const Violation&, const Violation&) = default;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

class UnknownNode : public Error {
 public:
  explicit UnknownNode(const std::string& name) : Error("unknown node: " + name) {}
};

class LayerMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

class IncompatibleBoundary : public Error {
 public:
  using Error::Error;
};

class MissingGain : public Error {
 public:
  using Error::Error;
};

// Raised when a cross-check that theory guarantees fails; always a bug.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

class OverlapError : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  CapExceeded(std::string node, std::size_t set_size, std::size_t cap);
  std::size_t set_size() const noexcept { return set_size_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t set_size_;
  std::size_t cap_;
};

class RankSelectionFailure : public Error {
 public:
  using Error::Error;
};

class MismatchedDestination : public Error {
 public:
  using Error::Error;
};

}  // namespace dofb
