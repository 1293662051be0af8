#pragma once

#include <stdexcept>
#include <string>

namespace pursuit {

/// A document or value violates a domain invariant. `path()` names the offending
/// field, e.g. "obstacles[0].height".
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string path, const std::string& what)
      : std::runtime_error(path.empty() ? what : path + ": " + what), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// Rejection sampling gave up after its attempt budget.
class SamplingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A policy could not produce commands (e.g. a bridge client disconnected or
/// timed out). Episodes abort with this instead of returning a result.
class PolicyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pursuit
