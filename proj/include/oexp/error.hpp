#pragma once

#include <stdexcept>
#include <string>

namespace oexp {

// Malformed user input: bad file syntax, unknown names, bad flags.
class InputError : public std::runtime_error {
public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Mathematically inconsistent input: Jacobi violations, bad splits,
// preconditions not met.
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A post-condition of our own algorithms failed; indicates a bug and is
// surfaced loudly rather than papered over.
class InternalError : public std::logic_error {
public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace oexp
