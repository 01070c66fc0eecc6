#pragma once

#include <stdexcept>
#include <string>

namespace bcp {

/// Input that violates a documented precondition (malformed file, non-BCP
/// graph, out-of-range vertex, ...). The CLI maps this to exit code 1.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A postcondition the library asserts on its own output did not hold.
/// The CLI maps this to exit code 2.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The Hamiltonian search ran out of budget on a 3-connected leaf and there is
/// no sub-Hamiltonian construction to fall back on.
class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void ensure(bool condition, const std::string& what) {
  if (!condition) throw InternalError(what);
}

}  // namespace detail
}  // namespace bcp
