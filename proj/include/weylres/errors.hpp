#pragma once

#include <stdexcept>
#include <string>

namespace weylres {

// Bad arguments or violated preconditions. The CLI maps this to exit code 2.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The request is well formed but belongs to a case this library does not
// model (e.g. symmetric spaces that need Satake diagram data).
class OutOfScopeError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw PreconditionError(what);
}

}  // namespace weylres
