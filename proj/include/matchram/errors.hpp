#pragma once

#include <stdexcept>
#include <string>

namespace matchram {

/// Base class for all matchram errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A caller violated a documented precondition.
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what) : Error(what) {}
};

/// An exhaustive search would exceed its size guard. The message names the
/// override that lifts the guard.
class GuardError : public Error {
 public:
  explicit GuardError(const std::string& what) : Error(what) {}
};

/// A checked postcondition failed. This always indicates a bug (or a false
/// theorem) and is never swallowed.
class ContractError : public Error {
 public:
  explicit ContractError(const std::string& what) : Error(what) {}
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw PreconditionError(what);
}

inline void contract(bool cond, const std::string& what) {
  if (!cond) throw ContractError(what);
}

}  // namespace matchram
