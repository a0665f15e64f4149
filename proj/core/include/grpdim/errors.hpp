#pragma once

#include <stdexcept>
#include <string>

namespace grpdim {

/// Malformed user input: bad group descriptor, unreadable or invalid table file,
/// malformed graph JSON, and the like.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A requested computation exceeds a size cap or search budget.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

/// An operation was called outside its stated domain (disconnected graph,
/// wrong diameter, wrong group class, ...).
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace grpdim
