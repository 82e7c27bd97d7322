#pragma once

#include <stdexcept>
#include <string>

namespace gforge {

/// A configured budget (run count, span size, materialization, search depth)
/// was exhausted before the operation could finish.  CLI maps this to exit 1.
class BudgetError : public std::runtime_error {
public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

/// The exact result of an arithmetic step does not fit the Exact|Tower value
/// forms (e.g. a nonzero offset added to a symbolic tower).
class TowerOverflow : public std::runtime_error {
public:
  explicit TowerOverflow(const std::string& what) : std::runtime_error(what) {}
};

/// An operation that requires a non-nilpotent input detected a vanishing
/// power of its argument.
class NilpotentInputError : public std::runtime_error {
public:
  explicit NilpotentInputError(const std::string& what)
      : std::runtime_error(what) {}
};

} // namespace gforge
