#pragma once

#include <stdexcept>
#include <string>

namespace genusdist {

/// Enumeration refused up front: the search space exceeds the configured budget.
class budget_error : public std::runtime_error {
public:
    budget_error(std::string space, std::string budget)
        : std::runtime_error("search space of " + space + " tuples exceeds budget " + budget),
          space_(std::move(space)),
          budget_(std::move(budget)) {}

    const std::string& space() const noexcept { return space_; }
    const std::string& budget() const noexcept { return budget_; }

private:
    std::string space_;
    std::string budget_;
};

/// The digraph/handle pair does not satisfy the fan precondition.
class not_fan_error : public std::runtime_error {
public:
    explicit not_fan_error(const std::string& what) : std::runtime_error(what) {}
};

/// An internal consistency check failed: a formula produced a value it
/// mathematically cannot. Always a bug, never a usage problem.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace genusdist
