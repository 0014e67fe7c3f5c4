#pragma once

#include <stdexcept>
#include <string>

namespace subres {

// Exact division failed: the divisor does not divide the dividend.
class NonExactDivision : public std::runtime_error {
public:
    explicit NonExactDivision(const std::string& what) : std::runtime_error(what) {}
};

// Instance generation ran out of distinct values inside the requested bound.
class InfeasibleBound : public std::runtime_error {
public:
    explicit InfeasibleBound(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace subres
