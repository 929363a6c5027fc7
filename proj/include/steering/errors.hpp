#pragma once

#include <stdexcept>
#include <string>

namespace steering {

/// Requested POVM construction cannot satisfy positivity.
class InfeasibleConstruction : public std::runtime_error {
  public:
    explicit InfeasibleConstruction(const std::string &what)
        : std::runtime_error(what) {}
};

/// Numerical solver gave up (iteration cap, NaN, unverifiable solution).
/// Distinct from a well-posed "infeasible" answer.
class SolverFailure : public std::runtime_error {
  public:
    explicit SolverFailure(const std::string &what)
        : std::runtime_error(what) {}
};

} // namespace steering
