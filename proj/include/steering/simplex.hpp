#pragma once

#include <vector>

namespace steering::lp {

/// Equality-form linear program: minimize c·x subject to A x = b, x >= 0.
struct Problem {
    int rows = 0;
    int cols = 0;
    std::vector<double> a; // row-major, rows x cols
    std::vector<double> b; // rows
    std::vector<double> c; // cols

    double &at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    double at(int i, int j) const {
        return a[static_cast<std::size_t>(i) * cols + j];
    }
};

enum class Status {
    Optimal,
    Infeasible,
    Unbounded,
    IterationLimit,
};

struct Solution {
    Status status = Status::IterationLimit;
    std::vector<double> x;
    double objective = 0.0;
    /// Phase-1 optimum: total constraint violation of the best attainable
    /// point. ~0 for feasible problems.
    double infeasibility = 0.0;
    /// max_i |A x - b| of the returned x.
    double residual = 0.0;
    int iterations = 0;
};

/// Dense two-phase tableau simplex. Dantzig pricing with a Bland's-rule
/// fallback after `bland_after` iterations so degenerate problems cannot
/// cycle.
Solution solve(const Problem &p, int max_iters = 20000, int bland_after = 500);

} // namespace steering::lp
