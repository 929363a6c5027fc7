#include "steering/simplex.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace steering::lp {

namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kCostTol = 1e-9;
constexpr double kFeasTol = 1e-9;

struct Tableau {
    int rows;
    int ncols;  // structural + artificial
    int nstruct;
    std::vector<double> t;      // rows x (ncols + 1), last column is rhs
    std::vector<double> cost1;  // phase-1 reduced costs, length ncols + 1
    std::vector<double> cost2;  // phase-2 reduced costs, length ncols + 1
    std::vector<int> basis;     // column index per row
    std::vector<char> eligible; // columns allowed to enter

    double &at(int i, int j) {
        return t[static_cast<std::size_t>(i) * (ncols + 1) + j];
    }
    int rhs() const { return ncols; }

    void pivot(int prow, int pcol) {
        const double pv = at(prow, pcol);
        const double inv = 1.0 / pv;
        for (int j = 0; j <= ncols; ++j) at(prow, j) *= inv;
        at(prow, pcol) = 1.0;
        for (int i = 0; i < rows; ++i) {
            if (i == prow) continue;
            const double f = at(i, pcol);
            if (f == 0.0) continue;
            for (int j = 0; j <= ncols; ++j) at(i, j) -= f * at(prow, j);
            at(i, pcol) = 0.0;
        }
        for (auto *cost : {&cost1, &cost2}) {
            const double f = (*cost)[pcol];
            if (f == 0.0) continue;
            for (int j = 0; j <= ncols; ++j) (*cost)[j] -= f * at(prow, j);
            (*cost)[pcol] = 0.0;
        }
        // An artificial that leaves the basis never comes back.
        if (basis[prow] >= nstruct) eligible[basis[prow]] = 0;
        basis[prow] = pcol;
    }
};

// Returns entering column or -1 when the active cost row is optimal.
int choose_entering(const Tableau &tab, const std::vector<double> &cost,
                    bool bland) {
    int best = -1;
    double best_cost = -kCostTol;
    for (int j = 0; j < tab.ncols; ++j) {
        if (!tab.eligible[j]) continue;
        const double cj = cost[j];
        if (cj < -kCostTol) {
            if (bland) return j;
            if (cj < best_cost) {
                best_cost = cj;
                best = j;
            }
        }
    }
    return best;
}

// Min-ratio test; ties broken by lowest basic-variable index (the Bland
// convention, harmless under Dantzig pricing too). Returns -1 if the
// column is unbounded.
int choose_leaving(Tableau &tab, int pcol) {
    int row = -1;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < tab.rows; ++i) {
        const double aij = tab.at(i, pcol);
        if (aij > kPivotTol) {
            const double ratio = tab.at(i, tab.rhs()) / aij;
            if (ratio < best - 1e-12 ||
                (ratio < best + 1e-12 && row >= 0 &&
                 tab.basis[i] < tab.basis[row])) {
                best = std::min(best, ratio);
                row = i;
            }
        }
    }
    return row;
}

// Runs simplex iterations against the given cost row.
Status iterate(Tableau &tab, std::vector<double> &cost, int max_iters,
               int bland_after, int &iters) {
    for (;;) {
        if (iters >= max_iters) return Status::IterationLimit;
        const bool bland = iters >= bland_after;
        const int pcol = choose_entering(tab, cost, bland);
        if (pcol < 0) return Status::Optimal;
        const int prow = choose_leaving(tab, pcol);
        if (prow < 0) return Status::Unbounded;
        tab.pivot(prow, pcol);
        ++iters;
    }
}

} // namespace

Solution solve(const Problem &p, int max_iters, int bland_after) {
    if (p.rows <= 0 || p.cols <= 0 ||
        p.a.size() != static_cast<std::size_t>(p.rows) * p.cols ||
        p.b.size() != static_cast<std::size_t>(p.rows) ||
        p.c.size() != static_cast<std::size_t>(p.cols)) {
        throw std::invalid_argument("inconsistent LP dimensions");
    }

    Tableau tab;
    tab.rows = p.rows;
    tab.nstruct = p.cols;
    tab.ncols = p.cols + p.rows; // one artificial per row
    tab.t.assign(static_cast<std::size_t>(tab.rows) * (tab.ncols + 1), 0.0);
    tab.basis.resize(tab.rows);
    tab.eligible.assign(tab.ncols, 1);

    for (int i = 0; i < tab.rows; ++i) {
        const double sign = (p.b[i] < 0.0) ? -1.0 : 1.0;
        for (int j = 0; j < p.cols; ++j) tab.at(i, j) = sign * p.at(i, j);
        tab.at(i, tab.rhs()) = sign * p.b[i];
        tab.at(i, p.cols + i) = 1.0;
        tab.basis[i] = p.cols + i;
    }

    // Phase-1 reduced costs: artificials cost 1 and form the basis, so the
    // reduced cost of column j is -sum_i A[i][j].
    tab.cost1.assign(tab.ncols + 1, 0.0);
    for (int j = 0; j < tab.nstruct; ++j) {
        double s = 0.0;
        for (int i = 0; i < tab.rows; ++i) s += tab.at(i, j);
        tab.cost1[j] = -s;
    }
    {
        double s = 0.0;
        for (int i = 0; i < tab.rows; ++i) s += tab.at(i, tab.rhs());
        tab.cost1[tab.rhs()] = -s; // negative of phase-1 objective value
    }
    tab.cost2.assign(tab.ncols + 1, 0.0);
    for (int j = 0; j < tab.nstruct; ++j) tab.cost2[j] = p.c[j];

    Solution sol;
    int iters = 0;

    const Status st1 = iterate(tab, tab.cost1, max_iters, bland_after, iters);
    if (st1 == Status::IterationLimit) {
        sol.status = st1;
        sol.iterations = iters;
        return sol;
    }
    // Phase 1 is always bounded below by 0.
    const double phase1 = -tab.cost1[tab.rhs()];
    sol.infeasibility = std::max(0.0, phase1);
    if (phase1 > kFeasTol) {
        sol.status = Status::Infeasible;
        sol.iterations = iters;
        return sol;
    }

    // Retire artificial columns; pivot basic ones out where a structural
    // column is available (rows left without one are redundant).
    for (int j = tab.nstruct; j < tab.ncols; ++j) tab.eligible[j] = 0;
    for (int i = 0; i < tab.rows; ++i) {
        if (tab.basis[i] < tab.nstruct) continue;
        int pcol = -1;
        for (int j = 0; j < tab.nstruct; ++j) {
            if (std::abs(tab.at(i, j)) > kPivotTol) {
                pcol = j;
                break;
            }
        }
        if (pcol >= 0) tab.pivot(i, pcol);
    }

    const Status st2 = iterate(tab, tab.cost2, max_iters, bland_after, iters);
    sol.status = st2;
    sol.iterations = iters;
    if (st2 != Status::Optimal) return sol;

    sol.x.assign(p.cols, 0.0);
    for (int i = 0; i < tab.rows; ++i) {
        if (tab.basis[i] < p.cols) {
            sol.x[tab.basis[i]] = tab.at(i, tab.rhs());
        }
    }
    for (double &v : sol.x) {
        if (v < 0.0 && v > -kFeasTol) v = 0.0; // rounding guard
    }

    double obj = 0.0;
    for (int j = 0; j < p.cols; ++j) obj += p.c[j] * sol.x[j];
    sol.objective = obj;

    double res = 0.0;
    for (int i = 0; i < p.rows; ++i) {
        double ax = 0.0;
        for (int j = 0; j < p.cols; ++j) ax += p.at(i, j) * sol.x[j];
        res = std::max(res, std::abs(ax - p.b[i]));
    }
    sol.residual = res;
    return sol;
}

} // namespace steering::lp
