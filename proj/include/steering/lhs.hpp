#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "steering/correlations.hpp"
#include "steering/measurements.hpp"
#include "steering/quantum.hpp"

namespace steering {

/// Unnormalized conditional states of Bob given Alice's outcome and setting:
/// sigma[a][x] = Tr_A[(E_{a|x} ⊗ I) ρ]. First index 0 is outcome +1, second
/// index 0 is setting 1.
struct Assemblage {
    std::array<std::array<Matrix2, 2>, 2> sigma;

    /// a in {-1,+1}, x in {1,2}.
    const Matrix2 &conditional(int a, int x) const;
};

Assemblage assemblage_from_state(const TwoQubitState &state,
                                 const DichotomicObservable &alice1,
                                 const DichotomicObservable &alice2);

/// One deterministic local strategy: Alice answers (a1, a2) regardless of the
/// state, Bob's hidden state has Bloch projections (beta1, beta2) onto his
/// two measurement axes.
struct LhsVertex {
    int a1 = 1;
    int a2 = 1;
    double beta1 = 0.0;
    double beta2 = 0.0;

    /// The four correlators (E11, E12, E21, E22) this strategy produces.
    std::array<double, 4> correlators() const;
};

/// 4*ngon vertices: all four Alice outcome assignments crossed with the
/// inscribed regular ngon of the unit disk (vertex k at angle 2*pi*k/ngon).
/// Ordering: strategy-major, (+,+), (+,-), (-,+), (-,-), then polygon index.
std::vector<LhsVertex> lhs_vertices(int ngon);

struct MembershipResult {
    bool member = false;
    /// Convex weights over lhs_vertices(ngon) reproducing the table when
    /// member; empty otherwise.
    std::vector<double> weights;
    /// Visibility slack: largest t with t*E inside the polytope, minus 1.
    /// Nonnegative for members, negative for non-members. Capped above.
    double margin = 0.0;
};

/// Exact membership test of the four correlators in the polytope spanned by
/// lhs_vertices(ngon), via a small linear program. ngon >= 8; entries within
/// [-1, 1]. Solver breakdown raises SolverFailure, never a verdict.
MembershipResult lhs_membership(const std::array<std::array<double, 2>, 2> &e,
                                int ngon);
MembershipResult lhs_membership(const CorrelationTable &table, int ngon);

struct CrossValidationCase {
    int index = 0;
    std::array<std::array<double, 2>, 2> e{{{0.0, 0.0}, {0.0, 0.0}}};
    double s = 0.0;
    bool member = false;
    /// 1: member but S > 2 + 1e-8. 2: S <= 2cos(pi/ngon) but non-member.
    int failed_implication = 0;
};

struct CrossValidationReport {
    int samples = 0;
    int members = 0;
    int deep_members = 0; // cases with S <= 2cos(pi/ngon)
    std::vector<CrossValidationCase> counterexamples;

    bool ok() const { return counterexamples.empty(); }
};

/// Random correlator tables (uniform in [-1,1]^4 on even indices, quantum
/// tables from random states/scenarios on odd ones) checked against the
/// polygon sandwich: membership implies S <= 2 + 1e-8, and
/// S <= 2cos(pi/ngon) implies membership. ngon >= 64.
CrossValidationReport cross_validate(int samples, std::uint64_t seed,
                                     int ngon);

} // namespace steering
