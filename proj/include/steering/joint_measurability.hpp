#pragma once

#include <cstdint>
#include <span>
#include <utility>

#include "steering/quantum.hpp"

namespace steering {

/// Largest sharpness at which the unsharp pair (m,η), (n,η) stays jointly
/// measurable: 2 / (|m+n| + |m−n|). Equals 1 for parallel directions,
/// 1/√2 for orthogonal ones. Inputs must be unit vectors.
double eta_max(BlochVector3 m, BlochVector3 n);

/// Four-outcome parent POVM whose marginals reproduce the two unsharp
/// effect pairs. Outcome index 0 ↦ +1, 1 ↦ −1.
struct MotherPovm {
    Matrix2 effect[2][2]; // [a1 index][a2 index]
    double gamma = 0.0;   // correlation parameter used in the construction

    const Matrix2 &effect_for(int a1, int a2) const;
};

/// G[a1][a2] = ¼[(1 + a1·a2·γ) I + η(a1 m + a2 n)·σ] with γ the midpoint
/// of the feasible interval [η|m+n| − 1, 1 − η|m−n|]. Throws
/// InfeasibleConstruction when η exceeds eta_max(m,n) beyond 1e-12.
MotherPovm mother_povm(BlochVector3 m, BlochVector3 n, double eta);

/// Pairwise joint-measurability summary for a direction pair.
struct JmReport {
    double eta_max = 1.0;
    double gamma = 0.0; // construction parameter at η = eta_max

    bool jointly_measurable_at(double eta) const {
        return eta <= eta_max + 1e-12;
    }
};

JmReport jm_report(BlochVector3 m, BlochVector3 n);

/// Minimum pairwise threshold over an explicit list of direction pairs.
double min_eta_max_over(
    std::span<const std::pair<BlochVector3, BlochVector3>> pairs);

/// Minimum of eta_max over `samples` seeded-random unit pairs plus the
/// deterministic orthogonal pair (x̂, ẑ). Converges to 1/√2.
double global_eta_opt(int samples, std::uint64_t seed);

} // namespace steering
