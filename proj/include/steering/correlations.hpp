#pragma once

#include <array>

#include "steering/measurements.hpp"
#include "steering/quantum.hpp"

namespace steering {

/// The four correlators E[x][y] = <A_x B_y> plus one-party marginals for a
/// state/scenario pair. Indices are 0-based internally; settings in the
/// public operations are 1-based.
struct CorrelationTable {
    std::array<std::array<double, 2>, 2> E{{{0.0, 0.0}, {0.0, 0.0}}};
    std::array<double, 2> alice_marg{0.0, 0.0};
    std::array<double, 2> bob_marg{0.0, 0.0};
};

struct SteeringValue {
    double value = 0.0;
};

/// P(a,b|x,y) = Tr[(E_a ⊗ F_b) ρ] with Alice's (possibly unsharp) effect
/// and Bob's sharp effect. x,y in {1,2}; a,b in {-1,+1}.
double joint_probability(const TwoQubitState &state,
                         const MeasurementScenario &scenario, int x, int y,
                         int a, int b);

/// Correlators and marginals accumulated from the joint outcome
/// distributions of all four setting pairs.
CorrelationTable correlation_table(const TwoQubitState &state,
                                   const MeasurementScenario &scenario);

/// S = sqrt(<(A1+A2)B1>^2 + <(A1+A2)B2>^2)
///   + sqrt(<(A1-A2)B1>^2 + <(A1-A2)B2>^2).
/// Correlations admit a local hidden-variable / hidden-state description
/// in this two-setting scenario iff S <= 2; the quantum maximum is 2√2.
SteeringValue steering_value(const CorrelationTable &t);

/// CHSH value maximized over the four sign relabelings; comparison metric.
double chsh_value(const CorrelationTable &t);

} // namespace steering
