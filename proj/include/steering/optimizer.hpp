#pragma once

#include <cstdint>
#include <vector>

#include "steering/correlations.hpp"
#include "steering/measurements.hpp"
#include "steering/quantum.hpp"

namespace steering {

struct OptConfig {
    int restarts = 64;
    std::uint64_t seed = 42;
    double tol = 1e-10; // convergence tolerance on S
    int max_iters = 2000;
};

struct OptResult {
    SteeringValue s_opt;
    MeasurementScenario scenario;
    int restarts_used = 0;
    /// True when the final refinement pass terminated by tolerance rather
    /// than the iteration cap. Best-so-far is returned either way.
    bool converged = false;
};

struct SweepRow {
    double param = 0.0;
    double s_opt = 0.0;
    MeasurementScenario scenario;
    bool converged = false;
};

/// Maximize S over sharp measurement directions: Alice's two axes free on
/// the sphere, Bob's orthonormal pair parametrized by three frame angles so
/// the orthogonality constraint holds by construction. Multistart
/// Nelder-Mead over the 7 angles, restart seeds derived from (seed, index),
/// followed by a small-step refinement of the winner; deterministic for a
/// fixed config. The reported value is recomputed from the returned scenario
/// through the correlation pipeline.
OptResult optimize(const TwoQubitState &state, const OptConfig &cfg = {});

/// One optimize() per grid value over pure Schmidt states psi = a|00> +
/// sqrt(1-a^2)|11>. Values must lie in [0,1]; row order follows the input.
std::vector<SweepRow> sweep_pure(const std::vector<double> &a_values,
                                 const OptConfig &cfg = {});

/// One optimize() per grid value over Werner states. Values in [0,1].
std::vector<SweepRow> sweep_werner(const std::vector<double> &w_values,
                                   const OptConfig &cfg = {});

/// Evenly spaced grid including both endpoints; points >= 2.
std::vector<double> uniform_grid(double lo, double hi, int points);

/// Measurement axes for the 7-angle vector used by the optimizer:
/// (theta1, phi1, theta2, phi2, theta_c, phi_c, psi). Exposed for the
/// exhaustive-grid cross-checks in the test suite.
MeasurementScenario scenario_from_angles(const double angles[7]);

} // namespace steering
