#include "steering/correlations.hpp"

#include <cmath>
#include <stdexcept>

namespace steering {

namespace {

constexpr double kEntryTol = 1e-9;

double trace_with(const Matrix4 &k, const Matrix4 &rho) {
    // Tr[K rho] without forming the product.
    Complex t(0, 0);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            t += k(i, j) * rho(j, i);
        }
    }
    return t.real();
}

const Matrix2 &pick(const EffectPair &e, int outcome) {
    if (outcome == +1) return e.plus;
    if (outcome == -1) return e.minus;
    throw std::invalid_argument("outcome must be -1 or +1");
}

} // namespace

double joint_probability(const TwoQubitState &state,
                         const MeasurementScenario &scenario, int x, int y,
                         int a, int b) {
    const EffectPair ea = effects(scenario.alice(x));
    const EffectPair fb = effects(DichotomicObservable(scenario.bob.direction(y)));
    return trace_with(kron(pick(ea, a), pick(fb, b)), state.rho());
}

CorrelationTable correlation_table(const TwoQubitState &state,
                                   const MeasurementScenario &scenario) {
    CorrelationTable t;
    const std::array<EffectPair, 2> ea = {effects(scenario.alice(1)),
                                          effects(scenario.alice(2))};
    const std::array<EffectPair, 2> fb = {
        effects(DichotomicObservable(scenario.bob.c())),
        effects(DichotomicObservable(scenario.bob.d()))};

    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            double corr = 0.0;
            double amarg = 0.0;
            double bmarg = 0.0;
            for (int a : {+1, -1}) {
                for (int b : {+1, -1}) {
                    const double p = trace_with(
                        kron(pick(ea[x], a), pick(fb[y], b)), state.rho());
                    corr += a * b * p;
                    amarg += a * p;
                    bmarg += b * p;
                }
            }
            t.E[x][y] = corr;
            if (y == 0) t.alice_marg[x] = amarg; // setting-independent of y
            if (x == 0) t.bob_marg[y] = bmarg;
        }
    }

    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            if (std::abs(t.E[x][y]) > 1.0 + kEntryTol) {
                throw std::domain_error("correlator out of [-1,1]");
            }
        }
    }
    return t;
}

SteeringValue steering_value(const CorrelationTable &t) {
    const double sum1 = t.E[0][0] + t.E[1][0];
    const double sum2 = t.E[0][1] + t.E[1][1];
    const double dif1 = t.E[0][0] - t.E[1][0];
    const double dif2 = t.E[0][1] - t.E[1][1];
    return {std::sqrt(sum1 * sum1 + sum2 * sum2) +
            std::sqrt(dif1 * dif1 + dif2 * dif2)};
}

double chsh_value(const CorrelationTable &t) {
    const double e11 = t.E[0][0], e12 = t.E[0][1];
    const double e21 = t.E[1][0], e22 = t.E[1][1];
    double best = 0.0;
    best = std::max(best, std::abs(-e11 + e12 + e21 + e22));
    best = std::max(best, std::abs(e11 - e12 + e21 + e22));
    best = std::max(best, std::abs(e11 + e12 - e21 + e22));
    best = std::max(best, std::abs(e11 + e12 + e21 - e22));
    return best;
}

} // namespace steering
