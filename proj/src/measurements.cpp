#include "steering/measurements.hpp"

#include <cmath>
#include <stdexcept>

#include "steering/rng.hpp"

namespace steering {

DichotomicObservable::DichotomicObservable(BlochVector3 direction, double eta)
    : direction_(direction), eta_(eta) {
    if (std::abs(norm(direction) - 1.0) > kUnitTol) {
        throw std::invalid_argument("observable direction must be a unit vector");
    }
    if (!(eta > 0.0 && eta <= 1.0)) {
        throw std::invalid_argument("sharpness eta must lie in (0,1]");
    }
}

EffectPair effects(const DichotomicObservable &obs) {
    const Matrix2 smeared = obs.eta() * pauli_dot(obs.direction());
    return {0.5 * (identity2() + smeared), 0.5 * (identity2() - smeared)};
}

DichotomicObservable smear(const DichotomicObservable &obs, double eta) {
    if (!(eta > 0.0 && eta <= 1.0)) {
        throw std::invalid_argument("smearing eta must lie in (0,1]");
    }
    return DichotomicObservable(obs.direction(), obs.eta() * eta);
}

MubPair::MubPair(BlochVector3 c, BlochVector3 d) : c_(c), d_(d) {
    if (std::abs(norm(c) - 1.0) > kOrthoTol || std::abs(norm(d) - 1.0) > kOrthoTol) {
        throw std::invalid_argument("MUB directions must be unit vectors");
    }
    if (std::abs(dot(c, d)) > kOrthoTol) {
        throw std::invalid_argument("MUB directions must be orthogonal");
    }
}

MubPair MubPair::orthonormalized(BlochVector3 c, BlochVector3 d) {
    const BlochVector3 cu = normalized(c);
    const BlochVector3 dperp = d - dot(d, cu) * cu;
    MubPair out;
    out.c_ = cu;
    out.d_ = normalized(dperp); // throws if d is (anti)parallel to c
    return out;
}

BlochVector3 MubPair::direction(int y) const {
    if (y == 1) return c_;
    if (y == 2) return d_;
    throw std::invalid_argument("Bob setting must be 1 or 2");
}

const DichotomicObservable &MeasurementScenario::alice(int x) const {
    if (x == 1) return alice1;
    if (x == 2) return alice2;
    throw std::invalid_argument("Alice setting must be 1 or 2");
}

namespace {

BlochVector3 random_unit(Rng &rng) {
    // z uniform in [-1,1], azimuth uniform: exact uniform measure on S^2.
    const double z = rng.uniform(-1.0, 1.0);
    const double phi = rng.uniform(0.0, 2.0 * M_PI);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    return {r * std::cos(phi), r * std::sin(phi), z};
}

} // namespace

MeasurementScenario random_scenario(std::uint64_t seed) {
    Rng rng(seed);
    return random_scenario(rng);
}

MeasurementScenario random_scenario(Rng &rng) {
    const BlochVector3 m1 = random_unit(rng);
    const BlochVector3 m2 = random_unit(rng);
    // Gram–Schmidt on two Gaussian vectors gives a uniformly random frame.
    BlochVector3 g1{rng.gaussian(), rng.gaussian(), rng.gaussian()};
    BlochVector3 g2{rng.gaussian(), rng.gaussian(), rng.gaussian()};
    BlochVector3 c = normalized(g1);
    BlochVector3 d = g2 - dot(g2, c) * c;
    while (norm(d) < 1e-8) { // essentially colinear draw; retry g2
        g2 = {rng.gaussian(), rng.gaussian(), rng.gaussian()};
        d = g2 - dot(g2, c) * c;
    }
    return {DichotomicObservable(m1), DichotomicObservable(m2),
            MubPair(c, normalized(d))};
}

} // namespace steering
