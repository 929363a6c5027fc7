#pragma once

#include <cstdint>

#include "steering/quantum.hpp"

namespace steering {

/// A ±1-valued qubit observable η m·σ: unit Bloch direction m plus
/// sharpness η in (0,1]. η = 1 is projective.
class DichotomicObservable {
  public:
    static constexpr double kUnitTol = 1e-9;

    DichotomicObservable(BlochVector3 direction, double eta = 1.0);

    BlochVector3 direction() const { return direction_; }
    double eta() const { return eta_; }

  private:
    BlochVector3 direction_;
    double eta_;
};

/// POVM effects for the ± outcomes. plus + minus = I; both PSD.
struct EffectPair {
    Matrix2 plus;
    Matrix2 minus;
};

/// plus = (I + η m·σ)/2, minus = (I − η m·σ)/2.
EffectPair effects(const DichotomicObservable &obs);

/// Compose an extra smearing: sharpness multiplies.
DichotomicObservable smear(const DichotomicObservable &obs, double eta);

/// Two orthonormal Bloch directions; the mutually unbiased pair for the
/// trusted side.
class MubPair {
  public:
    static constexpr double kOrthoTol = 1e-9;

    MubPair(BlochVector3 c, BlochVector3 d);

    /// Gram–Schmidt d against c, then normalize both. For user-supplied
    /// pairs that are only approximately orthonormal.
    static MubPair orthonormalized(BlochVector3 c, BlochVector3 d);

    BlochVector3 c() const { return c_; }
    BlochVector3 d() const { return d_; }
    BlochVector3 direction(int y) const; // y in {1,2}

  private:
    MubPair() = default;
    BlochVector3 c_, d_;
};

/// Alice's two observables plus Bob's mutually unbiased sharp pair.
struct MeasurementScenario {
    DichotomicObservable alice1;
    DichotomicObservable alice2;
    MubPair bob;

    const DichotomicObservable &alice(int x) const; // x in {1,2}
};

class Rng;

/// Deterministic random scenario: Alice directions uniform on the sphere,
/// Bob pair the first two axes of a random orthonormal frame, all sharp.
MeasurementScenario random_scenario(std::uint64_t seed);
MeasurementScenario random_scenario(Rng &rng);

} // namespace steering
