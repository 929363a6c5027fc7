#include "steering/joint_measurability.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "steering/errors.hpp"
#include "steering/rng.hpp"

namespace steering {

namespace {

constexpr double kUnitTol = 1e-9;
constexpr double kEtaSlack = 1e-12;

void require_unit(BlochVector3 v, const char *name) {
    if (std::abs(norm(v) - 1.0) > kUnitTol) {
        throw std::invalid_argument(std::string(name) + " must be a unit vector");
    }
}

} // namespace

double eta_max(BlochVector3 m, BlochVector3 n) {
    require_unit(m, "m");
    require_unit(n, "n");
    return 2.0 / (norm(m + n) + norm(m - n));
}

const Matrix2 &MotherPovm::effect_for(int a1, int a2) const {
    if ((a1 != 1 && a1 != -1) || (a2 != 1 && a2 != -1)) {
        throw std::invalid_argument("outcomes must be -1 or +1");
    }
    return effect[a1 == 1 ? 0 : 1][a2 == 1 ? 0 : 1];
}

MotherPovm mother_povm(BlochVector3 m, BlochVector3 n, double eta) {
    require_unit(m, "m");
    require_unit(n, "n");
    if (!(eta > 0.0 && eta <= 1.0)) {
        throw std::invalid_argument("eta must lie in (0,1]");
    }
    // Positivity of all four effects is equivalent to
    //   η|m+n| ≤ 1 + γ   and   η|m−n| ≤ 1 − γ,
    // i.e. γ in [η|m+n| − 1, 1 − η|m−n|]; the interval is nonempty exactly
    // when η ≤ 2/(|m+n| + |m−n|).
    const double lo = eta * norm(m + n) - 1.0;
    const double hi = 1.0 - eta * norm(m - n);
    if (lo > hi + kEtaSlack) {
        throw InfeasibleConstruction(
            "no positive parent POVM: eta exceeds the joint-measurability "
            "threshold for this pair");
    }
    MotherPovm out;
    out.gamma = std::clamp(0.5 * (lo + hi), -1.0, 1.0);
    for (int i = 0; i < 2; ++i) {
        const double a1 = (i == 0) ? 1.0 : -1.0;
        for (int j = 0; j < 2; ++j) {
            const double a2 = (j == 0) ? 1.0 : -1.0;
            const BlochVector3 dir = eta * (a1 * m + a2 * n);
            out.effect[i][j] =
                0.25 * ((1.0 + a1 * a2 * out.gamma) * identity2() + pauli_dot(dir));
        }
    }
    return out;
}

JmReport jm_report(BlochVector3 m, BlochVector3 n) {
    JmReport r;
    r.eta_max = eta_max(m, n);
    r.gamma = mother_povm(m, n, r.eta_max).gamma;
    return r;
}

double min_eta_max_over(
    std::span<const std::pair<BlochVector3, BlochVector3>> pairs) {
    if (pairs.empty()) {
        throw std::invalid_argument("pair list must be nonempty");
    }
    double best = 1.0;
    for (const auto &[m, n] : pairs) {
        best = std::min(best, eta_max(m, n));
    }
    return best;
}

double global_eta_opt(int samples, std::uint64_t seed) {
    if (samples < 1) {
        throw std::invalid_argument("samples must be >= 1");
    }
    std::vector<std::pair<BlochVector3, BlochVector3>> pairs;
    pairs.reserve(static_cast<std::size_t>(samples) + 1);
    // The known worst case is any orthogonal pair; include one so the scan
    // is an upper-bound certificate even for tiny sample counts.
    pairs.emplace_back(BlochVector3{1, 0, 0}, BlochVector3{0, 0, 1});
    for (int i = 0; i < samples; ++i) {
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(i)));
        const auto draw = [&rng]() -> BlochVector3 {
            const double z = rng.uniform(-1.0, 1.0);
            const double phi = rng.uniform(0.0, 2.0 * M_PI);
            const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
            return {r * std::cos(phi), r * std::sin(phi), z};
        };
        const BlochVector3 m = draw();
        const BlochVector3 n = draw();
        pairs.emplace_back(m, n);
    }
    return min_eta_max_over(pairs);
}

} // namespace steering
