#include "steering/optimizer.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "steering/rng.hpp"

namespace steering {

namespace {

using Angles = std::array<double, 7>;

struct Frame {
    BlochVector3 m1, m2, c, d;
};

BlochVector3 sphere_point(double theta, double phi) {
    const double st = std::sin(theta);
    return {st * std::cos(phi), st * std::sin(phi), std::cos(theta)};
}

Frame frame_from_angles(const Angles &x) {
    Frame f;
    f.m1 = sphere_point(x[0], x[1]);
    f.m2 = sphere_point(x[2], x[3]);
    const double tc = x[4], pc = x[5], psi = x[6];
    f.c = sphere_point(tc, pc);
    // Tangent basis at c; orthonormal for every (tc, pc) including the poles.
    const BlochVector3 e1{std::cos(tc) * std::cos(pc),
                          std::cos(tc) * std::sin(pc), -std::sin(tc)};
    const BlochVector3 e2{-std::sin(pc), std::cos(pc), 0.0};
    f.d = std::cos(psi) * e1 + std::sin(psi) * e2;
    return f;
}

/// Pauli correlation matrix t[i][j] = Tr[rho sigma_i x sigma_j].
struct CorrMatrix {
    double t[3][3];

    BlochVector3 apply(const BlochVector3 &v) const { // t * v
        return {t[0][0] * v.x + t[0][1] * v.y + t[0][2] * v.z,
                t[1][0] * v.x + t[1][1] * v.y + t[1][2] * v.z,
                t[2][0] * v.x + t[2][1] * v.y + t[2][2] * v.z};
    }
    BlochVector3 apply_transposed(const BlochVector3 &v) const { // t^T * v
        return {t[0][0] * v.x + t[1][0] * v.y + t[2][0] * v.z,
                t[0][1] * v.x + t[1][1] * v.y + t[2][1] * v.z,
                t[0][2] * v.x + t[1][2] * v.y + t[2][2] * v.z};
    }
};

CorrMatrix corr_matrix(const TwoQubitState &state) {
    const Matrix2 sig[3] = {sigma_x(), sigma_y(), sigma_z()};
    CorrMatrix out;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const Matrix4 op = kron(sig[i], sig[j]);
            Complex tr = 0.0;
            for (int r = 0; r < 4; ++r) {
                for (int s = 0; s < 4; ++s) {
                    tr += op(r, s) * state.rho()(s, r);
                }
            }
            out.t[i][j] = tr.real();
        }
    }
    return out;
}

double steering_objective(const CorrMatrix &tm, const Angles &x) {
    const Frame f = frame_from_angles(x);
    const BlochVector3 u = tm.apply_transposed(f.m1 + f.m2);
    const BlochVector3 v = tm.apply_transposed(f.m1 - f.m2);
    const double s1 = std::sqrt(dot(u, f.c) * dot(u, f.c) +
                                dot(u, f.d) * dot(u, f.d));
    const double s2 = std::sqrt(dot(v, f.c) * dot(v, f.c) +
                                dot(v, f.d) * dot(v, f.d));
    return s1 + s2;
}

struct NmOutcome {
    Angles x;
    double value = 0.0; // S at x
    bool converged = false;
};

/// Nelder-Mead minimization of -S. Plain Lagarias coefficients; terminates
/// when the simplex value spread falls below tol.
NmOutcome nelder_mead(const CorrMatrix &tm, const Angles &start, double step,
                      double tol, int max_iters) {
    constexpr int n = 7;
    std::array<Angles, n + 1> pts;
    std::array<double, n + 1> f;
    pts[0] = start;
    for (int i = 0; i < n; ++i) {
        pts[i + 1] = start;
        pts[i + 1][i] += step;
    }
    for (int i = 0; i <= n; ++i) {
        f[i] = -steering_objective(tm, pts[i]);
    }

    std::array<int, n + 1> order;
    bool converged = false;
    for (int iter = 0; iter < max_iters; ++iter) {
        for (int i = 0; i <= n; ++i) {
            order[i] = i;
        }
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return f[a] < f[b]; });
        const int best = order[0], worst = order[n], second = order[n - 1];
        if (f[worst] - f[best] < tol) {
            converged = true;
            break;
        }

        Angles centroid{};
        for (int i = 0; i <= n; ++i) {
            if (i == worst) {
                continue;
            }
            for (int k = 0; k < n; ++k) {
                centroid[k] += pts[i][k];
            }
        }
        for (int k = 0; k < n; ++k) {
            centroid[k] /= n;
        }

        auto affine = [&](double coeff) {
            Angles p;
            for (int k = 0; k < n; ++k) {
                p[k] = centroid[k] + coeff * (pts[worst][k] - centroid[k]);
            }
            return p;
        };

        const Angles refl = affine(-1.0);
        const double f_refl = -steering_objective(tm, refl);
        if (f_refl < f[best]) {
            const Angles exp = affine(-2.0);
            const double f_exp = -steering_objective(tm, exp);
            if (f_exp < f_refl) {
                pts[worst] = exp;
                f[worst] = f_exp;
            } else {
                pts[worst] = refl;
                f[worst] = f_refl;
            }
            continue;
        }
        if (f_refl < f[second]) {
            pts[worst] = refl;
            f[worst] = f_refl;
            continue;
        }
        const bool outside = f_refl < f[worst];
        const Angles contr = affine(outside ? -0.5 : 0.5);
        const double f_contr = -steering_objective(tm, contr);
        if (f_contr < std::min(f_refl, f[worst])) {
            pts[worst] = contr;
            f[worst] = f_contr;
            continue;
        }
        for (int i = 0; i <= n; ++i) { // shrink toward the best point
            if (i == best) {
                continue;
            }
            for (int k = 0; k < n; ++k) {
                pts[i][k] = pts[best][k] + 0.5 * (pts[i][k] - pts[best][k]);
            }
            f[i] = -steering_objective(tm, pts[i]);
        }
    }

    int best = 0;
    for (int i = 1; i <= n; ++i) {
        if (f[i] < f[best]) {
            best = i;
        }
    }
    return {pts[best], -f[best], converged};
}

void validate_config(const OptConfig &cfg) {
    if (cfg.restarts < 1) {
        throw std::invalid_argument("restarts must be >= 1");
    }
    if (!(cfg.tol > 0.0)) {
        throw std::invalid_argument("tolerance must be positive");
    }
    if (cfg.max_iters < 1) {
        throw std::invalid_argument("iteration cap must be >= 1");
    }
}

} // namespace

MeasurementScenario scenario_from_angles(const double angles[7]) {
    Angles x;
    std::copy(angles, angles + 7, x.begin());
    const Frame f = frame_from_angles(x);
    return {DichotomicObservable(normalized(f.m1)),
            DichotomicObservable(normalized(f.m2)),
            MubPair(normalized(f.c), normalized(f.d))};
}

OptResult optimize(const TwoQubitState &state, const OptConfig &cfg) {
    validate_config(cfg);
    const CorrMatrix tm = corr_matrix(state);

    Angles best_x{};
    double best_value = -1.0;
    for (int r = 0; r < cfg.restarts; ++r) {
        Rng rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(r)));
        Angles start;
        for (int k = 0; k < 7; ++k) {
            const bool polar = (k == 0 || k == 2 || k == 4);
            start[k] = rng.uniform(0.0, polar ? M_PI : 2.0 * M_PI);
        }
        const NmOutcome run =
            nelder_mead(tm, start, 0.35, cfg.tol, cfg.max_iters);
        if (run.value > best_value) { // ties keep the earliest restart
            best_value = run.value;
            best_x = run.x;
        }
    }

    const NmOutcome polish =
        nelder_mead(tm, best_x, 0.05, cfg.tol, cfg.max_iters);
    if (polish.value > best_value) {
        best_value = polish.value;
        best_x = polish.x;
    }

    const MeasurementScenario scenario = scenario_from_angles(best_x.data());
    const SteeringValue s = steering_value(correlation_table(state, scenario));
    return {s, scenario, cfg.restarts, polish.converged};
}

std::vector<SweepRow> sweep_pure(const std::vector<double> &a_values,
                                 const OptConfig &cfg) {
    std::vector<SweepRow> rows;
    rows.reserve(a_values.size());
    for (const double a : a_values) {
        const OptResult r = optimize(TwoQubitState::pure_schmidt(a), cfg);
        rows.push_back({a, r.s_opt.value, r.scenario, r.converged});
    }
    return rows;
}

std::vector<SweepRow> sweep_werner(const std::vector<double> &w_values,
                                   const OptConfig &cfg) {
    std::vector<SweepRow> rows;
    rows.reserve(w_values.size());
    for (const double w : w_values) {
        const OptResult r = optimize(TwoQubitState::werner(w), cfg);
        rows.push_back({w, r.s_opt.value, r.scenario, r.converged});
    }
    return rows;
}

std::vector<double> uniform_grid(double lo, double hi, int points) {
    if (points < 2) {
        throw std::invalid_argument("grid needs at least 2 points");
    }
    std::vector<double> out(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) {
        out[i] = lo + (hi - lo) * i / (points - 1);
    }
    return out;
}

} // namespace steering
