#include "steering/lhs.hpp"

#include <cmath>
#include <stdexcept>

#include "steering/errors.hpp"
#include "steering/rng.hpp"
#include "steering/simplex.hpp"

namespace steering {

namespace {

constexpr double kPsdTol = 1e-12;
constexpr double kSignalTol = 1e-10;
constexpr double kTraceTol = 1e-10;
constexpr double kEntryTol = 1e-9;
constexpr double kResidualTol = 1e-9;
constexpr double kMemberTol = 1e-9;
constexpr double kVisibilityCap = 1e3;

void validate_assemblage(const Assemblage &as) {
    for (int x = 0; x < 2; ++x) {
        Matrix2 total = as.sigma[0][x] + as.sigma[1][x];
        if (std::abs(total.trace().real() - 1.0) > kTraceTol) {
            throw std::logic_error("assemblage trace per setting drifted from 1");
        }
        for (int a = 0; a < 2; ++a) {
            if (!is_hermitian(as.sigma[a][x], kPsdTol) ||
                min_eigenvalue(as.sigma[a][x]) < -kPsdTol) {
                throw std::logic_error("assemblage element not PSD");
            }
        }
    }
    Matrix2 diff =
        (as.sigma[0][0] + as.sigma[1][0]) - (as.sigma[0][1] + as.sigma[1][1]);
    if (diff.cwiseAbs().maxCoeff() > kSignalTol) {
        throw std::logic_error("assemblage signals between settings");
    }
}

} // namespace

const Matrix2 &Assemblage::conditional(int a, int x) const {
    if ((a != 1 && a != -1) || (x != 1 && x != 2)) {
        throw std::invalid_argument("outcome must be +-1 and setting 1 or 2");
    }
    return sigma[a == 1 ? 0 : 1][x - 1];
}

Assemblage assemblage_from_state(const TwoQubitState &state,
                                 const DichotomicObservable &alice1,
                                 const DichotomicObservable &alice2) {
    Assemblage as;
    const DichotomicObservable *obs[2] = {&alice1, &alice2};
    for (int x = 0; x < 2; ++x) {
        const EffectPair pair = effects(*obs[x]);
        const Matrix2 *eff[2] = {&pair.plus, &pair.minus};
        for (int a = 0; a < 2; ++a) {
            const Matrix4 weighted = kron(*eff[a], identity2()) * state.rho();
            as.sigma[a][x] = partial_trace_alice(weighted);
        }
    }
    validate_assemblage(as);
    return as;
}

std::array<double, 4> LhsVertex::correlators() const {
    return {a1 * beta1, a1 * beta2, a2 * beta1, a2 * beta2};
}

std::vector<LhsVertex> lhs_vertices(int ngon) {
    if (ngon < 3) {
        throw std::invalid_argument("polygon needs at least 3 vertices");
    }
    static constexpr int kSigns[4][2] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    std::vector<LhsVertex> out;
    out.reserve(4 * static_cast<std::size_t>(ngon));
    for (const auto &s : kSigns) {
        for (int k = 0; k < ngon; ++k) {
            const double angle = 2.0 * M_PI * k / ngon;
            out.push_back({s[0], s[1], std::cos(angle), std::sin(angle)});
        }
    }
    return out;
}

MembershipResult lhs_membership(const std::array<std::array<double, 2>, 2> &e,
                                int ngon) {
    if (ngon < 8) {
        throw std::invalid_argument("membership test requires ngon >= 8");
    }
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            if (!(std::abs(e[x][y]) <= 1.0 + kEntryTol)) {
                throw std::invalid_argument(
                    "correlator entries must lie in [-1, 1]");
            }
        }
    }

    const std::vector<LhsVertex> verts = lhs_vertices(ngon);
    const int nv = static_cast<int>(verts.size());
    const double target[4] = {e[0][0], e[0][1], e[1][0], e[1][1]};

    // Visibility program: maximize t subject to
    //   sum_k w_k v_k = t * E,  sum_k w_k = 1,  t + slack = cap,  all vars >= 0.
    // Always feasible (w uniform over one strategy's polygon gives the
    // origin), so t_max >= 0 exists and membership is t_max >= 1.
    lp::Problem p;
    p.rows = 6;
    p.cols = nv + 2;
    p.a.assign(static_cast<std::size_t>(p.rows) * p.cols, 0.0);
    p.b.assign(p.rows, 0.0);
    p.c.assign(p.cols, 0.0);
    const int tcol = nv;
    const int scol = nv + 1;
    for (int k = 0; k < nv; ++k) {
        const std::array<double, 4> v = verts[k].correlators();
        for (int r = 0; r < 4; ++r) {
            p.at(r, k) = v[r];
        }
        p.at(4, k) = 1.0;
    }
    for (int r = 0; r < 4; ++r) {
        p.at(r, tcol) = -target[r];
    }
    p.at(5, tcol) = 1.0;
    p.at(5, scol) = 1.0;
    p.b[4] = 1.0;
    p.b[5] = kVisibilityCap;
    p.c[tcol] = -1.0;

    const lp::Solution sol = lp::solve(p);
    if (sol.status != lp::Status::Optimal) {
        throw SolverFailure("membership LP did not reach an optimum");
    }
    if (sol.residual > kResidualTol) {
        throw SolverFailure("membership LP residual exceeds tolerance");
    }

    const double tmax = sol.x[tcol];
    MembershipResult result;
    result.margin = tmax - 1.0;
    result.member = tmax >= 1.0 - kMemberTol;
    if (result.member) {
        // Rescale the t_max representation back to visibility 1 by mixing
        // with the origin (uniform polygon weights under one strategy).
        const double scale = 1.0 / std::max(tmax, 1.0);
        const double blend = 1.0 - scale;
        result.weights.assign(static_cast<std::size_t>(nv), 0.0);
        for (int k = 0; k < nv; ++k) {
            result.weights[k] = scale * sol.x[k];
        }
        for (int k = 0; k < ngon; ++k) {
            result.weights[k] += blend / ngon;
        }
    }
    return result;
}

MembershipResult lhs_membership(const CorrelationTable &table, int ngon) {
    return lhs_membership(table.E, ngon);
}

CrossValidationReport cross_validate(int samples, std::uint64_t seed,
                                     int ngon) {
    if (ngon < 64) {
        throw std::invalid_argument("cross validation requires ngon >= 64");
    }
    if (samples < 0) {
        throw std::invalid_argument("sample count must be nonnegative");
    }
    const double deep_bound = 2.0 * std::cos(M_PI / ngon);
    CrossValidationReport report;
    report.samples = samples;
    for (int i = 0; i < samples; ++i) {
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(i)));
        std::array<std::array<double, 2>, 2> e{};
        if (i % 2 == 0) {
            for (auto &row : e) {
                for (double &entry : row) {
                    entry = rng.uniform(-1.0, 1.0);
                }
            }
        } else {
            const TwoQubitState state = (i % 4 == 1)
                                            ? random_pure_state(rng)
                                            : random_mixed_state(rng);
            e = correlation_table(state, random_scenario(rng)).E;
        }
        CorrelationTable table;
        table.E = e;
        const double s = steering_value(table).value;
        const bool member = lhs_membership(e, ngon).member;
        report.members += member ? 1 : 0;
        report.deep_members += (s <= deep_bound) ? 1 : 0;
        if (member && s > 2.0 + 1e-8) {
            report.counterexamples.push_back({i, e, s, member, 1});
        }
        if (s <= deep_bound && !member) {
            report.counterexamples.push_back({i, e, s, member, 2});
        }
    }
    return report;
}

} // namespace steering
