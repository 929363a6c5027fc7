#include "steering/cli.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <CLI11.hpp>
#include <json.hpp>

#include "steering/correlations.hpp"
#include "steering/errors.hpp"
#include "steering/joint_measurability.hpp"
#include "steering/lhs.hpp"
#include "steering/measurements.hpp"
#include "steering/optimizer.hpp"
#include "steering/rng.hpp"

namespace steering::cli {

namespace {

using nlohmann::ordered_json;

constexpr double kQuantumBound = 2.8284271247461903; // 2*sqrt(2)
constexpr double kBoundSlack = 1e-9;
constexpr double kOrthoWarn = 1e-9;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BoundViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

double round12(double x) {
    return std::strtod(fmt12(x).c_str(), nullptr);
}

ordered_json json_vec(const BlochVector3 &v) {
    return ordered_json::array({round12(v.x), round12(v.y), round12(v.z)});
}

double parse_double(const std::string &text, const std::string &what) {
    const char *begin = text.data();
    const char *end = begin + text.size();
    double value = 0.0;
    const auto res = std::from_chars(begin, end, value);
    if (res.ec != std::errc() || res.ptr != end) {
        throw std::invalid_argument(what + ": expected a number, got '" +
                                    text + "'");
    }
    return value;
}

std::vector<std::string> split(const std::string &text, char sep) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) {
        parts.push_back(item);
    }
    if (!text.empty() && text.back() == sep) {
        parts.emplace_back();
    }
    return parts;
}

BlochVector3 parse_vec3(const std::string &flag, const std::string &text) {
    const std::vector<std::string> parts = split(text, ',');
    if (parts.size() != 3) {
        throw std::invalid_argument(flag + ": expected x,y,z, got '" + text +
                                    "'");
    }
    return {parse_double(parts[0], flag), parse_double(parts[1], flag),
            parse_double(parts[2], flag)};
}

std::pair<double, double> parse_range(const std::string &text) {
    const std::vector<std::string> parts = split(text, ':');
    if (parts.size() != 2) {
        throw std::invalid_argument("--range: expected lo:hi, got '" + text +
                                    "'");
    }
    const double lo = parse_double(parts[0], "--range");
    const double hi = parse_double(parts[1], "--range");
    if (!(lo < hi)) {
        throw std::invalid_argument("--range: lo must be below hi");
    }
    return {lo, hi};
}

std::array<std::array<double, 2>, 2> parse_corr(const std::string &text) {
    const std::vector<std::string> parts = split(text, ',');
    if (parts.size() != 4) {
        throw std::invalid_argument(
            "--corr: expected e11,e12,e21,e22, got '" + text + "'");
    }
    std::array<std::array<double, 2>, 2> e{};
    for (int i = 0; i < 4; ++i) {
        e[i / 2][i % 2] = parse_double(parts[i], "--corr");
    }
    return e;
}

/// Explicit --out wins; otherwise the default file name lands in
/// STEER_OUT_DIR when that is set, the working directory when not.
std::filesystem::path resolve_out(const RunConfig &cfg,
                                  const std::string &default_name) {
    if (!cfg.out_path.empty()) {
        return cfg.out_path;
    }
    if (const char *dir = std::getenv("STEER_OUT_DIR")) {
        return std::filesystem::path(dir) / default_name;
    }
    return default_name;
}

TwoQubitState load_rho_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open state file '" + path + "'");
    }
    ordered_json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument("state file '" + path +
                                    "' is not valid JSON: " + e.what());
    }
    if (!j.contains("rho") || !j["rho"].is_array() || j["rho"].size() != 4) {
        throw std::invalid_argument(
            "state file must hold a 4x4 \"rho\" array of [re, im] pairs");
    }
    Matrix4 rho;
    for (int r = 0; r < 4; ++r) {
        const auto &row = j["rho"][r];
        if (!row.is_array() || row.size() != 4) {
            throw std::invalid_argument("state file rho row " +
                                        std::to_string(r) + " is not length 4");
        }
        for (int c = 0; c < 4; ++c) {
            const auto &cell = row[c];
            if (!cell.is_array() || cell.size() != 2 ||
                !cell[0].is_number() || !cell[1].is_number()) {
                throw std::invalid_argument(
                    "state file entries must be [re, im] pairs");
            }
            rho(r, c) = Complex(cell[0].get<double>(), cell[1].get<double>());
        }
    }
    return TwoQubitState::from_density_matrix(rho);
}

struct EvalSettings {
    MeasurementScenario scenario;
    bool reorthonormalized = false;
};

/// Common settings block for eval/lhs: four Bloch triples, Alice normalized,
/// Bob re-orthonormalized with a warning when needed.
EvalSettings settings_from_flags(const RunConfig &cfg, std::ostream &err) {
    if (cfg.a1.empty() || cfg.a2.empty() || cfg.b1.empty() ||
        cfg.b2.empty()) {
        throw std::invalid_argument(
            "measurement settings require --a1 --a2 --b1 --b2");
    }
    const BlochVector3 m1 = normalized(parse_vec3("--a1", cfg.a1));
    const BlochVector3 m2 = normalized(parse_vec3("--a2", cfg.a2));
    const BlochVector3 c = normalized(parse_vec3("--b1", cfg.b1));
    BlochVector3 d = normalized(parse_vec3("--b2", cfg.b2));
    bool fixed = false;
    if (std::abs(dot(c, d)) > kOrthoWarn) {
        err << "warning: Bob pair not orthogonal (c.d = " << fmt12(dot(c, d))
            << "); re-orthonormalizing the second direction\n";
        d = normalized(d - dot(d, c) * c);
        fixed = true;
    }
    return {MeasurementScenario{DichotomicObservable(m1),
                                DichotomicObservable(m2), MubPair(c, d)},
            fixed};
}

ordered_json json_scenario(const MeasurementScenario &s) {
    ordered_json j;
    j["m1"] = json_vec(s.alice1.direction());
    j["m2"] = json_vec(s.alice2.direction());
    j["c"] = json_vec(s.bob.direction(1));
    j["d"] = json_vec(s.bob.direction(2));
    return j;
}

ordered_json json_table(const CorrelationTable &t) {
    ordered_json j;
    j["E"] = ordered_json::array(
        {ordered_json::array({round12(t.E[0][0]), round12(t.E[0][1])}),
         ordered_json::array({round12(t.E[1][0]), round12(t.E[1][1])})});
    j["alice_marginals"] = ordered_json::array(
        {round12(t.alice_marg[0]), round12(t.alice_marg[1])});
    j["bob_marginals"] = ordered_json::array(
        {round12(t.bob_marg[0]), round12(t.bob_marg[1])});
    return j;
}

void emit(std::ostream &out, const ordered_json &j) {
    out << j.dump(2) << "\n";
}

std::string plot_script(const std::string &csv_name,
                        const std::string &png_name,
                        const std::string &xlabel) {
    std::ostringstream py;
    py << "#!/usr/bin/env python3\n"
       << "\"\"\"Plot the sweep next to this script: optimal steering value "
          "versus "
       << xlabel << ".\"\"\"\n"
       << "import csv\n"
       << "from pathlib import Path\n\n"
       << "import matplotlib\n\n"
       << "matplotlib.use(\"Agg\")\n"
       << "import matplotlib.pyplot as plt\n\n"
       << "here = Path(__file__).resolve().parent\n"
       << "with open(here / \"" << csv_name << "\", newline=\"\") as fh:\n"
       << "    rows = list(csv.DictReader(fh))\n"
       << "x = [float(r[\"param\"]) for r in rows]\n"
       << "y = [float(r[\"s_opt\"]) for r in rows]\n\n"
       << "fig, ax = plt.subplots(figsize=(6.0, 4.0))\n"
       << "ax.plot(x, y, lw=1.8, color=\"tab:blue\")\n"
       << "ax.axhline(2.0, color=\"gray\", ls=\"--\", lw=1.0, "
          "label=\"LHS bound\")\n"
       << "ax.axhline(2.0 * 2.0 ** 0.5, color=\"gray\", ls=\":\", lw=1.0, "
          "label=\"quantum bound\")\n"
       << "ax.set_xlabel(\"" << xlabel << "\")\n"
       << "ax.set_ylabel(\"optimal steering value\")\n"
       << "ax.legend(loc=\"best\")\n"
       << "fig.tight_layout()\n"
       << "fig.savefig(here / \"" << png_name << "\", dpi=160)\n";
    return py.str();
}

void require_state(const RunConfig &cfg) {
    if (cfg.state.empty()) {
        throw std::invalid_argument(cfg.command + " requires --state");
    }
}

} // namespace

StateSpec StateSpec::parse(const std::string &text) {
    if (text == "singlet") {
        return {Kind::Singlet, 0.0, {}};
    }
    if (text == "phiplus") {
        return {Kind::PhiPlus, 0.0, {}};
    }
    if (text.rfind("pure:a=", 0) == 0) {
        return {Kind::Pure, parse_double(text.substr(7), "--state pure"), {}};
    }
    if (text.rfind("werner:w=", 0) == 0) {
        return {Kind::Werner, parse_double(text.substr(9), "--state werner"),
                {}};
    }
    if (text.rfind("file:", 0) == 0) {
        std::string path = text.substr(5);
        if (path.empty()) {
            throw std::invalid_argument("--state file: requires a path");
        }
        return {Kind::File, 0.0, std::move(path)};
    }
    throw std::invalid_argument(
        "unrecognized state spec '" + text +
        "' (expected pure:a=V, werner:w=V, singlet, phiplus, file:PATH)");
}

TwoQubitState StateSpec::realize() const {
    switch (kind) {
    case Kind::Pure:
        return TwoQubitState::pure_schmidt(param);
    case Kind::Werner:
        return TwoQubitState::werner(param);
    case Kind::Singlet:
        return TwoQubitState::singlet();
    case Kind::PhiPlus:
        return TwoQubitState::phi_plus();
    case Kind::File:
        return load_rho_file(path);
    }
    throw std::logic_error("unhandled state kind");
}

std::string StateSpec::describe() const {
    switch (kind) {
    case Kind::Pure:
        return "pure:a=" + fmt12(param);
    case Kind::Werner:
        return "werner:w=" + fmt12(param);
    case Kind::Singlet:
        return "singlet";
    case Kind::PhiPlus:
        return "phiplus";
    case Kind::File:
        return "file:" + path;
    }
    return "?";
}

int cmd_eval(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    require_state(cfg);
    const StateSpec spec = StateSpec::parse(cfg.state);
    const TwoQubitState state = spec.realize();
    const EvalSettings settings = settings_from_flags(cfg, err);

    const CorrelationTable table = correlation_table(state, settings.scenario);
    const double s = steering_value(table).value;

    ordered_json j;
    j["state"] = spec.describe();
    j["settings"] = json_scenario(settings.scenario);
    j["reorthonormalized_bob"] = settings.reorthonormalized;
    j["table"] = json_table(table);
    j["s"] = round12(s);
    j["chsh"] = round12(chsh_value(table));
    j["violated"] = s > 2.0;
    emit(out, j);
    return 0;
}

int cmd_optimize(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    (void)err;
    require_state(cfg);
    const StateSpec spec = StateSpec::parse(cfg.state);
    const TwoQubitState state = spec.realize();

    OptConfig opt;
    opt.restarts = cfg.restarts;
    opt.seed = cfg.seed;
    opt.tol = cfg.tol;
    const OptResult result = optimize(state, opt);

    ordered_json j;
    j["state"] = spec.describe();
    j["s_opt"] = round12(result.s_opt.value);
    j["violated"] = result.s_opt.value > 2.0;
    j["scenario"] = json_scenario(result.scenario);
    j["restarts_used"] = result.restarts_used;
    j["seed"] = cfg.seed;
    j["converged"] = result.converged;
    emit(out, j);
    return 0;
}

int cmd_sweep(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    (void)err;
    if (cfg.family != "pure" && cfg.family != "werner") {
        throw std::invalid_argument("sweep requires --family pure|werner");
    }
    if (cfg.format != "csv" && cfg.format != "json") {
        throw std::invalid_argument("--format must be csv or json");
    }
    double lo = 0.0, hi = 1.0;
    if (!cfg.range.empty()) {
        std::tie(lo, hi) = parse_range(cfg.range);
        if (lo < 0.0 || hi > 1.0) {
            throw std::invalid_argument("--range must stay within 0:1");
        }
    }

    OptConfig opt;
    opt.restarts = cfg.restarts;
    opt.seed = cfg.seed;
    opt.tol = cfg.tol;
    const std::vector<double> grid = uniform_grid(lo, hi, cfg.grid);
    const std::vector<SweepRow> rows = cfg.family == "pure"
                                           ? sweep_pure(grid, opt)
                                           : sweep_werner(grid, opt);

    const std::string default_name = "sweep_" + cfg.family + "." + cfg.format;
    const std::filesystem::path out_file = resolve_out(cfg, default_name);
    std::ofstream fh(out_file);
    if (!fh) {
        throw IoError("cannot write '" + out_file.string() + "'");
    }

    std::filesystem::path plot_file;
    if (cfg.format == "csv") {
        fh << "param,s_opt,m1x,m1y,m1z,m2x,m2y,m2z,cx,cy,cz,dx,dy,dz,"
              "converged\n";
        for (const SweepRow &row : rows) {
            const BlochVector3 m1 = row.scenario.alice1.direction();
            const BlochVector3 m2 = row.scenario.alice2.direction();
            const BlochVector3 c = row.scenario.bob.direction(1);
            const BlochVector3 d = row.scenario.bob.direction(2);
            fh << fmt12(row.param) << ',' << fmt12(row.s_opt) << ','
               << fmt12(m1.x) << ',' << fmt12(m1.y) << ',' << fmt12(m1.z)
               << ',' << fmt12(m2.x) << ',' << fmt12(m2.y) << ','
               << fmt12(m2.z) << ',' << fmt12(c.x) << ',' << fmt12(c.y) << ','
               << fmt12(c.z) << ',' << fmt12(d.x) << ',' << fmt12(d.y) << ','
               << fmt12(d.z) << ',' << (row.converged ? 1 : 0) << '\n';
        }
        const std::string stem = out_file.stem().string();
        plot_file = out_file.parent_path() / (stem + "_plot.py");
        std::ofstream ph(plot_file);
        if (!ph) {
            throw IoError("cannot write '" + plot_file.string() + "'");
        }
        ph << plot_script(out_file.filename().string(), stem + ".png",
                          cfg.family == "pure" ? "Schmidt coefficient a"
                                               : "Werner parameter w");
    } else {
        ordered_json arr = ordered_json::array();
        for (const SweepRow &row : rows) {
            ordered_json r;
            r["param"] = round12(row.param);
            r["s_opt"] = round12(row.s_opt);
            r["scenario"] = json_scenario(row.scenario);
            r["converged"] = row.converged;
            arr.push_back(std::move(r));
        }
        fh << arr.dump(2) << "\n";
    }
    if (!fh.good()) {
        throw IoError("short write to '" + out_file.string() + "'");
    }

    std::size_t argmax = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].s_opt > rows[argmax].s_opt) {
            argmax = i;
        }
    }
    ordered_json j;
    j["family"] = cfg.family;
    j["rows"] = rows.size();
    j["out"] = out_file.string();
    if (!plot_file.empty()) {
        j["plot"] = plot_file.string();
    }
    j["max_s"] = round12(rows[argmax].s_opt);
    j["argmax_param"] = round12(rows[argmax].param);
    emit(out, j);
    return 0;
}

int cmd_bound_scan(const RunConfig &cfg, std::ostream &out,
                   std::ostream &err) {
    const long samples = cfg.samples > 0 ? cfg.samples : 100000;

    double max_s = -1.0;
    long argmax = -1;
    long above_classical = 0;
    for (long i = 0; i < samples; ++i) {
        double s = 0.0;
        if (i == 0) {
            // Known saturating configuration pins the top of the scan.
            const BlochVector3 x{1, 0, 0}, z{0, 0, 1};
            const MeasurementScenario scen{
                DichotomicObservable(normalized(x + z)),
                DichotomicObservable(normalized(x - z)), MubPair(x, z)};
            s = steering_value(
                    correlation_table(TwoQubitState::phi_plus(), scen))
                    .value;
        } else {
            Rng rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(i)));
            const TwoQubitState state =
                (i % 2 == 1) ? random_pure_state(rng) : random_mixed_state(rng);
            s = steering_value(correlation_table(state, random_scenario(rng)))
                    .value;
        }
        if (s > max_s) {
            max_s = s;
            argmax = i;
        }
        if (s > 2.0) {
            ++above_classical;
        }
    }

    const bool ok = max_s <= kQuantumBound + kBoundSlack;
    ordered_json j;
    j["samples"] = samples;
    j["seed"] = cfg.seed;
    j["max_s"] = round12(max_s);
    j["argmax_index"] = argmax;
    j["above_classical"] = above_classical;
    j["bound"] = round12(kQuantumBound);
    j["ok"] = ok;
    emit(out, j);
    if (!ok) {
        err << "bound violation: max S " << fmt12(max_s) << " exceeds "
            << fmt12(kQuantumBound) << " + " << fmt12(kBoundSlack) << "\n";
        return 4;
    }
    return 0;
}

int cmd_jm(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    (void)err;
    if (cfg.scan) {
        const long samples = cfg.samples > 0 ? cfg.samples : 10000;
        const double eta = global_eta_opt(static_cast<int>(samples), cfg.seed);
        ordered_json j;
        j["scan"] = true;
        j["samples"] = samples;
        j["seed"] = cfg.seed;
        j["eta_opt"] = round12(eta);
        emit(out, j);
        return 0;
    }

    if (cfg.a1.empty() || cfg.a2.empty()) {
        throw std::invalid_argument("jm requires --a1 and --a2 (or --scan)");
    }
    BlochVector3 m = parse_vec3("--a1", cfg.a1);
    BlochVector3 n = parse_vec3("--a2", cfg.a2);
    if (std::abs(norm(m) - 1.0) > 1e-6 || std::abs(norm(n) - 1.0) > 1e-6) {
        throw std::invalid_argument("jm expects unit vectors for --a1/--a2");
    }
    m = normalized(m);
    n = normalized(n);

    const JmReport report = jm_report(m, n);
    const MotherPovm mother = mother_povm(m, n, report.eta_max);

    // Marginal residuals of the parent: summing out either outcome index
    // must reproduce the corresponding unsharp effect at eta_max.
    const EffectPair em = effects(DichotomicObservable(m, report.eta_max));
    const EffectPair en = effects(DichotomicObservable(n, report.eta_max));
    double res_m = 0.0, res_n = 0.0;
    const Matrix2 *em_eff[2] = {&em.plus, &em.minus};
    const Matrix2 *en_eff[2] = {&en.plus, &en.minus};
    for (int i = 0; i < 2; ++i) {
        const Matrix2 dm =
            mother.effect[i][0] + mother.effect[i][1] - *em_eff[i];
        const Matrix2 dn =
            mother.effect[0][i] + mother.effect[1][i] - *en_eff[i];
        res_m = std::max(res_m, dm.cwiseAbs().maxCoeff());
        res_n = std::max(res_n, dn.cwiseAbs().maxCoeff());
    }
    const Matrix2 total = mother.effect[0][0] + mother.effect[0][1] +
                          mother.effect[1][0] + mother.effect[1][1];
    const double res_total = (total - identity2()).cwiseAbs().maxCoeff();

    ordered_json j;
    j["m"] = json_vec(m);
    j["n"] = json_vec(n);
    j["eta_max"] = round12(report.eta_max);
    j["gamma"] = round12(report.gamma);
    ordered_json eigs = ordered_json::array();
    for (int a1 = 0; a1 < 2; ++a1) {
        for (int a2 = 0; a2 < 2; ++a2) {
            eigs.push_back(round12(min_eigenvalue(mother.effect[a1][a2])));
        }
    }
    j["effect_min_eigenvalues"] = eigs;
    j["marginal_residual_m"] = round12(res_m);
    j["marginal_residual_n"] = round12(res_n);
    j["completeness_residual"] = round12(res_total);
    emit(out, j);
    return 0;
}

int cmd_lhs(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    std::array<std::array<double, 2>, 2> e{};
    std::string source;
    if (!cfg.corr.empty()) {
        if (!cfg.state.empty()) {
            throw std::invalid_argument(
                "lhs takes either --corr or --state with settings, not both");
        }
        e = parse_corr(cfg.corr);
        source = "corr";
    } else {
        require_state(cfg);
        const TwoQubitState state = StateSpec::parse(cfg.state).realize();
        const EvalSettings settings = settings_from_flags(cfg, err);
        e = correlation_table(state, settings.scenario).E;
        source = "state";
    }

    const MembershipResult membership = lhs_membership(e, cfg.ngon);
    CorrelationTable table;
    table.E = e;
    const double s = steering_value(table).value;
    long support = 0;
    for (const double w : membership.weights) {
        if (w > 1e-12) {
            ++support;
        }
    }

    ordered_json j;
    j["source"] = source;
    j["E"] = ordered_json::array(
        {ordered_json::array({round12(e[0][0]), round12(e[0][1])}),
         ordered_json::array({round12(e[1][0]), round12(e[1][1])})});
    j["ngon"] = cfg.ngon;
    j["member"] = membership.member;
    j["margin"] = round12(membership.margin);
    j["s"] = round12(s);
    j["violated"] = s > 2.0;
    j["support"] = support;
    emit(out, j);
    return 0;
}

int run(std::vector<std::string> args, std::ostream &out, std::ostream &err) {
    RunConfig cfg;

    CLI::App app{"Steering-functional toolkit for two-qubit states"};
    app.fallthrough();
    app.require_subcommand(1);
    app.config_formatter(std::make_shared<CLI::ConfigINI>());
    app.set_config("--config", "", "flat key=value configuration file");

    app.add_option("--state", cfg.state,
                   "state spec: pure:a=V | werner:w=V | singlet | phiplus | "
                   "file:PATH");
    app.add_option("--a1", cfg.a1, "Alice first direction x,y,z");
    app.add_option("--a2", cfg.a2, "Alice second direction x,y,z");
    app.add_option("--b1", cfg.b1, "Bob first direction x,y,z");
    app.add_option("--b2", cfg.b2, "Bob second direction x,y,z");
    app.add_option("--family", cfg.family, "sweep family: pure | werner");
    app.add_option("--grid", cfg.grid, "sweep grid points (default 101)");
    app.add_option("--range", cfg.range, "sweep parameter range lo:hi");
    app.add_option("--restarts", cfg.restarts,
                   "optimizer restarts (default 64)");
    app.add_option("--seed", cfg.seed, "random seed (default 42)");
    app.add_option("--tol", cfg.tol,
                   "optimizer convergence tolerance (default 1e-10)");
    app.add_option("--ngon", cfg.ngon,
                   "polygon size for the membership test (default 256)");
    app.add_option("--samples", cfg.samples, "sample count for scans");
    app.add_option("--out", cfg.out_path, "output file path");
    app.add_option("--format", cfg.format, "sweep output format: csv | json");
    app.add_option("--corr", cfg.corr, "explicit correlators e11,e12,e21,e22");
    app.add_flag("--scan", cfg.scan, "jm: scan sampled pairs for eta_opt");

    app.add_subcommand("eval",
                       "evaluate S for a state and explicit settings");
    app.add_subcommand("optimize", "maximize S over measurement settings");
    app.add_subcommand("sweep", "optimize along a parameter grid; CSV + plot");
    app.add_subcommand("bound-scan",
                       "random-sample S and check the quantum bound");
    app.add_subcommand("jm", "joint-measurability report for a pair");
    app.add_subcommand("lhs", "polytope membership test for correlators");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (cfg.restarts < 1) {
            throw std::invalid_argument("--restarts must be >= 1");
        }
        if (!(cfg.tol > 0.0)) {
            throw std::invalid_argument("--tol must be positive");
        }
        if (cfg.ngon < 8) {
            throw std::invalid_argument("--ngon must be >= 8");
        }
        if (cfg.grid < 2) {
            throw std::invalid_argument("--grid must be >= 2");
        }
        if (cfg.samples < 0) {
            throw std::invalid_argument("--samples must be positive");
        }

        using Handler = int (*)(const RunConfig &, std::ostream &,
                                std::ostream &);
        static constexpr std::pair<const char *, Handler> kCommands[] = {
            {"eval", cmd_eval},           {"optimize", cmd_optimize},
            {"sweep", cmd_sweep},         {"bound-scan", cmd_bound_scan},
            {"jm", cmd_jm},               {"lhs", cmd_lhs},
        };
        for (const auto &[name, handler] : kCommands) {
            if (app.got_subcommand(name)) {
                cfg.command = name;
                return handler(cfg, out, err);
            }
        }
        throw std::logic_error("no subcommand dispatched");
    } catch (const BoundViolation &e) {
        err << "bound violation: " << e.what() << "\n";
        return 4;
    } catch (const SolverFailure &e) {
        err << "solver failure: " << e.what() << "\n";
        return 5;
    } catch (const IoError &e) {
        err << "i/o error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument &e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error &e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace steering::cli
