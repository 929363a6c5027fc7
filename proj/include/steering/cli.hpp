#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "steering/quantum.hpp"

namespace steering::cli {

/// Parsed --state value: a named family with its parameter, or a density
/// matrix loaded from a JSON file.
struct StateSpec {
    enum class Kind { Pure, Werner, Singlet, PhiPlus, File };

    Kind kind = Kind::PhiPlus;
    double param = 0.0; // Schmidt a or Werner w
    std::string path;

    /// Accepts pure:a=V, werner:w=V, singlet, phiplus, file:PATH.
    static StateSpec parse(const std::string &text);
    TwoQubitState realize() const;
    std::string describe() const;
};

/// Flag bag shared by all subcommands. String fields are empty when the
/// flag was not given; samples falls back to a per-command default when 0.
struct RunConfig {
    std::string command;
    std::string state;
    std::string a1, a2, b1, b2; // comma-separated Bloch triples
    std::string family;
    std::string range; // "lo:hi"
    std::string corr;  // "e11,e12,e21,e22"
    std::string out_path;
    std::string format = "csv";
    int grid = 101;
    int restarts = 64;
    std::uint64_t seed = 42;
    double tol = 1e-10;
    int ngon = 256;
    long samples = 0;
    bool scan = false;
};

int cmd_eval(const RunConfig &cfg, std::ostream &out, std::ostream &err);
int cmd_optimize(const RunConfig &cfg, std::ostream &out, std::ostream &err);
int cmd_sweep(const RunConfig &cfg, std::ostream &out, std::ostream &err);
int cmd_bound_scan(const RunConfig &cfg, std::ostream &out, std::ostream &err);
int cmd_jm(const RunConfig &cfg, std::ostream &out, std::ostream &err);
int cmd_lhs(const RunConfig &cfg, std::ostream &out, std::ostream &err);

/// Parse args (program name excluded) and dispatch to the subcommand.
/// Exit codes: 0 success, 2 input error, 3 I/O error, 4 bound-violation
/// assertion, 5 solver failure.
int run(std::vector<std::string> args, std::ostream &out, std::ostream &err);

} // namespace steering::cli
