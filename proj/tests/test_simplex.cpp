#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "steering/rng.hpp"
#include "steering/simplex.hpp"

using steering::Rng;
using namespace steering::lp;

namespace {

/// max x1 + x2 s.t. x1 + x2 <= 1 in equality form with one slack.
Problem box_problem() {
    Problem p;
    p.rows = 1;
    p.cols = 3;
    p.a = {1, 1, 1};
    p.b = {1};
    p.c = {-1, -1, 0};
    return p;
}

} // namespace

TEST_CASE("bounded problem reaches its optimum") {
    const Solution s = solve(box_problem());
    REQUIRE(s.status == Status::Optimal);
    CHECK(s.objective == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(s.x[0] + s.x[1] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s.residual < 1e-12);
}

TEST_CASE("negative right-hand side with nonnegative row is infeasible") {
    Problem p;
    p.rows = 1;
    p.cols = 2;
    p.a = {1, 1};
    p.b = {-1};
    p.c = {0, 0};
    const Solution s = solve(p);
    CHECK(s.status == Status::Infeasible);
    CHECK(s.infeasibility > 0.5);
}

TEST_CASE("decreasing ray is reported unbounded") {
    // min -x1 s.t. x1 - x2 = 0: push both coordinates to infinity.
    Problem p;
    p.rows = 1;
    p.cols = 2;
    p.a = {1, -1};
    p.b = {0};
    p.c = {-1, 0};
    const Solution s = solve(p);
    CHECK(s.status == Status::Unbounded);
}

TEST_CASE("square nonsingular system returns the unique point") {
    Problem p;
    p.rows = 2;
    p.cols = 2;
    p.a = {2, 1, //
           1, 3};
    p.b = {5, 10};
    p.c = {1, 1};
    const Solution s = solve(p);
    REQUIRE(s.status == Status::Optimal);
    CHECK(s.x[0] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(s.x[1] == doctest::Approx(3.0).epsilon(1e-10));
}

TEST_CASE("cycling-prone degenerate problem still terminates optimally") {
    // Beale's classic cycling example, slack-formed:
    // min -0.75 x1 + 150 x2 - 0.02 x3 + 6 x4
    //   0.25 x1 -  60 x2 - 0.04 x3 + 9 x4 <= 0
    //   0.50 x1 -  90 x2 - 0.02 x3 + 3 x4 <= 0
    //              x3                     <= 1
    Problem p;
    p.rows = 3;
    p.cols = 7;
    p.a = {0.25, -60, -0.04, 9, 1, 0, 0, //
           0.50, -90, -0.02, 3, 0, 1, 0, //
           0,    0,   1,     0, 0, 0, 1};
    p.b = {0, 0, 1};
    p.c = {-0.75, 150, -0.02, 6, 0, 0, 0};
    const Solution s = solve(p);
    REQUIRE(s.status == Status::Optimal);
    CHECK(s.objective == doctest::Approx(-0.05).epsilon(1e-10));
    CHECK(s.x[0] == doctest::Approx(0.04).epsilon(1e-9));
    CHECK(s.x[2] == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("iteration cap surfaces as a distinct status") {
    const Solution s = solve(box_problem(), 0);
    CHECK(s.status == Status::IterationLimit);
}

TEST_CASE("duplicated rows do not break feasibility handling") {
    Problem p;
    p.rows = 2;
    p.cols = 3;
    p.a = {1, 1, 1, //
           1, 1, 1};
    p.b = {1, 1};
    p.c = {-1, 0, 0};
    const Solution s = solve(p);
    REQUIRE(s.status == Status::Optimal);
    CHECK(s.objective == doctest::Approx(-1.0).epsilon(1e-10));
    CHECK(s.residual < 1e-9);
}

TEST_CASE("random feasible systems solve with tiny residuals") {
    Rng rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        const int rows = 3 + static_cast<int>(rng.uniform(0.0, 3.0));
        const int cols = rows + 2 + static_cast<int>(rng.uniform(0.0, 4.0));
        Problem p;
        p.rows = rows;
        p.cols = cols;
        p.a.resize(static_cast<std::size_t>(rows) * cols);
        p.b.assign(rows, 0.0);
        p.c.assign(cols, 0.0);
        std::vector<double> xstar(cols);
        for (int j = 0; j < cols; ++j) {
            xstar[j] = rng.uniform(0.0, 2.0);
            p.c[j] = rng.uniform(-1.0, 1.0);
        }
        for (int i = 0; i < rows; ++i) {
            for (int j = 0; j < cols; ++j) {
                p.at(i, j) = rng.uniform(0.1, 1.0);
                p.b[i] += p.at(i, j) * xstar[j]; // b = A x*, so feasible
            }
        }
        // Positive A with x >= 0 bounds the region, so Optimal is forced.
        const Solution s = solve(p);
        REQUIRE(s.status == Status::Optimal);
        CHECK(s.residual <= 1e-9);
        double handed = 0.0;
        for (int j = 0; j < cols; ++j) {
            handed += p.c[j] * xstar[j];
        }
        CHECK(s.objective <= handed + 1e-9); // x* is feasible, so beatable
    }
}
