#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "delcon/errors.hpp"
#include "delcon/lp.hpp"

using namespace delcon;

TEST_CASE("simple maximization with known optimum") {
    // max 3x + 2y s.t. x + y <= 4, x + 3y <= 6; optimum (4, 0) value 12.
    LinearProgram lp;
    lp.sense = ObjectiveSense::Maximize;
    lp.objective = {3.0, 2.0};
    lp.add_row({1.0, 1.0}, RowSense::LessEqual, 4.0);
    lp.add_row({1.0, 3.0}, RowSense::LessEqual, 6.0);
    LpSolution sol = solve_lp(lp);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.objective_value == doctest::Approx(12.0));
    CHECK(sol.x[0] == doctest::Approx(4.0));
    CHECK(sol.x[1] == doctest::Approx(0.0));
}

TEST_CASE("minimization with >= rows and equality") {
    // min 2x + 3y s.t. x + y >= 10, x = 4; optimum (4, 6) value 26.
    LinearProgram lp;
    lp.objective = {2.0, 3.0};
    lp.add_row({1.0, 1.0}, RowSense::GreaterEqual, 10.0);
    lp.add_row({1.0, 0.0}, RowSense::Equal, 4.0);
    LpSolution sol = solve_lp(lp);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.objective_value == doctest::Approx(26.0));
    CHECK(sol.x[0] == doctest::Approx(4.0));
    CHECK(sol.x[1] == doctest::Approx(6.0));
}

TEST_CASE("infeasible and unbounded detection") {
    LinearProgram infeasible;
    infeasible.objective = {1.0};
    infeasible.add_row({1.0}, RowSense::LessEqual, 1.0);
    infeasible.add_row({1.0}, RowSense::GreaterEqual, 2.0);
    CHECK(solve_lp(infeasible).status == LpStatus::Infeasible);

    LinearProgram unbounded;
    unbounded.sense = ObjectiveSense::Maximize;
    unbounded.objective = {1.0, 0.0};
    unbounded.add_row({0.0, 1.0}, RowSense::LessEqual, 1.0);
    CHECK(solve_lp(unbounded).status == LpStatus::Unbounded);
}

TEST_CASE("variable bounds are honored") {
    // max x + y with x in [1, 2], y in [0, 3], x + y <= 4.
    LinearProgram lp;
    lp.sense = ObjectiveSense::Maximize;
    lp.objective = {1.0, 1.0};
    lp.lower = {1.0, 0.0};
    lp.upper = {2.0, 3.0};
    lp.add_row({1.0, 1.0}, RowSense::LessEqual, 4.0);
    LpSolution sol = solve_lp(lp);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.objective_value == doctest::Approx(4.0));
    CHECK(sol.x[0] >= 1.0 - 1e-9);
    CHECK(sol.x[0] <= 2.0 + 1e-9);
}

TEST_CASE("degenerate LP solves within the iteration cap") {
    // Classic Beale-style degeneracy trigger.
    LinearProgram lp;
    lp.sense = ObjectiveSense::Maximize;
    lp.objective = {0.75, -150.0, 0.02, -6.0};
    lp.add_row({0.25, -60.0, -0.04, 9.0}, RowSense::LessEqual, 0.0);
    lp.add_row({0.5, -90.0, -0.02, 3.0}, RowSense::LessEqual, 0.0);
    lp.add_row({0.0, 0.0, 1.0, 0.0}, RowSense::LessEqual, 1.0);
    LpSolution sol = solve_lp(lp);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.objective_value == doctest::Approx(0.05));
}

TEST_CASE("random LPs: solutions are feasible and beat random feasible points") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> cd(-2.0, 2.0);
    std::uniform_real_distribution<double> bd(0.5, 4.0);
    for (int trial = 0; trial < 200; ++trial) {
        const int nv = 2 + static_cast<int>(rng() % 3);
        const int nr = 1 + static_cast<int>(rng() % 4);
        LinearProgram lp;
        lp.sense = ObjectiveSense::Maximize;
        lp.objective.resize(nv);
        for (double& c : lp.objective) c = cd(rng);
        lp.upper.assign(nv, 1.0);  // box keeps it bounded
        for (int r = 0; r < nr; ++r) {
            std::vector<double> row(nv);
            for (double& a : row) a = cd(rng);
            lp.add_row(std::move(row), RowSense::LessEqual, bd(rng));
        }
        LpSolution sol = solve_lp(lp);
        REQUIRE(sol.status == LpStatus::Optimal);
        for (int r = 0; r < nr; ++r) {
            double lhs = 0.0;
            for (int v = 0; v < nv; ++v) lhs += lp.rows[r][v] * sol.x[v];
            CHECK(lhs <= lp.rhs[r] + 1e-7);
        }
        // Optimum dominates random feasible box points.
        std::uniform_real_distribution<double> xd(0.0, 1.0);
        for (int probe = 0; probe < 20; ++probe) {
            std::vector<double> x(nv);
            for (double& v : x) v = xd(rng);
            bool feasible = true;
            for (int r = 0; r < nr && feasible; ++r) {
                double lhs = 0.0;
                for (int v = 0; v < nv; ++v) lhs += lp.rows[r][v] * x[v];
                feasible = lhs <= lp.rhs[r];
            }
            if (!feasible) continue;
            double val = 0.0;
            for (int v = 0; v < nv; ++v) val += lp.objective[v] * x[v];
            CHECK(sol.objective_value >= val - 1e-7);
        }
    }
}

TEST_CASE("binary search matches exhaustive enumeration") {
    std::mt19937_64 rng(33);
    std::uniform_real_distribution<double> cd(-1.0, 1.0);
    std::uniform_real_distribution<double> bd(0.0, 3.0);
    for (int trial = 0; trial < 60; ++trial) {
        const int nv = 2 + static_cast<int>(rng() % 9);  // up to 10 binaries
        const int nr = 1 + static_cast<int>(rng() % 3);
        LinearProgram lp;
        lp.sense = ObjectiveSense::Maximize;
        lp.objective.resize(nv);
        for (double& c : lp.objective) c = cd(rng);
        lp.upper.assign(nv, 1.0);
        for (int r = 0; r < nr; ++r) {
            std::vector<double> row(nv);
            for (double& a : row) a = cd(rng);
            lp.add_row(std::move(row), RowSense::LessEqual, bd(rng));
        }
        std::vector<int> binaries(nv);
        for (int v = 0; v < nv; ++v) binaries[v] = v;
        LpSolution sol = solve_binary(lp, binaries);

        double best = -1e300;
        bool any = false;
        for (unsigned mask = 0; mask < (1u << nv); ++mask) {
            bool feasible = true;
            for (int r = 0; r < nr && feasible; ++r) {
                double lhs = 0.0;
                for (int v = 0; v < nv; ++v) {
                    if (mask & (1u << v)) lhs += lp.rows[r][v];
                }
                feasible = lhs <= lp.rhs[r] + 1e-12;
            }
            if (!feasible) continue;
            any = true;
            double val = 0.0;
            for (int v = 0; v < nv; ++v) {
                if (mask & (1u << v)) val += lp.objective[v];
            }
            best = std::max(best, val);
        }
        if (!any) {
            CHECK(sol.status == LpStatus::Infeasible);
            continue;
        }
        REQUIRE(sol.status == LpStatus::Optimal);
        CHECK(sol.objective_value == doctest::Approx(best).epsilon(1e-8));
        for (int v = 0; v < nv; ++v) {
            CHECK(std::abs(sol.x[v] - std::round(sol.x[v])) < 1e-7);
        }
    }
}

TEST_CASE("dimension mismatches are rejected") {
    LinearProgram lp;
    lp.objective = {1.0, 1.0};
    CHECK_THROWS_AS(lp.add_row({1.0}, RowSense::LessEqual, 1.0), InputError);
}
