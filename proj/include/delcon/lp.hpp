#pragma once

#include <limits>
#include <vector>

#include "delcon/errors.hpp"

namespace delcon {

enum class RowSense { LessEqual, GreaterEqual, Equal };
enum class ObjectiveSense { Minimize, Maximize };
enum class LpStatus { Optimal, Infeasible, Unbounded };

constexpr double kLpInfinity = std::numeric_limits<double>::infinity();

/// Dense LP: optimize c'x s.t. row constraints and variable bounds.
/// Lower bounds must be finite; upper bounds may be infinite.
struct LinearProgram {
    ObjectiveSense sense = ObjectiveSense::Minimize;
    std::vector<double> objective;
    std::vector<std::vector<double>> rows;
    std::vector<RowSense> row_senses;
    std::vector<double> rhs;
    std::vector<double> lower;  // defaults to 0 when empty
    std::vector<double> upper;  // defaults to +inf when empty

    std::size_t num_vars() const { return objective.size(); }
    std::size_t num_rows() const { return rows.size(); }

    void add_row(std::vector<double> coeffs, RowSense sense_, double rhs_);
};

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    std::vector<double> x;
    double objective_value = 0.0;
    std::vector<int> basis;  // basic column indices of the internal tableau
};

/// Primal simplex (largest-coefficient pivoting, Bland fallback on
/// degeneracy). Deterministic; iteration cap 50*(rows+cols).
LpSolution solve_lp(const LinearProgram& lp);

/// Depth-first branch-and-bound over the listed variables, which must be
/// bounded within [0,1]; node budget 2^26.
LpSolution solve_binary(const LinearProgram& lp, const std::vector<int>& binary_vars);

}  // namespace delcon
