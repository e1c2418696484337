#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "delcon/core.hpp"

namespace delcon {

/// 3-CNF formula: exactly three distinct literals per clause, variables 1..m.
struct Cnf3 {
    int num_vars = 0;
    std::vector<std::array<int, 3>> clauses;  // signed variable indices

    Cnf3(int num_vars, std::vector<std::array<int, 3>> clauses);

    bool evaluate(const std::vector<bool>& assignment) const;
    /// True literals in clause i under the assignment.
    int sigma(std::size_t i, const std::vector<bool>& assignment) const;
};

/// Parse DIMACS CNF ("p cnf <vars> <clauses>", zero-terminated clauses).
Cnf3 parse_dimacs(std::istream& in);
Cnf3 parse_dimacs_file(const std::string& path);

/// The maximin design problem derived from a formula at epsilon = 1/10.
/// Outcome order: variable columns 1..m, then pos, neg, const.
struct MaximinInstance {
    std::vector<std::vector<double>> matrix;  // one row per clause action
    double epsilon = 0.1;
    double q_pos = 0.0;
    std::size_t pos_col = 0;
    std::size_t neg_col = 0;
    std::size_t const_col = 0;
};

/// Build the contract design instance encoding satisfiability of the formula.
std::pair<DelegationSetting, MaximinInstance> reduce_3sat(const Cnf3& cnf);

/// min over rows of A * phi for a binary phi.
double maximin_objective(const MaximinInstance& instance, const std::vector<int>& phi);

/// Exercises the reduction end to end: exhaustive satisfiability check against
/// the exhaustive maximin threshold Q_pos + eps/m. True when the two agree.
bool verify_reduction(const Cnf3& cnf);

}  // namespace delcon
