#include "delcon/hardness.hpp"

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

namespace delcon {

namespace {
constexpr double kEpsilon = 0.1;
}

Cnf3::Cnf3(int num_vars_, std::vector<std::array<int, 3>> clauses_)
    : num_vars(num_vars_), clauses(std::move(clauses_)) {
    if (num_vars < 1) {
        throw InputError("formula must have at least one variable");
    }
    for (const auto& clause : clauses) {
        for (int lit : clause) {
            if (lit == 0 || std::abs(lit) > num_vars) {
                throw InputError("literal out of range");
            }
        }
        // The sigma accounting assumes three distinct variables per clause.
        if (std::abs(clause[0]) == std::abs(clause[1]) ||
            std::abs(clause[0]) == std::abs(clause[2]) ||
            std::abs(clause[1]) == std::abs(clause[2])) {
            throw InputError("clauses must use three distinct variables");
        }
    }
}

bool Cnf3::evaluate(const std::vector<bool>& assignment) const {
    for (std::size_t i = 0; i < clauses.size(); ++i) {
        if (sigma(i, assignment) == 0) {
            return false;
        }
    }
    return true;
}

int Cnf3::sigma(std::size_t i, const std::vector<bool>& assignment) const {
    int count = 0;
    for (int lit : clauses[i]) {
        const bool value = assignment[std::abs(lit) - 1];
        if (lit > 0 ? value : !value) {
            ++count;
        }
    }
    return count;
}

Cnf3 parse_dimacs(std::istream& in) {
    int num_vars = 0;
    int num_clauses = -1;
    std::vector<std::array<int, 3>> clauses;
    std::vector<int> current;
    std::string line;
    bool seen_header = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') {
            continue;
        }
        std::istringstream ls(line);
        if (line[0] == 'p') {
            std::string p, fmt;
            if (!(ls >> p >> fmt >> num_vars >> num_clauses) || fmt != "cnf") {
                throw InputError("malformed DIMACS header");
            }
            seen_header = true;
            continue;
        }
        if (!seen_header) {
            throw InputError("DIMACS clause before header");
        }
        int lit = 0;
        while (ls >> lit) {
            if (lit == 0) {
                if (current.size() != 3) {
                    throw InputError("clauses must have exactly 3 literals");
                }
                clauses.push_back({current[0], current[1], current[2]});
                current.clear();
            } else {
                current.push_back(lit);
            }
        }
    }
    if (!current.empty()) {
        throw InputError("unterminated DIMACS clause");
    }
    if (num_clauses >= 0 && clauses.size() != static_cast<std::size_t>(num_clauses)) {
        throw InputError("clause count does not match header");
    }
    return Cnf3(num_vars, std::move(clauses));
}

Cnf3 parse_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open CNF file: " + path);
    }
    return parse_dimacs(in);
}

std::pair<DelegationSetting, MaximinInstance> reduce_3sat(const Cnf3& cnf) {
    const int m = cnf.num_vars;
    if (m < 3) {
        throw InputError("reduction requires m >= 3 variables");
    }
    const std::size_t n = cnf.clauses.size();
    const double eps_m = kEpsilon / m;
    const std::size_t pos = m;
    const std::size_t neg = m + 1;
    const std::size_t cst = m + 2;
    const double q_pos = 1.0 - kEpsilon * (1.0 + 3.0 / m);

    std::vector<double> q(m + 3, eps_m);
    q[pos] = q_pos;
    q[neg] = 0.0;
    q[cst] = 3.0 * eps_m;

    std::vector<ActionSpec> actions;
    MaximinInstance instance;
    instance.epsilon = kEpsilon;
    instance.q_pos = q_pos;
    instance.pos_col = pos;
    instance.neg_col = neg;
    instance.const_col = cst;

    for (std::size_t i = 0; i < n; ++i) {
        int negated = 0;
        std::vector<double> p(m + 3, eps_m);
        for (int lit : cnf.clauses[i]) {
            if (lit > 0) {
                p[lit - 1] = 0.0;
            } else {
                p[-lit - 1] = 2.0 * eps_m;
                ++negated;
            }
        }
        p[pos] = 0.0;
        p[cst] = (3 - negated) * eps_m;
        // The neg outcome closes the distribution to total mass one.
        double rest = 0.0;
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (j != neg) {
                rest += p[j];
            }
        }
        p[neg] = 1.0 - rest;

        std::vector<double> row(m + 3, 0.0);
        for (std::size_t j = 0; j < row.size(); ++j) {
            row[j] = q[j] - p[j];  // cost gap c_{n+1} - c_i = 1
        }
        instance.matrix.push_back(std::move(row));

        actions.emplace_back(static_cast<int>(i + 1), 0, 0.0, OutcomeDistribution(std::move(p)));
    }
    actions.emplace_back(static_cast<int>(n + 1), 0, 1.0, OutcomeDistribution(std::move(q)));
    return {DelegationSetting(m + 2, std::move(actions)), std::move(instance)};
}

double maximin_objective(const MaximinInstance& instance, const std::vector<int>& phi) {
    if (instance.matrix.empty()) {
        throw InputError("maximin instance has no rows");
    }
    if (phi.size() != instance.matrix.front().size()) {
        throw InputError("phi length does not match the design matrix");
    }
    for (int v : phi) {
        if (v != 0 && v != 1) {
            throw InputError("phi must be binary");
        }
    }
    double min_row = std::numeric_limits<double>::infinity();
    for (const auto& row : instance.matrix) {
        double value = 0.0;
        for (std::size_t j = 0; j < row.size(); ++j) {
            value += row[j] * phi[j];
        }
        min_row = std::min(min_row, value);
    }
    return min_row;
}

bool verify_reduction(const Cnf3& cnf) {
    const int m = cnf.num_vars;
    if (m + 3 > 22 || m > 20) {
        throw ResourceError("verify_reduction instance too large for exhaustive search");
    }
    auto [setting, instance] = reduce_3sat(cnf);
    (void)setting;

    // Exhaustive satisfiability.
    bool satisfiable = false;
    std::vector<bool> assignment(m, false);
    for (std::uint64_t mask = 0; mask < (1ull << m) && !satisfiable; ++mask) {
        for (int v = 0; v < m; ++v) {
            assignment[v] = (mask >> v) & 1;
        }
        satisfiable = cnf.evaluate(assignment);
    }

    // Exhaustive maximin over binary phi.
    double best = -std::numeric_limits<double>::infinity();
    std::vector<int> phi(m + 3, 0);
    const std::size_t width = m + 3;
    for (std::uint64_t mask = 0; mask < (1ull << width); ++mask) {
        for (std::size_t j = 0; j < width; ++j) {
            phi[j] = static_cast<int>((mask >> j) & 1);
        }
        best = std::max(best, maximin_objective(instance, phi));
    }

    const bool threshold_met = best >= instance.q_pos + instance.epsilon / m - 1e-9;
    return threshold_met == satisfiable;
}

}  // namespace delcon
