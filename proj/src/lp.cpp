#include "delcon/lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace delcon {

namespace {

constexpr double kFeasTol = 1e-7;
constexpr double kOptTol = 1e-9;
constexpr double kPivotTol = 1e-9;

void validate(const LinearProgram& lp) {
    const std::size_t n = lp.num_vars();
    if (n == 0) {
        throw InputError("LP has no variables");
    }
    if (lp.rows.size() != lp.row_senses.size() || lp.rows.size() != lp.rhs.size()) {
        throw InputError("LP row dimensions are inconsistent");
    }
    for (const auto& row : lp.rows) {
        if (row.size() != n) {
            throw InputError("LP row length does not match variable count");
        }
    }
    if (!lp.lower.empty() && lp.lower.size() != n) {
        throw InputError("LP lower-bound length does not match variable count");
    }
    if (!lp.upper.empty() && lp.upper.size() != n) {
        throw InputError("LP upper-bound length does not match variable count");
    }
    for (std::size_t i = 0; i < n; ++i) {
        const double lo = lp.lower.empty() ? 0.0 : lp.lower[i];
        const double hi = lp.upper.empty() ? kLpInfinity : lp.upper[i];
        if (!std::isfinite(lo)) {
            throw InputError("LP lower bounds must be finite");
        }
        if (lo > hi) {
            throw InputError("LP has lower bound above upper bound");
        }
    }
}

// Dense tableau simplex over the standard-form expansion of the LP.
class SimplexTableau {
  public:
    SimplexTableau(const LinearProgram& lp) : lp_(lp) {
        n_ = lp.num_vars();
        lower_.assign(n_, 0.0);
        if (!lp.lower.empty()) {
            lower_ = lp.lower;
        }
        std::vector<double> upper(n_, kLpInfinity);
        if (!lp.upper.empty()) {
            upper = lp.upper;
        }

        // Structural rows plus one row per finite upper bound.
        struct Row {
            std::vector<double> coeffs;
            RowSense sense;
            double rhs;
        };
        std::vector<Row> rows;
        for (std::size_t r = 0; r < lp.num_rows(); ++r) {
            double shift = 0.0;
            for (std::size_t j = 0; j < n_; ++j) {
                shift += lp.rows[r][j] * lower_[j];
            }
            rows.push_back({lp.rows[r], lp.row_senses[r], lp.rhs[r] - shift});
        }
        for (std::size_t j = 0; j < n_; ++j) {
            if (std::isfinite(upper[j])) {
                std::vector<double> coeffs(n_, 0.0);
                coeffs[j] = 1.0;
                rows.push_back({std::move(coeffs), RowSense::LessEqual, upper[j] - lower_[j]});
            }
        }
        for (auto& row : rows) {
            if (row.rhs < 0.0) {
                for (double& v : row.coeffs) {
                    v = -v;
                }
                row.rhs = -row.rhs;
                if (row.sense == RowSense::LessEqual) {
                    row.sense = RowSense::GreaterEqual;
                } else if (row.sense == RowSense::GreaterEqual) {
                    row.sense = RowSense::LessEqual;
                }
            }
        }

        m_ = rows.size();
        std::size_t n_slack = 0;
        std::size_t n_art = 0;
        for (const auto& row : rows) {
            if (row.sense != RowSense::Equal) {
                ++n_slack;
            }
            if (row.sense != RowSense::LessEqual) {
                ++n_art;
            }
        }
        ncols_ = n_ + n_slack + n_art;
        first_art_ = n_ + n_slack;
        tab_.assign(m_ + 1, std::vector<double>(ncols_ + 1, 0.0));
        basis_.assign(m_, -1);

        std::size_t slack = n_;
        std::size_t art = first_art_;
        for (std::size_t r = 0; r < m_; ++r) {
            for (std::size_t j = 0; j < n_; ++j) {
                tab_[r][j] = rows[r].coeffs[j];
            }
            tab_[r][ncols_] = rows[r].rhs;
            if (rows[r].sense == RowSense::LessEqual) {
                tab_[r][slack] = 1.0;
                basis_[r] = static_cast<int>(slack);
                ++slack;
            } else {
                if (rows[r].sense == RowSense::GreaterEqual) {
                    tab_[r][slack] = -1.0;
                    ++slack;
                }
                tab_[r][art] = 1.0;
                basis_[r] = static_cast<int>(art);
                ++art;
            }
        }
    }

    LpSolution solve() {
        LpSolution sol;
        if (first_art_ < ncols_) {
            std::vector<double> phase1(ncols_, 0.0);
            for (std::size_t j = first_art_; j < ncols_; ++j) {
                phase1[j] = 1.0;
            }
            set_objective(phase1);
            iterate(/*allow_artificial=*/true);
            if (tab_[m_][ncols_] < -kFeasTol) {
                sol.status = LpStatus::Infeasible;
                return sol;
            }
            remove_artificials_from_basis();
        }

        std::vector<double> cost(ncols_, 0.0);
        const double sign = lp_.sense == ObjectiveSense::Maximize ? -1.0 : 1.0;
        for (std::size_t j = 0; j < n_; ++j) {
            cost[j] = sign * lp_.objective[j];
        }
        set_objective(cost);
        if (!iterate(/*allow_artificial=*/false)) {
            sol.status = LpStatus::Unbounded;
            return sol;
        }

        sol.status = LpStatus::Optimal;
        sol.x.assign(n_, 0.0);
        for (std::size_t r = 0; r < m_; ++r) {
            if (basis_[r] >= 0 && static_cast<std::size_t>(basis_[r]) < n_) {
                sol.x[basis_[r]] = tab_[r][ncols_];
            }
        }
        for (std::size_t j = 0; j < n_; ++j) {
            sol.x[j] += lower_[j];
        }
        sol.objective_value = 0.0;
        for (std::size_t j = 0; j < n_; ++j) {
            sol.objective_value += lp_.objective[j] * sol.x[j];
        }
        sol.basis.assign(basis_.begin(), basis_.end());
        return sol;
    }

  private:
    void set_objective(const std::vector<double>& cost) {
        for (std::size_t j = 0; j < ncols_; ++j) {
            tab_[m_][j] = cost[j];
        }
        tab_[m_][ncols_] = 0.0;
        for (std::size_t r = 0; r < m_; ++r) {
            const double c = tab_[m_][basis_[r]];
            if (c != 0.0) {
                add_row_multiple(m_, r, -c);
            }
        }
    }

    void add_row_multiple(std::size_t dst, std::size_t src, double factor) {
        for (std::size_t j = 0; j <= ncols_; ++j) {
            tab_[dst][j] += factor * tab_[src][j];
        }
    }

    void pivot(std::size_t row, std::size_t col) {
        const double p = tab_[row][col];
        for (std::size_t j = 0; j <= ncols_; ++j) {
            tab_[row][j] /= p;
        }
        for (std::size_t r = 0; r <= m_; ++r) {
            if (r != row && tab_[r][col] != 0.0) {
                add_row_multiple(r, row, -tab_[r][col]);
            }
        }
        basis_[row] = static_cast<int>(col);
    }

    // Returns false on unboundedness. The pivot rule starts with the largest
    // reduced cost and switches to Bland's rule once the objective stalls.
    bool iterate(bool allow_artificial) {
        const std::size_t limit = 50 * (m_ + ncols_);
        const std::size_t stall_limit = 2 * (m_ + 2);
        std::size_t iters = 0;
        std::size_t stalled = 0;
        bool bland = false;
        double last_obj = tab_[m_][ncols_];
        while (true) {
            const std::size_t col_end = allow_artificial ? ncols_ : first_art_;
            int entering = -1;
            if (!bland) {
                double best = -kOptTol;
                for (std::size_t j = 0; j < col_end; ++j) {
                    if (tab_[m_][j] < best) {
                        best = tab_[m_][j];
                        entering = static_cast<int>(j);
                    }
                }
            } else {
                for (std::size_t j = 0; j < col_end; ++j) {
                    if (tab_[m_][j] < -kOptTol) {
                        entering = static_cast<int>(j);
                        break;
                    }
                }
            }
            if (entering < 0) {
                return true;  // optimal for this phase
            }

            int leaving = -1;
            double best_ratio = 0.0;
            for (std::size_t r = 0; r < m_; ++r) {
                const double a = tab_[r][entering];
                if (a > kPivotTol) {
                    const double ratio = tab_[r][ncols_] / a;
                    if (leaving < 0 || ratio < best_ratio - kPivotTol ||
                        (ratio < best_ratio + kPivotTol && basis_[r] < basis_[leaving])) {
                        leaving = static_cast<int>(r);
                        best_ratio = ratio;
                    }
                }
            }
            if (leaving < 0) {
                return false;  // unbounded direction
            }
            pivot(static_cast<std::size_t>(leaving), static_cast<std::size_t>(entering));

            if (++iters > limit) {
                throw NumericalError("simplex exceeded its iteration cap");
            }
            // The objective cell (-objective for minimization) is nondecreasing;
            // no increase means a degenerate pivot.
            const double obj = tab_[m_][ncols_];
            if (obj < last_obj + 1e-12) {
                if (++stalled > stall_limit) {
                    bland = true;
                }
            } else {
                stalled = 0;
            }
            last_obj = obj;
        }
    }

    // Pivot basic artificials onto structural columns; redundant rows keep
    // their artificial at value zero and are left in place.
    void remove_artificials_from_basis() {
        for (std::size_t r = 0; r < m_; ++r) {
            if (static_cast<std::size_t>(basis_[r]) >= first_art_) {
                for (std::size_t j = 0; j < first_art_; ++j) {
                    if (std::abs(tab_[r][j]) > kPivotTol) {
                        pivot(r, j);
                        break;
                    }
                }
            }
        }
    }

    const LinearProgram& lp_;
    std::size_t n_ = 0;
    std::size_t m_ = 0;
    std::size_t ncols_ = 0;
    std::size_t first_art_ = 0;
    std::vector<double> lower_;
    std::vector<std::vector<double>> tab_;
    std::vector<int> basis_;
};

bool better(const LinearProgram& lp, double a, double b) {
    return lp.sense == ObjectiveSense::Maximize ? a > b : a < b;
}

struct BnbState {
    const LinearProgram* base = nullptr;
    const std::vector<int>* binaries = nullptr;
    LinearProgram work;
    LpSolution incumbent;
    bool have_incumbent = false;
    std::uint64_t nodes = 0;
    static constexpr std::uint64_t kNodeBudget = 1ull << 26;

    void search() {
        if (++nodes > kNodeBudget) {
            throw ResourceError("branch-and-bound node budget exceeded");
        }
        LpSolution relax = solve_lp(work);
        if (relax.status == LpStatus::Infeasible) {
            return;
        }
        if (relax.status == LpStatus::Unbounded) {
            throw NumericalError("binary search over an unbounded relaxation");
        }
        if (have_incumbent) {
            const double gap = base->sense == ObjectiveSense::Maximize
                                   ? relax.objective_value - incumbent.objective_value
                                   : incumbent.objective_value - relax.objective_value;
            if (gap <= 1e-12) {
                return;  // relaxation cannot strictly improve on the incumbent
            }
        }
        // Most fractional binary variable.
        int branch_var = -1;
        double best_frac = 1e-6;
        for (int v : *binaries) {
            const double frac = std::abs(relax.x[v] - std::round(relax.x[v]));
            if (frac > best_frac) {
                best_frac = frac;
                branch_var = v;
            }
        }
        if (branch_var < 0) {
            for (int v : *binaries) {
                relax.x[v] = std::round(relax.x[v]);
            }
            if (!have_incumbent || better(*base, relax.objective_value, incumbent.objective_value)) {
                incumbent = relax;
                have_incumbent = true;
            }
            return;
        }
        const double lo = work.lower[branch_var];
        const double hi = work.upper[branch_var];
        work.lower[branch_var] = 1.0;
        work.upper[branch_var] = 1.0;
        search();
        work.lower[branch_var] = 0.0;
        work.upper[branch_var] = 0.0;
        search();
        work.lower[branch_var] = lo;
        work.upper[branch_var] = hi;
    }
};

}  // namespace

void LinearProgram::add_row(std::vector<double> coeffs, RowSense sense_, double rhs_) {
    if (coeffs.size() != objective.size()) {
        throw InputError("row length does not match the number of variables");
    }
    rows.push_back(std::move(coeffs));
    row_senses.push_back(sense_);
    rhs.push_back(rhs_);
}

LpSolution solve_lp(const LinearProgram& lp) {
    validate(lp);
    SimplexTableau tableau(lp);
    return tableau.solve();
}

LpSolution solve_binary(const LinearProgram& lp, const std::vector<int>& binary_vars) {
    validate(lp);
    BnbState state;
    state.base = &lp;
    state.binaries = &binary_vars;
    state.work = lp;
    if (state.work.lower.empty()) {
        state.work.lower.assign(lp.num_vars(), 0.0);
    }
    if (state.work.upper.empty()) {
        state.work.upper.assign(lp.num_vars(), kLpInfinity);
    }
    for (int v : binary_vars) {
        if (v < 0 || static_cast<std::size_t>(v) >= lp.num_vars()) {
            throw InputError("binary variable index out of range");
        }
        if (state.work.lower[v] < -kFeasTol || state.work.upper[v] > 1.0 + kFeasTol) {
            throw InputError("binary variables must be bounded within [0,1]");
        }
    }
    state.search();
    if (!state.have_incumbent) {
        LpSolution sol;
        sol.status = LpStatus::Infeasible;
        return sol;
    }
    return state.incumbent;
}

}  // namespace delcon
