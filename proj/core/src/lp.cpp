#include "dricci/lp.hpp"

#include "dricci/errors.hpp"

#include <limits>

namespace dricci {

void LinearProgram::validate() const {
    const std::size_t n = objective.size();
    if (!domains.empty() && domains.size() != n)
        throw DomainError("LinearProgram: domains size differs from objective size");
    for (std::size_t i = 0; i < constraints.size(); ++i)
        if (constraints[i].coeffs.size() != n)
            throw DomainError("LinearProgram: constraint " + std::to_string(i) +
                              " has dimension " + std::to_string(constraints[i].coeffs.size()) +
                              ", expected " + std::to_string(n));
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Dense tableau in equality standard form: min c.z, A z = b, z >= 0, b >= 0.
// Operates on raw mpq_class to let gmpxx fuse expressions in the pivot loop.
class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), t_(rows, std::vector<mpq_class>(cols + 1)),
          obj_(cols + 1), basis_(rows, kNone) {}

    mpq_class& at(std::size_t r, std::size_t c) { return t_[r][c]; }
    mpq_class& rhs(std::size_t r) { return t_[r][cols_]; }
    std::size_t& basic(std::size_t r) { return basis_[r]; }
    std::vector<mpq_class>& objective_row() { return obj_; }

    // Loads a cost vector and prices out the current basis.
    void set_costs(const std::vector<mpq_class>& costs) {
        for (std::size_t j = 0; j < cols_; ++j) obj_[j] = costs[j];
        obj_[cols_] = 0;
        for (std::size_t r = 0; r < rows_; ++r) {
            const mpq_class cb = costs[basis_[r]];
            if (sgn(cb) == 0) continue;
            for (std::size_t j = 0; j <= cols_; ++j)
                if (sgn(t_[r][j]) != 0) obj_[j] -= cb * t_[r][j];
        }
    }

    // Current objective value of the loaded costs.
    mpq_class value() const { return -obj_[cols_]; }

    void pivot(std::size_t r, std::size_t c) {
        std::vector<std::size_t> nz;
        const mpq_class inv = 1 / t_[r][c];
        for (std::size_t j = 0; j <= cols_; ++j) {
            if (sgn(t_[r][j]) == 0) continue;
            t_[r][j] *= inv;
            nz.push_back(j);
        }
        auto eliminate = [&](std::vector<mpq_class>& row) {
            if (sgn(row[c]) == 0) return;
            const mpq_class factor = row[c];
            for (std::size_t j : nz) row[j] -= factor * t_[r][j];
        };
        for (std::size_t i = 0; i < rows_; ++i)
            if (i != r) eliminate(t_[i]);
        eliminate(obj_);
        basis_[r] = c;
        ++pivots_;
    }

    enum class Outcome { Optimal, Unbounded };

    // Bland's rule: lowest-index improving column, ties in the ratio test
    // broken by lowest basic-variable index. Columns >= `allowed` never enter.
    Outcome run(std::size_t allowed) {
        for (;;) {
            std::size_t enter = kNone;
            for (std::size_t j = 0; j < allowed; ++j)
                if (sgn(obj_[j]) < 0) { enter = j; break; }
            if (enter == kNone) return Outcome::Optimal;

            std::size_t leave = kNone;
            mpq_class best;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (sgn(t_[i][enter]) <= 0) continue;
                mpq_class ratio = t_[i][cols_] / t_[i][enter];
                if (leave == kNone || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == kNone) return Outcome::Unbounded;
            pivot(leave, enter);
        }
    }

    std::size_t pivots() const { return pivots_; }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::vector<mpq_class>> t_;
    std::vector<mpq_class> obj_;
    std::vector<std::size_t> basis_;
    std::size_t pivots_ = 0;
};

}  // namespace

LpResult solve_lp(const LinearProgram& lp) {
    lp.validate();
    const std::size_t n = lp.num_vars();
    const std::size_t m = lp.constraints.size();
    const bool maximize = lp.sense == Sense::Maximize;

    // Structural columns: one per nonnegative variable, two per free one.
    std::vector<std::size_t> plus_col(n), minus_col(n, kNone);
    std::size_t cols = 0;
    for (std::size_t j = 0; j < n; ++j) {
        plus_col[j] = cols++;
        if (lp.domain(j) == VarDomain::Free) minus_col[j] = cols++;
    }

    std::vector<std::size_t> slack_col(m, kNone);
    for (std::size_t i = 0; i < m; ++i)
        if (lp.constraints[i].relation != Relation::Equal) slack_col[i] = cols++;

    // Rows whose rhs is negative are negated so that b >= 0.
    std::vector<int> row_sign(m, 1);
    std::vector<bool> needs_artificial(m, false);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& con = lp.constraints[i];
        if (con.rhs.sign() < 0) row_sign[i] = -1;
        const int slack_coeff = con.relation == Relation::LessEqual    ? 1
                                : con.relation == Relation::GreaterEqual ? -1
                                                                         : 0;
        needs_artificial[i] = slack_coeff * row_sign[i] != 1;
    }
    const std::size_t non_artificial = cols;
    std::vector<std::size_t> artificial_col(m, kNone);
    for (std::size_t i = 0; i < m; ++i)
        if (needs_artificial[i]) artificial_col[i] = cols++;

    Tableau tab(m, cols);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& con = lp.constraints[i];
        const int s = row_sign[i];
        for (std::size_t j = 0; j < n; ++j) {
            const mpq_class& a = con.coeffs[j].raw();
            if (sgn(a) == 0) continue;
            tab.at(i, plus_col[j]) = s * a;
            if (minus_col[j] != kNone) tab.at(i, minus_col[j]) = -s * a;
        }
        if (slack_col[i] != kNone)
            tab.at(i, slack_col[i]) = (con.relation == Relation::LessEqual ? 1 : -1) * s;
        tab.rhs(i) = s * con.rhs.raw();
        if (artificial_col[i] != kNone) {
            tab.at(i, artificial_col[i]) = 1;
            tab.basic(i) = artificial_col[i];
        } else {
            tab.basic(i) = slack_col[i];
        }
    }

    LpResult result;

    // Phase 1: drive the artificial variables to zero.
    if (non_artificial < cols) {
        std::vector<mpq_class> phase1(cols, 0);
        for (std::size_t j = non_artificial; j < cols; ++j) phase1[j] = 1;
        tab.set_costs(phase1);
        tab.run(cols);
        if (sgn(tab.value()) > 0) {
            result.status = LpStatus::Infeasible;
            result.pivots = tab.pivots();
            return result;
        }
        // Pivot zero-level artificials out where possible; rows where that is
        // impossible are redundant and keep their artificial basic at zero.
        for (std::size_t r = 0; r < m; ++r) {
            if (tab.basic(r) < non_artificial) continue;
            for (std::size_t j = 0; j < non_artificial; ++j) {
                if (sgn(tab.at(r, j)) != 0) {
                    tab.pivot(r, j);
                    break;
                }
            }
        }
    }

    // Phase 2 on the internal minimization.
    std::vector<mpq_class> costs(cols, 0);
    for (std::size_t j = 0; j < n; ++j) {
        const mpq_class c = maximize ? mpq_class(-lp.objective[j].raw()) : lp.objective[j].raw();
        costs[plus_col[j]] = c;
        if (minus_col[j] != kNone) costs[minus_col[j]] = -c;
    }
    tab.set_costs(costs);
    if (tab.run(non_artificial) == Tableau::Outcome::Unbounded) {
        result.status = LpStatus::Unbounded;
        result.pivots = tab.pivots();
        return result;
    }

    std::vector<mpq_class> z(cols, 0);
    for (std::size_t r = 0; r < m; ++r) z[tab.basic(r)] = tab.rhs(r);
    result.witness.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        mpq_class v = z[plus_col[j]];
        if (minus_col[j] != kNone) v -= z[minus_col[j]];
        result.witness[j] = Rational(v);
    }

    // Multipliers come from the reduced costs of each row's identity column.
    result.duals.resize(m);
    const auto& obj = tab.objective_row();
    for (std::size_t i = 0; i < m; ++i) {
        mpq_class y;
        if (artificial_col[i] != kNone) {
            y = -obj[artificial_col[i]];
        } else {
            // slack coefficient is +1 here, so y_i = cost(0) - reduced cost
            y = -obj[slack_col[i]];
        }
        y *= row_sign[i];
        if (maximize) y = -y;
        result.duals[i] = Rational(y);
    }

    mpq_class value = tab.value();
    if (maximize) value = -value;
    result.optimum = Rational(value);
    result.status = LpStatus::Optimal;
    result.pivots = tab.pivots();
    return result;
}

}  // namespace dricci
