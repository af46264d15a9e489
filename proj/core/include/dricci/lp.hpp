#pragma once

#include "dricci/rational.hpp"

#include <vector>

namespace dricci {

enum class Relation { LessEqual, Equal, GreaterEqual };
enum class Sense { Minimize, Maximize };
enum class VarDomain { NonNegative, Free };

struct Constraint {
    RVector coeffs;
    Relation relation = Relation::LessEqual;
    Rational rhs;
};

/// A linear program over rational data.
///
/// Variables are nonnegative unless `domains` marks them Free; an empty
/// `domains` vector means every variable is nonnegative.
struct LinearProgram {
    Sense sense = Sense::Minimize;
    RVector objective;
    std::vector<Constraint> constraints;
    std::vector<VarDomain> domains;

    [[nodiscard]] std::size_t num_vars() const { return objective.size(); }
    [[nodiscard]] VarDomain domain(std::size_t j) const {
        return domains.empty() ? VarDomain::NonNegative : domains[j];
    }
    /// Throws DomainError when coefficient vectors disagree in dimension.
    void validate() const;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rational optimum;
    RVector witness;  // primal optimizer, one entry per variable
    /// One multiplier per constraint with rhs . duals == optimum. For a
    /// minimization, <= rows carry multipliers <= 0 and >= rows >= 0; the
    /// signs flip for a maximization.
    RVector duals;
    std::size_t pivots = 0;
};

/// Exact two-phase tableau simplex with Bland's anti-cycling rule.
LpResult solve_lp(const LinearProgram& lp);

}  // namespace dricci
