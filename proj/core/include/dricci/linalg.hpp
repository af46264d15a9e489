#pragma once

#include "dricci/rational.hpp"

namespace dricci {

enum class SolveStatus { Unique, NoSolution, NonUnique };

struct LinearSolveResult {
    SolveStatus status = SolveStatus::NoSolution;
    RVector x;  // populated only when status == Unique
};

/// Exact Gauss-Jordan elimination on an m x n system with m >= n.
/// Overdetermined systems are accepted when consistent.
LinearSolveResult solve_linear_system(const RMatrix& a, const RVector& b);

/// Matrix-vector product.
RVector multiply(const RMatrix& a, const RVector& x);

}  // namespace dricci
