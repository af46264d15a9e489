#include "dricci/linalg.hpp"

#include "dricci/errors.hpp"

namespace dricci {

LinearSolveResult solve_linear_system(const RMatrix& a, const RVector& b) {
    const std::size_t m = a.size();
    if (b.size() != m) throw DomainError("solve_linear_system: row count mismatch");
    const std::size_t n = m == 0 ? 0 : a.front().size();
    for (const auto& row : a)
        if (row.size() != n) throw DomainError("solve_linear_system: ragged matrix");

    // Augmented matrix [A | b].
    RMatrix t(m, RVector(n + 1));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
        t[i][n] = b[i];
    }

    std::size_t rank = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t col = 0; col < n && rank < m; ++col) {
        std::size_t pr = rank;
        while (pr < m && t[pr][col].is_zero()) ++pr;
        if (pr == m) continue;
        std::swap(t[pr], t[rank]);
        const Rational inv = Rational(1) / t[rank][col];
        for (std::size_t j = col; j <= n; ++j) t[rank][j] *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == rank || t[i][col].is_zero()) continue;
            const Rational factor = t[i][col];
            for (std::size_t j = col; j <= n; ++j)
                if (!t[rank][j].is_zero()) t[i][j] -= factor * t[rank][j];
        }
        pivot_col.push_back(col);
        ++rank;
    }

    // A zero row with a nonzero right-hand side means inconsistency.
    for (std::size_t i = rank; i < m; ++i)
        if (!t[i][n].is_zero()) return {SolveStatus::NoSolution, {}};
    if (rank < n) return {SolveStatus::NonUnique, {}};

    RVector x(n);
    for (std::size_t r = 0; r < rank; ++r) x[pivot_col[r]] = t[r][n];
    return {SolveStatus::Unique, std::move(x)};
}

RVector multiply(const RMatrix& a, const RVector& x) {
    RVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = dot(a[i], x);
    return out;
}

}  // namespace dricci
