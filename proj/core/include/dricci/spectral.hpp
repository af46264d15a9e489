#pragma once

#include "dricci/operators.hpp"

#include <cstdint>
#include <vector>

namespace dricci {

using DVector = std::vector<double>;
using DMatrix = std::vector<DVector>;

struct SymmetricEigen {
    DVector values;   // ascending
    DMatrix vectors;  // vectors[i] belongs to values[i], unit length
    DVector residuals;
    int sweeps = 0;
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below tol.
SymmetricEigen jacobi_eigen(const DMatrix& a, double tol = 1e-12, int max_sweeps = 100);

/// D^{1/2} (I - Pmean) D^{-1/2} with D = diag(m); symmetric because m(x) Pmean(x,y) is.
DMatrix symmetrized_laplacian(const MarkovData& md);

struct Spectrum {
    DVector eigenvalues;  // ascending, eigenvalues[0] is 0 up to rounding
    DVector residuals;    // |S v - lambda v| per pair
};

Spectrum spectrum(const MarkovData& md);

/// m(boundary of omega) = sum over y in omega, z outside of m(y) Pmean(y,z).
Rational boundary_measure(const MarkovData& md, const std::vector<Vertex>& omega);

struct Isoperimetric {
    Rational value;
    std::vector<Vertex> witness;  // attains value
};

inline constexpr std::size_t kIsoperimetricCap = 22;

/// Exact minimum of m(boundary)/m(omega) over nonempty omega inside the subset.
/// DomainError for an empty or full subset, BudgetExceeded above kIsoperimetricCap vertices.
Isoperimetric dirichlet_isoperimetric(const MarkovData& md, const std::vector<Vertex>& subset);

/// (1/2) sum |f(y)-f(x)|^p m_xy / sum |f|^p m, for nonzero f.
double rayleigh_quotient(const MarkovData& md, const DVector& f, double p);

struct DirichletResult {
    std::vector<Vertex> subset;
    double p = 2.0;
    double value = 0.0;      // eigenvalue for p = 2, best value found by descent otherwise
    DVector minimizer;       // zero outside the subset
    bool exact_path = true;  // p = 2 through the eigen solver
    Isoperimetric isoperimetric;
    double cheeger_bound = 0.0;  // 2^(p-1)/p^p * I^p
};

/// DomainError for p <= 1 or an empty or full subset; BudgetExceeded above
/// kIsoperimetricCap, checked before any solving.
DirichletResult dirichlet_poincare(const MarkovData& md, const std::vector<Vertex>& subset, double p,
                                   std::uint64_t seed = 1);
/// Normalized gradient descent on the p-Rayleigh quotient with backtracking
/// and the given number of restarts. Returns the best value and its function.
std::pair<double, DVector> dirichlet_descent(const MarkovData& md, const std::vector<Vertex>& subset, double p,
                                             std::uint64_t seed = 1, int restarts = 32);

/// Integral over t of m(boundary{f > t}) against (1/2) sum |f(y)-f(z)| m_yz.
IdentitySides coarea_check(const MarkovData& md, const RVector& f);

}  // namespace dricci
