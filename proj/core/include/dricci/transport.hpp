#pragma once

#include "dricci/digraph.hpp"
#include "dricci/lp.hpp"
#include "dricci/markov.hpp"

#include <map>

namespace dricci {

/// Transport plan; pi(x,y) is the mass sent from x to y.
struct Coupling {
    RMatrix pi;

    [[nodiscard]] bool couples(const ProbMeasure& from, const ProbMeasure& to) const;
    [[nodiscard]] Rational cost(const DistanceMatrix& d) const;
};

struct TransportResult {
    Rational cost;
    Coupling coupling;
    /// 1-Lipschitz potential f with sum f (nu1 - nu0) == cost.
    RVector potential;
};

/// f(w) - f(v) <= d(v,w) for every ordered pair.
bool is_one_lipschitz(const DistanceMatrix& d, const RVector& f);

/// Pairs (v,w) with d(v,w) = 1. For hop distances these constraints alone
/// imply the full Lipschitz condition, by summing along shortest paths.
std::vector<std::pair<Vertex, Vertex>> lipschitz_generators(const DistanceMatrix& d);

/// Optimizes constant + sum c(v) f(v) over 1-Lipschitz f with some values
/// fixed. Returns the optimal value and a full optimizer. Throws Internal if
/// the program is infeasible or unbounded.
struct LipschitzOptimum {
    Rational value;
    RVector f;
};
LipschitzOptimum optimize_lipschitz(const DistanceMatrix& d, Sense sense, const RVector& c,
                                    const Rational& constant,
                                    const std::map<Vertex, Rational>& fixed);

/// Exact W(nu0, nu1) with an optimal coupling and a dual potential; the two
/// objectives are compared and a mismatch throws Internal.
TransportResult wasserstein(const DistanceMatrix& d, const ProbMeasure& nu0, const ProbMeasure& nu1);

/// Enumerates integer potentials with values in {0..diam}. Needs n <= 7 and
/// diam <= 6, DomainError otherwise.
Rational wasserstein_bruteforce(const DistanceMatrix& d, const ProbMeasure& nu0,
                                const ProbMeasure& nu1);

}  // namespace dricci
