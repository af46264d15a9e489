#pragma once

#include "dricci/digraph.hpp"
#include "dricci/markov.hpp"
#include "dricci/transport.hpp"

#include <optional>

namespace dricci {

/// A graph together with the distance matrix and kernels every curvature
/// quantity needs. Immutable once built.
struct GraphContext {
    WeightedDigraph graph;
    DistanceMatrix dist;
    MarkovData markov;

    explicit GraphContext(WeightedDigraph g);
    [[nodiscard]] std::size_t size() const { return graph.size(); }
};

struct MeanCurvatures {
    RVector H;      // H_x = -sum_y Pmean(x,y) d(x,y)
    RVector Hrev;   // reverse: -sum_y Pmean(x,y) d(y,x)
    RMatrix Hmix;   // H(x,y) = -(H_x + Hrev_y)
};

MeanCurvatures mean_curvatures(const GraphContext& ctx);

/// 1 - W(nu_x^eps, nu_y^eps) / d(x,y).
Rational kappa_eps(const GraphContext& ctx, Vertex x, Vertex y, const Rational& eps);

struct RicciResult {
    Rational kappa;
    /// 1-Lipschitz optimizer with f(x) = 0 and f(y) = d(x,y).
    RVector witness;
};

/// Limit-free LP: inf of (Lf(y) - Lf(x)) / d(x,y) over 1-Lipschitz f with
/// f(y) - f(x) = d(x,y).
RicciResult ricci(const GraphContext& ctx, Vertex x, Vertex y);

/// Halves eps from 1/2 until kappa_eps / eps repeats exactly; concavity of
/// kappa_eps with kappa_0 = 0 makes the repeated value the limit. Throws
/// BudgetExceeded past eps = 2^-20.
Rational ricci_via_limit(const GraphContext& ctx, Vertex x, Vertex y);

enum class Scope { Edges, All };

struct PairCurvature {
    Vertex x = 0;
    Vertex y = 0;
    int distance = 0;
    Rational kappa;
    RVector witness;
};

struct CurvatureReport {
    Scope scope = Scope::Edges;
    std::vector<PairCurvature> pairs;  // row-major over (x,y)
    Rational edge_min;
    std::optional<Rational> global_min;  // set for Scope::All

    /// Looks up kappa(x,y); throws DomainError if the pair was not computed.
    [[nodiscard]] const Rational& kappa(Vertex x, Vertex y) const;
};

/// Edges or every ordered pair, evaluated on `threads` workers. The result
/// does not depend on the thread count.
CurvatureReport curvature_report(const GraphContext& ctx, Scope scope, unsigned threads = 1);

/// Lower bound valid for every pair x != y.
Rational lower_bound_general(const GraphContext& ctx, Vertex x, Vertex y);
/// Specialization to an edge x -> y; NotAnEdge otherwise.
Rational lower_bound_edge(const GraphContext& ctx, Vertex x, Vertex y);
/// Inscribed-radius bound for r-regular graphs; NotRegular / NotAnEdge.
Rational lower_bound_regular(const GraphContext& ctx, Vertex x, Vertex y);

struct UpperBound {
    Rational bound;   // Pmean(x,y) + Pmean(y,x) + min(common mass from x, from y)
    Rational simple;  // 1 + Pmean(y,x)
};
/// NotAnEdge unless x -> y.
UpperBound upper_bound(const GraphContext& ctx, Vertex x, Vertex y);

enum class Variant { OutOut, InOut, OutIn, InIn };
const char* variant_name(Variant v);

/// Curvature with the lazy walks built on P (out) or on normalized
/// in-weights (in); the first word refers to x, the second to y.
Rational variant_curvature(const GraphContext& ctx, Vertex x, Vertex y, Variant kind);

}  // namespace dricci
