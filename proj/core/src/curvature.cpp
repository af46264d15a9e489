#include "dricci/curvature.hpp"

#include "dricci/errors.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <thread>

namespace dricci {

namespace {

void require_distinct(const GraphContext& ctx, Vertex x, Vertex y) {
    if (x >= ctx.size() || y >= ctx.size()) throw DomainError("vertex out of range");
    if (x == y) throw DomainError("curvature needs distinct vertices, got " + ctx.graph.label(x) + " twice");
}

void require_edge(const GraphContext& ctx, Vertex x, Vertex y) {
    require_distinct(ctx, x, y);
    if (!ctx.graph.has_edge(x, y))
        throw Error(ErrorKind::NotAnEdge, ctx.graph.label(x) + "→" + ctx.graph.label(y) + " is not an edge");
}

constexpr int kMaxHalvings = 20;

// Stabilizes kappa_eps / eps along eps = 2^-k.
Rational stabilize(const std::function<Rational(const Rational&)>& kappa_at) {
    Rational eps(1, 2);
    Rational previous = kappa_at(eps) / eps;
    for (int k = 2; k <= kMaxHalvings; ++k) {
        eps /= Rational(2);
        Rational current = kappa_at(eps) / eps;
        if (current == previous) return current;
        previous = std::move(current);
    }
    throw BudgetExceeded("kappa_eps / eps did not stabilize by eps = 2^-" + std::to_string(kMaxHalvings));
}

Rational kappa_from_measures(const GraphContext& ctx, Vertex x, Vertex y, const ProbMeasure& a,
                             const ProbMeasure& b) {
    const Rational w = wasserstein(ctx.dist, a, b).cost;
    return Rational(1) - w / Rational(ctx.dist(x, y));
}

}  // namespace

GraphContext::GraphContext(WeightedDigraph g)
    : graph(std::move(g)), dist(distances(graph)), markov(build_markov(graph)) {}

MeanCurvatures mean_curvatures(const GraphContext& ctx) {
    const std::size_t n = ctx.size();
    const auto& pm = ctx.markov.Pmean;
    MeanCurvatures mc;
    mc.H.assign(n, Rational(0));
    mc.Hrev.assign(n, Rational(0));
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = 0; y < n; ++y) {
            if (pm[x][y].is_zero()) continue;
            mc.H[x] -= pm[x][y] * Rational(ctx.dist(x, y));
            mc.Hrev[x] -= pm[x][y] * Rational(ctx.dist(y, x));
        }
    mc.Hmix = zero_matrix(n, n);
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = 0; y < n; ++y) mc.Hmix[x][y] = -(mc.H[x] + mc.Hrev[y]);
    return mc;
}

Rational kappa_eps(const GraphContext& ctx, Vertex x, Vertex y, const Rational& eps) {
    require_distinct(ctx, x, y);
    return kappa_from_measures(ctx, x, y, lazy_measure(ctx.markov, x, eps), lazy_measure(ctx.markov, y, eps));
}

RicciResult ricci(const GraphContext& ctx, Vertex x, Vertex y) {
    require_distinct(ctx, x, y);
    const std::size_t n = ctx.size();
    const auto& pm = ctx.markov.Pmean;
    const Rational dxy(ctx.dist(x, y));

    // d(x,y) * objective = Lf(y) - Lf(x) = f(y) - f(x) - sum_z (Pmean(y,z) - Pmean(x,z)) f(z)
    RVector c(n, Rational(0));
    c[y] += Rational(1);
    c[x] -= Rational(1);
    for (Vertex z = 0; z < n; ++z) c[z] -= pm[y][z] - pm[x][z];
    for (auto& v : c) v /= dxy;

    auto opt = optimize_lipschitz(ctx.dist, Sense::Minimize, c, Rational(0), {{x, Rational(0)}, {y, dxy}});
    return {std::move(opt.value), std::move(opt.f)};
}

Rational ricci_via_limit(const GraphContext& ctx, Vertex x, Vertex y) {
    require_distinct(ctx, x, y);
    return stabilize([&](const Rational& eps) { return kappa_eps(ctx, x, y, eps); });
}

const Rational& CurvatureReport::kappa(Vertex x, Vertex y) const {
    auto it = std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(x, y),
                               [](const PairCurvature& p, const std::pair<Vertex, Vertex>& key) {
                                   return std::make_pair(p.x, p.y) < key;
                               });
    if (it == pairs.end() || it->x != x || it->y != y)
        throw DomainError("curvature of pair (" + std::to_string(x) + "," + std::to_string(y) + ") not computed");
    return it->kappa;
}

CurvatureReport curvature_report(const GraphContext& ctx, Scope scope, unsigned threads) {
    const std::size_t n = ctx.size();
    CurvatureReport report;
    report.scope = scope;
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = 0; y < n; ++y) {
            if (x == y) continue;
            if (scope == Scope::Edges && !ctx.graph.has_edge(x, y)) continue;
            report.pairs.push_back({x, y, ctx.dist(x, y), Rational(0), {}});
        }

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < report.pairs.size(); i = next++) {
            auto& p = report.pairs[i];
            auto r = ricci(ctx, p.x, p.y);
            p.kappa = std::move(r.kappa);
            p.witness = std::move(r.witness);
        }
    };
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(report.pairs.size())));
    if (threads == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        std::exception_ptr failure;
        std::mutex failure_mutex;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                try {
                    work();
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    next = report.pairs.size();
                }
            });
        for (auto& th : pool) th.join();
        if (failure) std::rethrow_exception(failure);
    }

    bool have_edge = false;
    for (const auto& p : report.pairs) {
        if (ctx.graph.has_edge(p.x, p.y)) {
            if (!have_edge || p.kappa < report.edge_min) report.edge_min = p.kappa;
            have_edge = true;
        }
        if (scope == Scope::All && (!report.global_min || p.kappa < *report.global_min)) report.global_min = p.kappa;
    }
    return report;
}

Rational lower_bound_general(const GraphContext& ctx, Vertex x, Vertex y) {
    require_distinct(ctx, x, y);
    const auto& pm = ctx.markov.Pmean;
    const auto mc = mean_curvatures(ctx);
    const Rational dxy(ctx.dist(x, y));
    const Rational dyx(ctx.dist(y, x));
    const Rational dmax(ctx.dist.symmetric_max(x, y));
    const Rational both = pm[x][y] + pm[y][x];

    return -(Rational(2) * dmax / dxy) * positive_part(Rational(1) - both) +
           (dxy + dmax - mc.Hmix[y][x]) / dxy - (dmax - dyx) / dxy * both;
}

Rational lower_bound_edge(const GraphContext& ctx, Vertex x, Vertex y) {
    require_edge(ctx, x, y);
    const auto& pm = ctx.markov.Pmean;
    const auto mc = mean_curvatures(ctx);
    const Rational dyx(ctx.dist(y, x));
    return -Rational(2) * dyx * positive_part(Rational(1) - pm[x][y] - pm[y][x]) +
           (Rational(1) + dyx - mc.Hmix[y][x]);
}

Rational lower_bound_regular(const GraphContext& ctx, Vertex x, Vertex y) {
    const auto cls = classify(ctx.graph);
    if (!cls.regular_degree) throw Error(ErrorKind::NotRegular, "graph is not regular");
    require_edge(ctx, x, y);
    const Rational r(static_cast<long>(*cls.regular_degree));
    const auto& in_y = ctx.graph.in_neighbors(y);
    Rational inrad_sum;
    for (Vertex z : ctx.graph.out_neighbors(x))
        if (std::find(in_y.begin(), in_y.end(), z) == in_y.end())
            inrad_sum += Rational(inscribed_radius(ctx.dist, z));
    return (Rational(1) - r) / (Rational(2) * r) - inrad_sum / (Rational(2) * r);
}

UpperBound upper_bound(const GraphContext& ctx, Vertex x, Vertex y) {
    require_edge(ctx, x, y);
    const auto& pm = ctx.markov.Pmean;
    const auto nx = neighborhoods(ctx.graph, x).all;
    const auto ny = neighborhoods(ctx.graph, y).all;
    std::vector<Vertex> common;
    std::set_intersection(nx.begin(), nx.end(), ny.begin(), ny.end(), std::back_inserter(common));
    Rational from_x, from_y;
    for (Vertex z : common) {
        from_x += pm[x][z];
        from_y += pm[y][z];
    }
    return {pm[x][y] + pm[y][x] + min(from_x, from_y), Rational(1) + pm[y][x]};
}

const char* variant_name(Variant v) {
    switch (v) {
        case Variant::OutOut: return "out-out";
        case Variant::InOut: return "in-out";
        case Variant::OutIn: return "out-in";
        case Variant::InIn: return "in-in";
    }
    return "?";
}

Rational variant_curvature(const GraphContext& ctx, Vertex x, Vertex y, Variant kind) {
    require_distinct(ctx, x, y);
    const bool x_in = kind == Variant::InOut || kind == Variant::InIn;
    const bool y_in = kind == Variant::OutIn || kind == Variant::InIn;
    const RVector step_x = x_in ? inner_step(ctx.graph, x) : outer_step(ctx.graph, x);
    const RVector step_y = y_in ? inner_step(ctx.graph, y) : outer_step(ctx.graph, y);
    return stabilize([&](const Rational& eps) {
        return kappa_from_measures(ctx, x, y, lazy_from_row(step_x, x, eps), lazy_from_row(step_y, y, eps));
    });
}

}  // namespace dricci
