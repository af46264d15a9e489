#include "corpus.hpp"
#include "dricci/curvature.hpp"
#include "dricci/errors.hpp"

#include <doctest.h>

using namespace dricci;
using namespace dricci::testing;

namespace {

Rational complete_value(std::size_t n, std::size_t i) {
    // kappa(x1, x_i) on the directed complete graph, 1-based i
    if (n == 3) return Rational(3, 2);
    if (n == 4) return i == 3 ? Rational(3, 2) : Rational(1);
    if (n == 5) return i == 2 ? Rational(1) : Rational(7, 6);
    if (i == 3 || i == n - 1) return Rational(1) + Rational(1, 2 * static_cast<long>(n - 2));
    return Rational(1);
}

}  // namespace

TEST_CASE("directed complete graphs") {
    for (std::size_t n : {3, 4, 5, 6, 7, 8}) {
        CAPTURE(n);
        GraphContext ctx(gen_complete(n));
        for (std::size_t i = 2; i <= n - 1; ++i) {
            CAPTURE(i);
            if (!ctx.graph.has_edge(0, i - 1)) continue;
            CHECK(ricci(ctx, 0, i - 1).kappa == complete_value(n, i));
        }
        const auto mc = mean_curvatures(ctx);
        const Rational h = -(Rational(1) + Rational(1, 2 * static_cast<long>(n - 2)));
        for (Vertex x = 0; x < n; ++x) {
            CHECK(mc.H[x] == h);
            CHECK(mc.Hrev[x] == h);
        }
    }
    GraphContext k3(gen_complete(3));
    const auto rep = curvature_report(k3, Scope::All);
    CHECK(rep.edge_min == Rational(3, 2));
    REQUIRE(rep.global_min);
    CHECK(*rep.global_min == Rational(3, 2));
}

TEST_CASE("complete graph edge values for n = 6") {
    GraphContext ctx(gen_complete(6));
    const auto rep = curvature_report(ctx, Scope::Edges);
    for (const auto& p : rep.pairs) CHECK((p.kappa == Rational(1) || p.kappa == Rational(9, 8)));
}

TEST_CASE("directed cycles") {
    for (std::size_t n : {4, 5, 6, 8}) {
        CAPTURE(n);
        GraphContext ctx(gen_cycle(n));
        const auto rep = curvature_report(ctx, Scope::All);
        CHECK(rep.edge_min == Rational(0));
        for (const auto& p : rep.pairs) {
            if (ctx.graph.has_edge(p.x, p.y)) CHECK(p.kappa == Rational(0));
            CHECK(p.kappa.sign() >= 0);
        }
        const auto mc = mean_curvatures(ctx);
        for (Vertex x = 0; x < n; ++x) {
            CHECK(mc.H[x] == Rational(-static_cast<long>(n), 2));
            CHECK(mc.Hrev[x] == Rational(-static_cast<long>(n), 2));
        }
    }
}

TEST_CASE("kappa_eps basics") {
    GraphContext c4(gen_cycle(4));
    CHECK(kappa_eps(c4, 0, 1, Rational(0)) == Rational(0));
    CHECK(kappa_eps(c4, 0, 1, Rational(1, 2)) == Rational(0));
    CHECK_THROWS_AS(kappa_eps(c4, 0, 0, Rational(1, 2)), DomainError);
    CHECK_THROWS_AS(kappa_eps(c4, 0, 1, Rational(2)), DomainError);
    GraphContext k3(gen_complete(3));
    CHECK(kappa_eps(k3, 0, 1, Rational(1, 4)) / Rational(1, 4) >= kappa_eps(k3, 0, 1, Rational(1, 2)) / Rational(1, 2));
}

TEST_CASE("limit-free formula agrees with the limit") {
    std::vector<WeightedDigraph> graphs{gen_complete(3), gen_complete(4), gen_complete(5), gen_cycle(4), gen_cycle(5),
                                        random_digraph(5, 3), undirected_square()};
    for (const auto& g : graphs) {
        GraphContext ctx(g);
        for (Vertex x = 0; x < g.size(); ++x)
            for (Vertex y = 0; y < g.size(); ++y) {
                if (x == y) continue;
                CAPTURE(x);
                CAPTURE(y);
                const auto r = ricci(ctx, x, y);
                CHECK(r.kappa == ricci_via_limit(ctx, x, y));
                CHECK(is_one_lipschitz(ctx.dist, r.witness));
                CHECK(r.witness[y] - r.witness[x] == Rational(ctx.dist(x, y)));
            }
    }
}

TEST_CASE("concavity, monotonicity, boundedness") {
    Rng rng(23);
    for (const auto& [name, g] : corpus()) {
        if (g.size() > 6) continue;
        CAPTURE(name);
        GraphContext ctx(g);
        const auto mc = mean_curvatures(ctx);
        for (Vertex x = 0; x < g.size(); ++x)
            for (Vertex y = 0; y < g.size(); ++y) {
                if (x == y) continue;
                Rational previous;
                bool first = true;
                for (const Rational eps : {Rational(1), Rational(1, 2), Rational(1, 4), Rational(1, 8)}) {
                    const Rational ratio = kappa_eps(ctx, x, y, eps) / eps;
                    CHECK(ratio <= mc.Hmix[x][y] / Rational(ctx.dist(x, y)));
                    if (!first) CHECK(ratio >= previous);
                    previous = ratio;
                    first = false;
                }
            }
        for (int t = 0; t < 5; ++t) {
            const Vertex x = static_cast<Vertex>(rng.integer(0, static_cast<long>(g.size()) - 1));
            const Vertex y = (x + 1 + static_cast<Vertex>(rng.integer(0, static_cast<long>(g.size()) - 2))) % g.size();
            Rational e0 = rng.rational(0, 12, 1) / Rational(12);
            Rational e2 = rng.rational(0, 12, 1) / Rational(12);
            if (e2 < e0) std::swap(e0, e2);
            if (e0 == e2) continue;
            const Rational s = rng.rational(1, 9, 1) / Rational(10);
            const Rational e1 = e0 + s * (e2 - e0);
            const Rational interp = (Rational(1) - s) * kappa_eps(ctx, x, y, e0) + s * kappa_eps(ctx, x, y, e2);
            CHECK(kappa_eps(ctx, x, y, e1) >= interp);
        }
    }
}

TEST_CASE("local to global and mixed mean curvature") {
    for (const auto& [name, g] : corpus()) {
        CAPTURE(name);
        GraphContext ctx(g);
        const auto rep = curvature_report(ctx, Scope::All);
        REQUIRE(rep.global_min);
        CHECK(*rep.global_min >= rep.edge_min);
        const auto mc = mean_curvatures(ctx);
        for (Vertex x = 0; x < g.size(); ++x) {
            CHECK(mc.H[x] <= Rational(-1));
            CHECK(mc.Hrev[x] <= Rational(-1));
            for (Vertex y = 0; y < g.size(); ++y) CHECK(mc.Hmix[x][y] >= Rational(2));
        }
        for (const auto& p : rep.pairs) CHECK(p.kappa <= mc.Hmix[p.x][p.y] / Rational(p.distance));
        if (classify(g).undirected)
            for (Vertex x = 0; x < g.size(); ++x) {
                CHECK(mc.H[x] == Rational(-1));
                CHECK(mc.Hrev[x] == Rational(-1));
            }
    }
}

TEST_CASE("report scopes and threads") {
    GraphContext ctx(random_digraph(6, 29));
    const auto one = curvature_report(ctx, Scope::All, 1);
    const auto four = curvature_report(ctx, Scope::All, 4);
    REQUIRE(one.pairs.size() == 30);
    for (std::size_t i = 0; i < one.pairs.size(); ++i) CHECK(one.pairs[i].kappa == four.pairs[i].kappa);
    const auto edges = curvature_report(ctx, Scope::Edges, 2);
    CHECK(edges.pairs.size() == ctx.graph.edge_count());
    CHECK_FALSE(edges.global_min);
    CHECK(edges.edge_min == one.edge_min);
    for (const auto& p : edges.pairs) CHECK(one.kappa(p.x, p.y) == p.kappa);
}

TEST_CASE("bounds") {
    GraphContext k3(gen_complete(3));
    CHECK(upper_bound(k3, 0, 1).bound == Rational(3, 2));
    CHECK(lower_bound_edge(k3, 0, 1) <= Rational(3, 2));
    CHECK(lower_bound_regular(k3, 0, 1) <= Rational(3, 2));
    GraphContext c4(gen_cycle(4));
    CHECK(upper_bound(c4, 0, 1).bound == Rational(1));
    CHECK(lower_bound_regular(c4, 0, 1) <= Rational(0));
    CHECK_THROWS_AS(upper_bound(c4, 1, 0), Error);
    CHECK_THROWS_AS(lower_bound_edge(c4, 0, 2), Error);
    GraphContext irregular(random_digraph(6, 11));
    const auto e = irregular.graph.edges().front();
    try {
        (void)lower_bound_regular(irregular, e.from, e.to);
        FAIL("expected NotRegular");
    } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::NotRegular);
    }

    // undirected edges: the mean-curvature term of the edge bound vanishes
    GraphContext sq(undirected_square());
    const auto mc = mean_curvatures(sq);
    CHECK(Rational(1) + Rational(sq.dist(1, 0)) - mc.Hmix[1][0] == Rational(0));

    for (const auto& [name, g] : corpus()) {
        CAPTURE(name);
        GraphContext ctx(g);
        const bool regular = classify(g).regular_degree.has_value();
        for (const auto& edge : g.edges()) {
            const Rational k = ricci(ctx, edge.from, edge.to).kappa;
            const auto ub = upper_bound(ctx, edge.from, edge.to);
            CHECK(lower_bound_edge(ctx, edge.from, edge.to) <= k);
            CHECK(lower_bound_general(ctx, edge.from, edge.to) == lower_bound_edge(ctx, edge.from, edge.to));
            CHECK(k <= ub.bound);
            CHECK(ub.bound <= ub.simple);
            if (regular) CHECK(lower_bound_regular(ctx, edge.from, edge.to) <= k);
        }
        if (g.size() <= 6)
            for (Vertex x = 0; x < g.size(); ++x)
                for (Vertex y = 0; y < g.size(); ++y)
                    if (x != y) CHECK(lower_bound_general(ctx, x, y) <= ricci(ctx, x, y).kappa);
    }
}

TEST_CASE("variant curvatures") {
    for (auto g : {undirected_triangle(), undirected_square(), petersen_subgraph()}) {
        GraphContext ctx(g);
        for (const auto& e : g.edges()) {
            const Rational k = ricci(ctx, e.from, e.to).kappa;
            for (auto v : {Variant::OutOut, Variant::InOut, Variant::OutIn, Variant::InIn})
                CHECK(variant_curvature(ctx, e.from, e.to, v) == k);
        }
    }
    GraphContext c4(gen_cycle(4));
    const Rational oo = variant_curvature(c4, 0, 1, Variant::OutOut);
    // out-out on the cycle: both walks step forward, so transport costs stay at 1
    CHECK(oo == Rational(0));
    CHECK(std::string(variant_name(Variant::InOut)) == "in-out");
}
