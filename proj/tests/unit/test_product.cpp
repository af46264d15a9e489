#include "corpus.hpp"
#include "dricci/errors.hpp"
#include "dricci/product.hpp"

#include <doctest.h>

using namespace dricci;
using namespace dricci::testing;

namespace {

void require_identities(const ProductContext& pc) {
    const auto report = check_product_identities(pc, 5);
    CHECK(report.checks.size() == 10);
    for (const auto& c : report.checks) {
        CAPTURE(c.name);
        CAPTURE(c.detail);
        CHECK(c.holds);
    }
    CHECK(report.all_hold());
}

void require_theorem(const ProductContext& pc) {
    for (const auto& c : check_product_curvature_all(pc)) {
        CAPTURE(c.x);
        CAPTURE(c.y);
        CHECK(c.direct == c.predicted);
    }
}

}  // namespace

TEST_CASE("construction") {
    const ProductSpec spec(gen_cycle(3), gen_cycle(3), Rational(1), Rational(1));
    const auto g = cartesian_product(spec);
    REQUIRE(g.size() == 9);
    for (Vertex v = 0; v < 9; ++v) CHECK(g.out_neighbors(v).size() == 2);
    CHECK(g.label(spec.index(1, 2)) == "(x2,x3)");
    CHECK(classify(g).eulerian);
    CHECK_THROWS_AS(ProductSpec(gen_cycle(3), gen_cycle(3), Rational(0), Rational(1)), DomainError);
    CHECK_THROWS_AS(ProductSpec(gen_cycle(3), gen_cycle(3), Rational(1), Rational(-1, 2)), DomainError);
}

TEST_CASE("kernel examples") {
    ProductContext c3c4(ProductSpec(gen_cycle(3), gen_cycle(4), Rational(1), Rational(2)));
    for (const auto& m : c3c4.product.markov.m) CHECK(m == Rational(1, 12));
    for (Vertex v = 0; v < 12; ++v)
        CHECK(c3c4.product.graph.vertex_weight(v) ==
              Rational(3) * c3c4.first.graph.vertex_weight(c3c4.spec.first_of(v)) *
                  c3c4.second.graph.vertex_weight(c3c4.spec.second_of(v)));

    ProductContext k3c3(ProductSpec(gen_complete(3), gen_cycle(3), Rational(1), Rational(1)));
    const auto mc = mean_curvatures(k3c3.product);
    for (const auto& h : mc.H) CHECK(h == Rational(-3, 2));
    for (Vertex u = 0; u < 9; ++u)
        for (Vertex v = 0; v < 9; ++v) {
            const auto& s = k3c3.spec;
            const Rational want = Rational(1, 2) * k3c3.first.markov.Pmean[s.first_of(u)][s.first_of(v)] *
                                      (s.second_of(u) == s.second_of(v) ? Rational(1) : Rational(0)) +
                                  Rational(1, 2) * k3c3.second.markov.Pmean[s.second_of(u)][s.second_of(v)] *
                                      (s.first_of(u) == s.first_of(v) ? Rational(1) : Rational(0));
            CHECK(k3c3.product.markov.Pmean[u][v] == want);
        }
}

TEST_CASE("curvature examples") {
    ProductContext c4c4(ProductSpec(gen_cycle(4), gen_cycle(4), Rational(1), Rational(1)));
    const auto& s = c4c4.spec;
    CHECK(ricci(c4c4.product, s.index(0, 0), s.index(1, 0)).kappa == Rational(0));

    ProductContext k3k3(ProductSpec(gen_complete(3), gen_complete(3), Rational(1), Rational(1)));
    const auto& t = k3k3.spec;
    CHECK(ricci(k3k3.product, t.index(0, 0), t.index(1, 0)).kappa == Rational(3, 4));
    CHECK(ricci(k3k3.product, t.index(1, 0), t.index(0, 0)).kappa == Rational(3, 4));

    ProductContext k3c4(ProductSpec(gen_complete(3), gen_cycle(4), Rational(1), Rational(3)));
    const auto& u = k3c4.spec;
    const auto c = check_product_curvature(k3c4, u.index(0, 0), u.index(1, 1));
    CHECK(c.predicted == Rational(3, 8) * ricci(k3c4.first, 0, 1).kappa + Rational(1, 8) * ricci(k3c4.second, 0, 1).kappa);
    CHECK(c.holds());
    CHECK_THROWS_AS(check_product_curvature(k3c4, 0, 0), DomainError);
}

TEST_CASE("identities and theorem on the reference products") {
    const std::vector<std::pair<Rational, Rational>> weights{
        {Rational(1), Rational(1)}, {Rational(1), Rational(3)}, {Rational(2, 3), Rational(5, 7)}};
    for (const auto& [a, b] : weights) {
        CAPTURE(a.str());
        CAPTURE(b.str());
        ProductContext c3c4(ProductSpec(gen_cycle(3), gen_cycle(4), a, b));
        require_identities(c3c4);
        require_theorem(c3c4);
        ProductContext k3c3(ProductSpec(gen_complete(3), gen_cycle(3), a, b));
        require_identities(k3c3);
        require_theorem(k3c3);
    }
}

TEST_CASE("identities for random weights and weighted factors") {
    Rng rng(41);
    const std::vector<WeightedDigraph> factors{gen_cycle(3), gen_complete(3), random_digraph(3, 7), random_digraph(4, 13),
                                               undirected_triangle()};
    for (std::size_t i = 0; i < factors.size(); ++i)
        for (std::size_t j = 0; j < factors.size(); ++j) {
            CAPTURE(i);
            CAPTURE(j);
            for (int t = 0; t < 10; ++t) {
                const Rational a = rng.rational(1, 9, 5);
                const Rational b = rng.rational(1, 9, 5);
                ProductContext pc(ProductSpec(factors[i], factors[j], a, b));
                CHECK(check_product_identities(pc, static_cast<std::uint64_t>(t), 3).all_hold());
            }
        }
}

TEST_CASE("theorem on small weighted factor pairs") {
    const std::vector<WeightedDigraph> factors{random_digraph(3, 5), random_digraph(4, 19), gen_cycle(4)};
    for (std::size_t i = 0; i < factors.size(); ++i)
        for (std::size_t j = i; j < factors.size(); ++j) {
            CAPTURE(i);
            CAPTURE(j);
            require_theorem(ProductContext(ProductSpec(factors[i], factors[j], Rational(3, 2), Rational(2, 5))));
        }
}

TEST_CASE("Eulerian factors with equal weights give an Eulerian product") {
    const std::vector<WeightedDigraph> factors{gen_cycle(3), gen_cycle(5), gen_complete(4), undirected_square()};
    for (const auto& g : factors)
        for (const auto& h : factors) {
            const auto p = cartesian_product(ProductSpec(g, h, Rational(2), Rational(2)));
            for (Vertex v = 0; v < p.size(); ++v) CHECK(p.out_neighbors(v).size() == p.in_neighbors(v).size());
        }
    CHECK(classify(cartesian_product(ProductSpec(gen_cycle(3), gen_cycle(5), Rational(1), Rational(1)))).eulerian);
}
