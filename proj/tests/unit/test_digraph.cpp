#include "corpus.hpp"
#include "dricci/errors.hpp"
#include "dricci/transport.hpp"

#include <doctest.h>

using namespace dricci;
using namespace dricci::testing;

TEST_CASE("edge list parsing") {
    auto k2 = parse_edge_list("a\tb\t1\nb\ta\t1");
    CHECK(k2.size() == 2);
    CHECK(classify(k2).undirected);

    auto c3 = parse_edge_list("a\tb\t1\nb\tc\t1\nc\ta\t1\n");
    CHECK(c3.size() == 3);
    CHECK(c3.edge_count() == 3);
    CHECK(c3.label(2) == "c");

    auto weighted = parse_edge_list("# comment\nu\tv\t3/2\n\nv\tu\t0.25\r\n");
    CHECK(weighted.weight(0, 1) == Rational(3, 2));
    CHECK(weighted.weight(1, 0) == Rational(1, 4));
    CHECK(parse_edge_list(to_edge_list(weighted)).weights() == weighted.weights());
}

TEST_CASE("edge list errors") {
    try {
        parse_edge_list("a\tb\t1");
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotStronglyConnected);
        CHECK(std::string(e.what()) == "NotStronglyConnected: no path b→a");
    }
    try {
        parse_edge_list("a\tb\t1\nb\ta\t1\nb\tb\t1\n");
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SelfLoop);
    }
    auto parse_line = [](const char* text) {
        try {
            parse_edge_list(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return std::size_t{0};
    };
    CHECK(parse_line("a\tb\t1\nb\ta\t1\na\tb\t2\n") == 3);  // duplicate
    CHECK(parse_line("a\tb\t0\nb\ta\t1\n") == 1);
    CHECK(parse_line("a\tb\t-1\nb\ta\t1\n") == 1);
    CHECK(parse_line("a\tb\nb\ta\t1\n") == 1);
    CHECK(parse_line("a\tb\t1\nb\ta\tx\n") == 2);
    CHECK(parse_line("# only comments\n") != 0);
}

TEST_CASE("distances are hop counts") {
    auto c4 = gen_cycle(4);
    auto d = distances(c4);
    CHECK(d(0, 1) == 1);
    CHECK(d(1, 0) == 3);
    auto k4 = gen_complete(4);
    auto dk = distances(k4);
    CHECK(dk(0, 1) == 1);
    CHECK(dk(1, 0) == 2);
    for (Vertex x = 0; x < 4; ++x) CHECK(dk(x, x) == 0);

    // weights never enter
    RMatrix mu = zero_matrix(3, 3);
    mu[0][1] = Rational(100);
    mu[1][2] = Rational(100);
    mu[2][0] = Rational(1, 100);
    mu[0][2] = Rational(1000);
    auto heavy = WeightedDigraph::from_matrix(mu);
    CHECK(distances(heavy)(0, 2) == 1);
}

TEST_CASE("neighborhoods and inscribed radius") {
    auto c4 = gen_cycle(4);
    auto nb = neighborhoods(c4, 0);
    CHECK(nb.out == std::vector<Vertex>{1});
    CHECK(nb.in == std::vector<Vertex>{3});
    CHECK(nb.all == std::vector<Vertex>{1, 3});

    auto k3 = gen_complete(3);
    CHECK(neighborhoods(k3, 0).all == std::vector<Vertex>{1, 2});
    CHECK(inscribed_radius(distances(k3), 0) == 2);

    auto k2 = parse_edge_list("a\tb\t1\nb\ta\t1");
    auto nb2 = neighborhoods(k2, 0);
    CHECK(nb2.out == nb2.in);
    CHECK(inscribed_radius(distances(k2), 0) == 1);

    for (std::size_t n : {3, 4, 5, 8}) {
        auto d = distances(gen_cycle(n));
        for (Vertex x = 0; x < n; ++x) CHECK(inscribed_radius(d, x) == static_cast<int>(n) - 1);
    }
}

TEST_CASE("generators and classification") {
    auto k3 = gen_complete(3);
    CHECK(k3.edge_count() == 3);
    CHECK(k3.has_edge(0, 1));
    CHECK(k3.has_edge(1, 2));
    CHECK(k3.has_edge(2, 0));
    CHECK(gen_cycle(4).edge_count() == 4);
    CHECK(gen_complete(4).edge_count() == 8);  // n ordered pairs removed
    CHECK_THROWS_AS(gen_complete(2), DomainError);
    CHECK_THROWS_AS(gen_cycle(1), DomainError);

    for (std::size_t n = 3; n <= 9; ++n) {
        auto ck = classify(gen_complete(n));
        CHECK(ck.eulerian);
        REQUIRE(ck.regular_degree);
        CHECK(*ck.regular_degree == n - 2);
        auto cc = classify(gen_cycle(n));
        CHECK(cc.eulerian);
        REQUIRE(cc.regular_degree);
        CHECK(*cc.regular_degree == 1);
    }
    auto w = parse_edge_list("a\tb\t2\nb\ta\t1\n");
    CHECK_FALSE(classify(w).unweighted);
    CHECK_FALSE(classify(w).eulerian);
    CHECK(classify(petersen_subgraph()).undirected);
    CHECK_FALSE(classify(petersen_subgraph()).regular_degree);
}

TEST_CASE("construction validation") {
    RMatrix loop = zero_matrix(2, 2);
    loop[0][1] = loop[1][0] = loop[0][0] = Rational(1);
    CHECK_THROWS_AS(WeightedDigraph::from_matrix(loop), Error);
    RMatrix split = zero_matrix(4, 4);
    split[0][1] = split[1][0] = split[2][3] = split[3][2] = Rational(1);
    try {
        WeightedDigraph::from_matrix(split);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotStronglyConnected);
    }
}

TEST_CASE("distance properties over the corpus and random graphs") {
    auto graphs = corpus();
    for (std::uint64_t seed = 100; seed < 110; ++seed)
        graphs.push_back({"random", random_digraph(static_cast<std::size_t>(8 + seed % 23), seed)});
    graphs.push_back({"random30", random_digraph(30, 7)});
    for (const auto& [name, g] : graphs) {
        CAPTURE(name);
        const auto d = distances(g);
        const std::size_t n = g.size();
        bool triangle = true;
        for (Vertex x = 0; x < n; ++x)
            for (Vertex y = 0; y < n; ++y) {
                if (x != y && d(x, y) < 1) triangle = false;
                for (Vertex z = 0; z < n; ++z)
                    if (d(x, z) > d(x, y) + d(y, z)) triangle = false;
            }
        CHECK(triangle);
        if (classify(g).undirected)
            for (Vertex x = 0; x < n; ++x)
                for (Vertex y = 0; y < n; ++y) CHECK(d(x, y) == d(y, x));
        for (Vertex x = 0; x < n; ++x) CHECK(is_one_lipschitz(d, distance_from(d, x)));
    }
}

TEST_CASE("generated graphs round-trip through the edge list") {
    for (std::size_t n : {3, 5, 7}) {
        auto g = gen_complete(n);
        auto back = parse_edge_list(to_edge_list(g));
        CHECK(back.weights() == g.weights());
        CHECK(back.labels() == g.labels());
    }
}
