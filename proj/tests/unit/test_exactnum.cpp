#include "corpus.hpp"
#include "dricci/errors.hpp"
#include "dricci/linalg.hpp"
#include "dricci/lp.hpp"

#include <doctest.h>

#include <optional>

using namespace dricci;
using dricci::testing::Rng;

TEST_CASE("rational canonical form and parsing") {
    CHECK(Rational(6, 4).str() == "3/2");
    CHECK(Rational(-6, -4) == Rational(3, 2));
    CHECK(Rational(3, -6).str() == "-1/2");
    CHECK(Rational(4, 2).str() == "2");
    CHECK(Rational::parse("3/2") == Rational(3, 2));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK(Rational::parse("0.125") == Rational(1, 8));
    CHECK(Rational::parse("2.") == Rational(2));
    CHECK(Rational::parse(".5") == Rational(1, 2));
    CHECK(Rational::parse("10/4").str() == "5/2");
    CHECK(Rational::parse("010/04") == Rational(5, 2));
    CHECK(Rational::parse("0.0625") == Rational(1, 16));
    CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
    CHECK_THROWS_AS(Rational::parse("abc"), DomainError);
    CHECK_THROWS_AS(Rational::parse(""), DomainError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(-3).pow(3) == Rational(-27));
    CHECK(positive_part(Rational(-1, 2)) == Rational(0));
    CHECK(positive_part(Rational(1, 2)) == Rational(1, 2));
}

TEST_CASE("rational arithmetic round-trips") {
    Rng rng(1);
    for (int i = 0; i < 500; ++i) {
        const Rational a = rng.rational(-1000, 1000, 997);
        const Rational c = rng.rational(-1000, 1000, 991);
        CHECK((a + c) - c == a);
        if (!c.is_zero()) CHECK((a * c) / c == a);
        CHECK(Rational::parse(a.str()) == a);
        CHECK(a.denominator() > 0);
    }
}

TEST_CASE("linear systems") {
    auto r1 = solve_linear_system({{Rational(1)}}, {Rational(5)});
    REQUIRE(r1.status == SolveStatus::Unique);
    CHECK(r1.x == RVector{Rational(5)});

    auto r2 = solve_linear_system({{Rational(2), Rational(0)}, {Rational(0), Rational(4)}}, {Rational(1), Rational(1)});
    REQUIRE(r2.status == SolveStatus::Unique);
    CHECK(r2.x == RVector{Rational(1, 2), Rational(1, 4)});

    auto r3 = solve_linear_system({{Rational(1), Rational(1)}, {Rational(1), Rational(-1)}}, {Rational(1), Rational(0)});
    REQUIRE(r3.status == SolveStatus::Unique);
    CHECK(r3.x == RVector{Rational(1, 2), Rational(1, 2)});

    CHECK(solve_linear_system({{Rational(1), Rational(1)}, {Rational(2), Rational(2)}}, {Rational(1), Rational(3)}).status ==
          SolveStatus::NoSolution);
    CHECK(solve_linear_system({{Rational(1), Rational(1)}, {Rational(2), Rational(2)}}, {Rational(1), Rational(2)}).status ==
          SolveStatus::NonUnique);

    // consistent overdetermined
    auto r4 = solve_linear_system({{Rational(1), Rational(0)}, {Rational(0), Rational(1)}, {Rational(1), Rational(1)}},
                                  {Rational(2), Rational(3), Rational(5)});
    REQUIRE(r4.status == SolveStatus::Unique);
    CHECK(r4.x == RVector{Rational(2), Rational(3)});
}

TEST_CASE("random square systems solve exactly") {
    Rng rng(2);
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = static_cast<std::size_t>(rng.integer(1, 6));
        RMatrix a(n, RVector(n));
        for (auto& row : a)
            for (auto& v : row) v = rng.rational(-5, 5, 3);
        const RVector x = rng.function(n);
        const RVector b = multiply(a, x);
        auto res = solve_linear_system(a, b);
        if (res.status == SolveStatus::Unique) CHECK(res.x == x);
        else CHECK(res.status == SolveStatus::NonUnique);
    }
}

TEST_CASE("lp examples") {
    LinearProgram lp1{Sense::Maximize, {Rational(1)}, {{{Rational(1)}, Relation::LessEqual, Rational(3)}}, {}};
    auto r1 = solve_lp(lp1);
    REQUIRE(r1.status == LpStatus::Optimal);
    CHECK(r1.optimum == Rational(3));
    CHECK(r1.witness == RVector{Rational(3)});

    LinearProgram lp2{Sense::Minimize, {Rational(1), Rational(1)},
                      {{{Rational(1), Rational(1)}, Relation::Equal, Rational(1)}}, {}};
    auto r2 = solve_lp(lp2);
    REQUIRE(r2.status == LpStatus::Optimal);
    CHECK(r2.optimum == Rational(1));
    CHECK(r2.witness[0] + r2.witness[1] == Rational(1));
    CHECK(r2.witness[0].sign() >= 0);
    CHECK(r2.witness[1].sign() >= 0);

    LinearProgram lp3{Sense::Maximize, {Rational(2), Rational(1)},
                      {{{Rational(1), Rational(1)}, Relation::LessEqual, Rational(1)},
                       {{Rational(1), Rational(0)}, Relation::LessEqual, Rational(1, 2)}},
                      {}};
    auto r3 = solve_lp(lp3);
    REQUIRE(r3.status == LpStatus::Optimal);
    CHECK(r3.optimum == Rational(3, 2));
    CHECK(r3.witness == RVector{Rational(1, 2), Rational(1, 2)});
}

TEST_CASE("lp infeasible, unbounded, free variables") {
    LinearProgram inf{Sense::Minimize, {Rational(1)},
                      {{{Rational(1)}, Relation::LessEqual, Rational(1)}, {{Rational(1)}, Relation::GreaterEqual, Rational(2)}},
                      {}};
    CHECK(solve_lp(inf).status == LpStatus::Infeasible);

    LinearProgram unb{Sense::Maximize, {Rational(1), Rational(0)},
                      {{{Rational(1), Rational(-1)}, Relation::LessEqual, Rational(1)}}, {}};
    CHECK(solve_lp(unb).status == LpStatus::Unbounded);

    LinearProgram free_var{Sense::Minimize, {Rational(1)}, {{{Rational(1)}, Relation::GreaterEqual, Rational(-5)}},
                           {VarDomain::Free}};
    auto r = solve_lp(free_var);
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.optimum == Rational(-5));

    LinearProgram bad{Sense::Minimize, {Rational(1), Rational(2)}, {{{Rational(1)}, Relation::LessEqual, Rational(1)}}, {}};
    CHECK_THROWS_AS(solve_lp(bad), DomainError);
}

namespace {

// Maximize c.x over {A x <= b, 0 <= x} by enumerating every basis of the
// n active constraints drawn from the m rows and the n sign bounds.
std::optional<Rational> brute_force_max(const RMatrix& a, const RVector& b, const RVector& c) {
    const std::size_t m = a.size();
    const std::size_t n = c.size();
    RMatrix rows = a;
    RVector rhs = b;
    for (std::size_t j = 0; j < n; ++j) {
        RVector e(n, Rational(0));
        e[j] = Rational(-1);
        rows.push_back(e);
        rhs.push_back(Rational(0));
    }
    const std::size_t total = m + n;
    std::optional<Rational> best;
    for (unsigned mask = 0; mask < (1u << total); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != n) continue;
        RMatrix sub;
        RVector sub_rhs;
        for (std::size_t i = 0; i < total; ++i)
            if (mask & (1u << i)) {
                sub.push_back(rows[i]);
                sub_rhs.push_back(rhs[i]);
            }
        auto s = solve_linear_system(sub, sub_rhs);
        if (s.status != SolveStatus::Unique) continue;
        bool feasible = true;
        for (std::size_t i = 0; i < total && feasible; ++i) feasible = dot(rows[i], s.x) <= rhs[i];
        if (!feasible) continue;
        const Rational v = dot(c, s.x);
        if (!best || v > *best) best = v;
    }
    return best;
}

}  // namespace

TEST_CASE("lp matches basic feasible solution enumeration") {
    Rng rng(3);
    int optimal = 0;
    int infeasible = 0;
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = static_cast<std::size_t>(rng.integer(1, 4));
        const std::size_t m = static_cast<std::size_t>(rng.integer(1, 6 - static_cast<long>(n) / 2));
        RMatrix a(m, RVector(n));
        RVector b(m);
        for (std::size_t i = 0; i < m; ++i) {
            for (auto& v : a[i]) v = rng.rational(-4, 4, 3);
            b[i] = rng.rational(-3, 8, 2);
        }
        // a box keeps every instance bounded
        for (std::size_t j = 0; j < n; ++j) {
            RVector e(n, Rational(0));
            e[j] = Rational(1);
            a.push_back(e);
            b.push_back(Rational(10));
        }
        const RVector c = rng.function(n, -5, 5, 3);

        LinearProgram lp{Sense::Maximize, c, {}, {}};
        for (std::size_t i = 0; i < a.size(); ++i) lp.constraints.push_back({a[i], Relation::LessEqual, b[i]});
        const auto res = solve_lp(lp);
        const auto oracle = brute_force_max(a, b, c);
        if (!oracle) {
            CHECK(res.status == LpStatus::Infeasible);
            ++infeasible;
            continue;
        }
        REQUIRE(res.status == LpStatus::Optimal);
        ++optimal;
        CHECK(res.optimum == *oracle);
        CHECK(dot(c, res.witness) == res.optimum);
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(dot(a[i], res.witness) <= b[i]);

        // Minimization form: min -c.x. Its multipliers must be dual feasible
        // and every primal feasible point must sit above the dual value.
        LinearProgram mn = lp;
        mn.sense = Sense::Minimize;
        for (auto& v : mn.objective) v = -v;
        const auto rm = solve_lp(mn);
        REQUIRE(rm.status == LpStatus::Optimal);
        CHECK(rm.optimum == -*oracle);
        REQUIRE(rm.duals.size() == a.size());
        CHECK(dot(b, rm.duals) == rm.optimum);
        for (const auto& y : rm.duals) CHECK(y.sign() <= 0);
        for (std::size_t j = 0; j < n; ++j) {
            Rational aty;
            for (std::size_t i = 0; i < a.size(); ++i) aty += a[i][j] * rm.duals[i];
            CHECK(aty <= mn.objective[j]);
        }
        for (int k = 0; k < 5; ++k) {
            RVector x(n);
            for (auto& v : x) v = rng.rational(0, 10, 4);
            bool feasible = true;
            for (std::size_t i = 0; i < a.size() && feasible; ++i) feasible = dot(a[i], x) <= b[i];
            if (feasible) CHECK(dot(mn.objective, x) >= dot(b, rm.duals));
        }
    }
    CHECK(optimal > 100);
    CHECK(infeasible > 0);
}
