#include "dricci/transport.hpp"

#include "dricci/errors.hpp"

#include <functional>

namespace dricci {

bool Coupling::couples(const ProbMeasure& from, const ProbMeasure& to) const {
    const std::size_t n = from.size();
    if (pi.size() != n || to.size() != n) return false;
    for (Vertex x = 0; x < n; ++x) {
        if (pi[x].size() != n) return false;
        Rational row;
        for (Vertex y = 0; y < n; ++y) {
            if (pi[x][y].sign() < 0) return false;
            row += pi[x][y];
        }
        if (row != from[x]) return false;
    }
    for (Vertex y = 0; y < n; ++y) {
        Rational col;
        for (Vertex x = 0; x < n; ++x) col += pi[x][y];
        if (col != to[y]) return false;
    }
    return true;
}

Rational Coupling::cost(const DistanceMatrix& d) const {
    Rational total;
    for (Vertex x = 0; x < pi.size(); ++x)
        for (Vertex y = 0; y < pi[x].size(); ++y)
            if (!pi[x][y].is_zero()) total += Rational(d(x, y)) * pi[x][y];
    return total;
}

bool is_one_lipschitz(const DistanceMatrix& d, const RVector& f) {
    for (Vertex v = 0; v < d.size(); ++v)
        for (Vertex w = 0; w < d.size(); ++w)
            if (f[w] - f[v] > Rational(d(v, w))) return false;
    return true;
}

std::vector<std::pair<Vertex, Vertex>> lipschitz_generators(const DistanceMatrix& d) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex v = 0; v < d.size(); ++v)
        for (Vertex w = 0; w < d.size(); ++w)
            if (d(v, w) == 1) pairs.emplace_back(v, w);
    return pairs;
}

LipschitzOptimum optimize_lipschitz(const DistanceMatrix& d, Sense sense, const RVector& c,
                                    const Rational& constant,
                                    const std::map<Vertex, Rational>& fixed) {
    const std::size_t n = d.size();
    constexpr std::size_t kFixed = static_cast<std::size_t>(-1);
    std::vector<std::size_t> column(n, kFixed);
    std::size_t vars = 0;
    for (Vertex v = 0; v < n; ++v)
        if (!fixed.count(v)) column[v] = vars++;

    auto value_of = [&](Vertex v) { return fixed.at(v); };

    LinearProgram lp;
    lp.sense = sense;
    lp.objective.assign(vars, Rational(0));
    lp.domains.assign(vars, VarDomain::Free);
    Rational offset = constant;
    for (Vertex v = 0; v < n; ++v) {
        if (c[v].is_zero()) continue;
        if (column[v] == kFixed)
            offset += c[v] * value_of(v);
        else
            lp.objective[column[v]] = c[v];
    }

    // f(w) - f(v) <= 1 on every generating pair, fixed values moved right.
    for (const auto& [v, w] : lipschitz_generators(d)) {
        Constraint row{RVector(vars, Rational(0)), Relation::LessEqual, Rational(1)};
        bool has_var = false;
        if (column[w] == kFixed) {
            row.rhs -= value_of(w);
        } else {
            row.coeffs[column[w]] += Rational(1);
            has_var = true;
        }
        if (column[v] == kFixed) {
            row.rhs += value_of(v);
        } else {
            row.coeffs[column[v]] -= Rational(1);
            has_var = true;
        }
        if (!has_var) {
            if (row.rhs.sign() < 0) throw Error(ErrorKind::Internal, "fixed values violate the Lipschitz bound");
            continue;
        }
        lp.constraints.push_back(std::move(row));
    }

    LpResult res = solve_lp(lp);
    if (res.status != LpStatus::Optimal)
        throw Error(ErrorKind::Internal, res.status == LpStatus::Infeasible ? "Lipschitz program infeasible"
                                                                             : "Lipschitz program unbounded");
    LipschitzOptimum out;
    out.value = res.optimum + offset;
    out.f.resize(n);
    for (Vertex v = 0; v < n; ++v) out.f[v] = column[v] == kFixed ? value_of(v) : res.witness[column[v]];
    return out;
}

TransportResult wasserstein(const DistanceMatrix& d, const ProbMeasure& nu0, const ProbMeasure& nu1) {
    const std::size_t n = d.size();
    if (nu0.size() != n || nu1.size() != n) throw DomainError("measure length differs from vertex count");

    RVector c(n);
    for (Vertex v = 0; v < n; ++v) c[v] = nu1[v] - nu0[v];
    const auto s0 = nu0.support();
    const auto s1 = nu1.support();
    auto dual = optimize_lipschitz(d, Sense::Maximize, c, Rational(0), {{s0.front(), Rational(0)}});

    // Complementary slackness: optimal plans live on pairs where f is tight.
    std::vector<std::pair<Vertex, Vertex>> tight;
    for (Vertex v : s0)
        for (Vertex w : s1)
            if (dual.f[w] - dual.f[v] == Rational(d(v, w))) tight.emplace_back(v, w);

    LinearProgram lp;
    lp.sense = Sense::Minimize;
    for (const auto& [v, w] : tight) lp.objective.push_back(Rational(d(v, w)));
    const std::size_t k = tight.size();
    for (Vertex v : s0) {
        Constraint row{RVector(k, Rational(0)), Relation::Equal, nu0[v]};
        for (std::size_t j = 0; j < k; ++j)
            if (tight[j].first == v) row.coeffs[j] = Rational(1);
        lp.constraints.push_back(std::move(row));
    }
    for (Vertex w : s1) {
        Constraint row{RVector(k, Rational(0)), Relation::Equal, nu1[w]};
        for (std::size_t j = 0; j < k; ++j)
            if (tight[j].second == w) row.coeffs[j] = Rational(1);
        lp.constraints.push_back(std::move(row));
    }
    LpResult primal = solve_lp(lp);
    if (primal.status != LpStatus::Optimal)
        throw Error(ErrorKind::Internal, "no coupling on the tight pairs of the dual potential");

    TransportResult out;
    out.coupling.pi = zero_matrix(n, n);
    for (std::size_t j = 0; j < k; ++j) out.coupling.pi[tight[j].first][tight[j].second] = primal.witness[j];
    out.cost = out.coupling.cost(d);
    if (out.cost != dual.value)
        throw Error(ErrorKind::Internal, "primal cost " + out.cost.str() + " differs from dual value " +
                                             dual.value.str());
    out.potential = std::move(dual.f);
    return out;
}

Rational wasserstein_bruteforce(const DistanceMatrix& d, const ProbMeasure& nu0, const ProbMeasure& nu1) {
    const std::size_t n = d.size();
    const int diam = d.diameter();
    if (n > 7 || diam > 6)
        throw DomainError("brute-force transport needs n <= 7 and diameter <= 6, got n=" + std::to_string(n) +
                          ", diameter=" + std::to_string(diam));
    RVector c(n);
    for (Vertex v = 0; v < n; ++v) c[v] = nu1[v] - nu0[v];

    std::vector<int> f(n, 0);
    Rational best;
    bool found = false;
    std::function<void(std::size_t, const Rational&)> descend = [&](std::size_t k, const Rational& partial) {
        if (k == n) {
            if (!found || partial > best) {
                best = partial;
                found = true;
            }
            return;
        }
        for (int value = 0; value <= diam; ++value) {
            bool ok = true;
            for (std::size_t u = 0; u < k && ok; ++u)
                ok = value - f[u] <= d(u, k) && f[u] - value <= d(k, u);
            if (!ok) continue;
            f[k] = value;
            descend(k + 1, c[k].is_zero() ? partial : partial + c[k] * Rational(value));
        }
    };
    descend(0, Rational(0));
    return best;
}

}  // namespace dricci
