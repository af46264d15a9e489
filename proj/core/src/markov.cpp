#include "dricci/markov.hpp"

#include "dricci/errors.hpp"
#include "dricci/linalg.hpp"

namespace dricci {

namespace {

void check_eps(const Rational& eps) {
    if (eps.sign() < 0 || eps > Rational(1))
        throw DomainError("epsilon must lie in [0,1], got " + eps.str());
}

}  // namespace

MarkovData build_markov(const WeightedDigraph& g) {
    const std::size_t n = g.size();
    MarkovData md;
    md.P = zero_matrix(n, n);
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y : g.out_neighbors(x)) md.P[x][y] = g.weight(x, y) / g.vertex_weight(x);

    // m^T (P - I) = 0 written column-wise, plus the normalization row.
    RMatrix a = zero_matrix(n + 1, n);
    RVector b(n + 1, Rational(0));
    for (Vertex y = 0; y < n; ++y)
        for (Vertex x = 0; x < n; ++x) a[y][x] = md.P[x][y] - (x == y ? Rational(1) : Rational(0));
    for (Vertex x = 0; x < n; ++x) a[n][x] = Rational(1);
    b[n] = Rational(1);

    auto solved = solve_linear_system(a, b);
    if (solved.status != SolveStatus::Unique)
        throw Error(ErrorKind::PerronDegenerate, "stationary system has no unique solution");
    md.m = std::move(solved.x);
    for (Vertex x = 0; x < n; ++x)
        if (md.m[x].sign() <= 0)
            throw Error(ErrorKind::PerronDegenerate, "nonpositive Perron entry at " + g.label(x));

    md.Prev = zero_matrix(n, n);
    md.Pmean = zero_matrix(n, n);
    md.mxy = zero_matrix(n, n);
    const Rational half(1, 2);
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = 0; y < n; ++y) {
            if (!md.P[y][x].is_zero()) md.Prev[x][y] = md.m[y] * md.P[y][x] / md.m[x];
            md.Pmean[x][y] = (md.P[x][y] + md.Prev[x][y]) * half;
            md.mxy[x][y] = md.m[x] * md.Pmean[x][y];
        }
    return md;
}

ProbMeasure::ProbMeasure(RVector weights) : w_(std::move(weights)) {
    Rational total;
    for (const auto& v : w_) {
        if (v.sign() < 0) throw DomainError("probability measure has a negative entry " + v.str());
        total += v;
    }
    if (total != Rational(1)) throw DomainError("probability measure sums to " + total.str());
}

ProbMeasure ProbMeasure::dirac(std::size_t n, Vertex x) {
    RVector w(n, Rational(0));
    w[x] = Rational(1);
    return ProbMeasure(std::move(w));
}

std::vector<Vertex> ProbMeasure::support() const {
    std::vector<Vertex> s;
    for (Vertex v = 0; v < w_.size(); ++v)
        if (!w_[v].is_zero()) s.push_back(v);
    return s;
}

ProbMeasure ProbMeasure::mix(const ProbMeasure& a, const ProbMeasure& b, const Rational& t) {
    check_eps(t);
    if (a.size() != b.size()) throw DomainError("measures live on different vertex sets");
    RVector w(a.size());
    const Rational s = Rational(1) - t;
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = s * a[i] + t * b[i];
    return ProbMeasure(std::move(w));
}

ProbMeasure lazy_from_row(const RVector& step, Vertex x, const Rational& eps) {
    check_eps(eps);
    RVector w(step.size());
    for (Vertex z = 0; z < step.size(); ++z) w[z] = eps * step[z];
    w[x] = Rational(1) - eps;
    return ProbMeasure(std::move(w));
}

ProbMeasure lazy_measure(const MarkovData& md, Vertex x, const Rational& eps) {
    return lazy_from_row(md.Pmean[x], x, eps);
}

RVector outer_step(const WeightedDigraph& g, Vertex x) {
    RVector row(g.size(), Rational(0));
    for (Vertex z : g.out_neighbors(x)) row[z] = g.weight(x, z) / g.vertex_weight(x);
    return row;
}

RVector inner_step(const WeightedDigraph& g, Vertex x) {
    Rational total;
    for (Vertex z : g.in_neighbors(x)) total += g.weight(z, x);
    RVector row(g.size(), Rational(0));
    for (Vertex z : g.in_neighbors(x)) row[z] = g.weight(z, x) / total;
    return row;
}

RVector averaging_apply(const MarkovData& md, const Rational& eps, const RVector& f) {
    check_eps(eps);
    const std::size_t n = md.size();
    if (f.size() != n) throw DomainError("function has wrong length");
    RVector out(n);
    for (Vertex x = 0; x < n; ++x) {
        Rational acc = (Rational(1) - eps) * f[x];
        for (Vertex z = 0; z < n; ++z)
            if (!md.Pmean[x][z].is_zero()) acc += eps * md.Pmean[x][z] * f[z];
        out[x] = acc;
    }
    return out;
}

}  // namespace dricci
