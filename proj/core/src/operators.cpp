#include "dricci/operators.hpp"

#include "dricci/errors.hpp"
#include "dricci/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>

namespace dricci {

namespace {

RVector hadamard(const RVector& a, const RVector& b) {
    RVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
    return out;
}

RVector subtract(RVector a, const RVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

RVector halve(RVector a) {
    for (auto& v : a) v /= Rational(2);
    return a;
}

}  // namespace

LaplacianData laplacian_data(const MarkovData& md) {
    const std::size_t n = md.size();
    LaplacianData ld{zero_matrix(n, n), md.m, md.mxy};
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = 0; y < n; ++y) ld.L[x][y] = (x == y ? Rational(1) : Rational(0)) - md.Pmean[x][y];
    return ld;
}

RVector apply_laplacian(const LaplacianData& ld, const RVector& f) { return multiply(ld.L, f); }

RVector apply_negative_laplacian(const MarkovData& md, const RVector& f) {
    const std::size_t n = md.size();
    RVector out(n);
    for (Vertex x = 0; x < n; ++x) {
        Rational acc;
        for (Vertex y = 0; y < n; ++y)
            if (!md.Pmean[x][y].is_zero()) acc += md.Pmean[x][y] * (f[y] - f[x]);
        out[x] = acc;
    }
    return out;
}

Rational inner_product(const LaplacianData& ld, const RVector& f0, const RVector& f1) {
    Rational acc;
    for (std::size_t x = 0; x < f0.size(); ++x) acc += f0[x] * f1[x] * ld.weights[x];
    return acc;
}

RVector apply_p_laplacian(const MarkovData& md, const RVector& f, int p) {
    if (p < 2) throw DomainError("exact p-Laplacian needs an integer p >= 2, got " + std::to_string(p));
    const std::size_t n = md.size();
    RVector out(n);
    for (Vertex x = 0; x < n; ++x) {
        Rational acc;
        for (Vertex y = 0; y < n; ++y) {
            if (md.Pmean[x][y].is_zero()) continue;
            const Rational t = f[x] - f[y];
            acc += t.abs().pow(p - 2) * t * md.Pmean[x][y];
        }
        out[x] = acc;
    }
    return out;
}

std::vector<double> apply_p_laplacian(const MarkovData& md, const std::vector<double>& f, double p) {
    if (!(p > 1.0)) throw DomainError("p-Laplacian needs p > 1");
    const std::size_t n = md.size();
    std::vector<double> out(n, 0.0);
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = 0; y < n; ++y) {
            if (md.Pmean[x][y].is_zero()) continue;
            const double t = f[x] - f[y];
            if (t != 0.0) out[x] += std::pow(std::abs(t), p - 2.0) * t * md.Pmean[x][y].to_double();
        }
    return out;
}

IdentitySides integration_by_parts_check(const LaplacianData& ld, const std::vector<Vertex>& omega, const RVector& f0,
                                         const RVector& f1) {
    if (omega.empty()) throw DomainError("integration by parts needs a nonempty subset");
    const std::size_t n = ld.size();
    std::vector<bool> inside(n, false);
    for (Vertex v : omega) {
        if (v >= n) throw DomainError("subset vertex out of range");
        inside[v] = true;
    }
    const RVector lf0 = apply_laplacian(ld, f0);
    IdentitySides s;
    for (Vertex x = 0; x < n; ++x)
        if (inside[x]) s.lhs += lf0[x] * f1[x] * ld.weights[x];
    Rational interior;
    Rational boundary;
    for (Vertex x = 0; x < n; ++x) {
        if (!inside[x]) continue;
        for (Vertex y = 0; y < n; ++y) {
            const Rational& w = ld.edge_weights[x][y];
            if (w.is_zero()) continue;
            if (inside[y]) interior += (f0[y] - f0[x]) * (f1[y] - f1[x]) * w;
            else boundary += (f0[y] - f0[x]) * f1[x] * w;
        }
    }
    s.rhs = interior / Rational(2) - boundary;
    return s;
}

RVector gamma(const MarkovData& md, const RVector& f0, const RVector& f1) {
    const RVector d0 = apply_negative_laplacian(md, f0);
    const RVector d1 = apply_negative_laplacian(md, f1);
    RVector out = apply_negative_laplacian(md, hadamard(f0, f1));
    out = subtract(std::move(out), hadamard(f0, d1));
    out = subtract(std::move(out), hadamard(f1, d0));
    return halve(std::move(out));
}

RVector gamma2(const MarkovData& md, const RVector& f0, const RVector& f1) {
    RVector out = apply_negative_laplacian(md, gamma(md, f0, f1));
    out = subtract(std::move(out), gamma(md, f0, apply_negative_laplacian(md, f1)));
    out = subtract(std::move(out), gamma(md, f1, apply_negative_laplacian(md, f0)));
    return halve(std::move(out));
}

namespace {

// Calls visit(y, z, pxy * pyz) over every two-step path x -> y -> z of Pmean.
template <class Visit>
void two_steps(const MarkovData& md, Vertex x, Visit visit) {
    const std::size_t n = md.size();
    for (Vertex y = 0; y < n; ++y) {
        if (md.Pmean[x][y].is_zero()) continue;
        for (Vertex z = 0; z < n; ++z) {
            if (md.Pmean[y][z].is_zero()) continue;
            visit(y, z, md.Pmean[x][y] * md.Pmean[y][z]);
        }
    }
}

}  // namespace

RVector gcal(const MarkovData& md, const RVector& f) {
    RVector out(md.size());
    for (Vertex x = 0; x < md.size(); ++x) {
        Rational acc;
        two_steps(md, x, [&](Vertex y, Vertex z, const Rational& w) {
            const Rational t = f[x] - Rational(2) * f[y] + f[z];
            acc += t * t * w;
        });
        out[x] = acc / Rational(4);
    }
    return out;
}

RVector gamma_closed(const MarkovData& md, const RVector& f) {
    RVector out(md.size());
    for (Vertex x = 0; x < md.size(); ++x) {
        Rational acc;
        for (Vertex y = 0; y < md.size(); ++y)
            if (!md.Pmean[x][y].is_zero()) acc += (f[x] - f[y]) * (f[x] - f[y]) * md.Pmean[x][y];
        out[x] = acc / Rational(2);
    }
    return out;
}

RVector delta_gamma_closed(const MarkovData& md, const RVector& f) {
    RVector out(md.size());
    for (Vertex x = 0; x < md.size(); ++x) {
        Rational squares;
        Rational cross;
        two_steps(md, x, [&](Vertex y, Vertex z, const Rational& w) {
            const Rational t = f[x] - Rational(2) * f[y] + f[z];
            squares += t * t * w;
            cross += (f[x] - f[y]) * t * w;
        });
        out[x] = squares / Rational(2) - cross;
    }
    return out;
}

RVector twice_gamma_delta_closed(const MarkovData& md, const RVector& f) {
    const RVector delta = apply_negative_laplacian(md, f);
    RVector out(md.size());
    for (Vertex x = 0; x < md.size(); ++x) {
        Rational cross;
        two_steps(md, x, [&](Vertex y, Vertex z, const Rational& w) { cross += (f[x] - f[y]) * (f[z] - f[y]) * w; });
        out[x] = -(delta[x] * delta[x]) - cross;
    }
    return out;
}

namespace {

std::vector<std::vector<Vertex>> full_neighborhoods(const WeightedDigraph& g) {
    std::vector<std::vector<Vertex>> out(g.size());
    for (Vertex x = 0; x < g.size(); ++x) out[x] = neighborhoods(g, x).all;
    return out;
}

std::vector<Vertex> common(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    std::vector<Vertex> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

std::vector<std::size_t> triangle_fn(const WeightedDigraph& g) {
    const auto nb = full_neighborhoods(g);
    std::vector<std::size_t> out(g.size());
    for (Vertex x = 0; x < g.size(); ++x) {
        std::size_t best = g.size();
        for (Vertex y : nb[x]) best = std::min(best, common(nb[x], nb[y]).size());
        out[x] = best;
    }
    return out;
}

CdConstants cd_constants(const GraphContext& ctx) {
    const auto& g = ctx.graph;
    const auto& md = ctx.markov;
    const std::size_t n = g.size();
    const auto nb = full_neighborhoods(g);
    CdConstants c;
    c.triangles = triangle_fn(g);
    c.full.resize(n);
    c.simple.resize(n);
    c.in_min.resize(n);
    c.ratio_min.resize(n);
    for (Vertex x = 0; x < n; ++x) {
        std::optional<Rational> in_min;
        std::optional<Rational> ratio;
        for (Vertex y : nb[x]) {
            const Rational& back = md.Pmean[y][x];
            if (!in_min || back < *in_min) in_min = back;
            for (Vertex z : common(nb[x], nb[y])) {
                const Rational r = md.Pmean[y][z] / back;
                if (!ratio || r < *ratio) ratio = r;
            }
        }
        c.in_min[x] = *in_min;
        if (!ratio) c.empty_ratio.push_back(x);
        c.ratio_min[x] = ratio.value_or(Rational(0));
        const Rational t(static_cast<long>(c.triangles[x]));
        c.full[x] = c.in_min[x] * (Rational(2) + t / Rational(2) * c.ratio_min[x]) - Rational(1);
        c.simple[x] = Rational(2) * c.in_min[x] - Rational(1);
    }
    if (classify(g).unweighted) {
        RVector alt(n);
        for (Vertex x = 0; x < n; ++x) {
            const auto nbx = neighborhoods(g, x);
            std::optional<Rational> best;
            for (Vertex y : nbx.out)
                if (!best || md.P[y][x] < *best) best = md.P[y][x];
            for (Vertex y : nbx.in)
                if (!best || md.Prev[y][x] < *best) best = md.Prev[y][x];
            alt[x] = *best - Rational(1);
        }
        c.unweighted = std::move(alt);
    }
    return c;
}

RVector cd_constants_from_bound(const CdConstants& c, const Rational& k) {
    RVector out(c.full.size());
    for (std::size_t x = 0; x < out.size(); ++x) {
        const Rational t(static_cast<long>(c.triangles[x]));
        out[x] = Rational(2) * k - Rational(3) + (k - Rational(1)) / Rational(2) * t * c.ratio_min[x];
    }
    return out;
}

std::string_view cd_variant_name(CdVariant v) {
    switch (v) {
        case CdVariant::Full: return "full";
        case CdVariant::Simple: return "simple";
        case CdVariant::FromBound: return "from-bound";
        case CdVariant::Constant: return "constant";
    }
    return "?";
}

RVector cd_residual(const MarkovData& md, const RVector& f, const RVector& constant) {
    const RVector g2 = gamma2(md, f, f);
    const RVector g1 = gamma(md, f, f);
    const RVector delta = apply_negative_laplacian(md, f);
    RVector out(md.size());
    for (Vertex x = 0; x < md.size(); ++x)
        out[x] = g2[x] - delta[x] * delta[x] / Rational(2) - constant[x] * g1[x];
    return out;
}

RVector cd_check(const GraphContext& ctx, const CdConstants& c, const RVector& f, CdVariant variant,
                 std::optional<Rational> bound) {
    switch (variant) {
        case CdVariant::Full: return cd_residual(ctx.markov, f, c.full);
        case CdVariant::Simple: return cd_residual(ctx.markov, f, c.simple);
        case CdVariant::FromBound:
        case CdVariant::Constant:
            if (!bound) throw DomainError(std::string(cd_variant_name(variant)) + " variant needs a curvature bound");
            if (variant == CdVariant::FromBound) return cd_residual(ctx.markov, f, cd_constants_from_bound(c, *bound));
            return cd_residual(ctx.markov, f, RVector(ctx.size(), Rational(2) * *bound - Rational(3)));
    }
    throw Error(ErrorKind::Internal, "unknown variant");
}

}  // namespace dricci
