#include "dricci/product.hpp"

#include "dricci/errors.hpp"

#include <random>

namespace dricci {

namespace {

Rational delta(Vertex a, Vertex b) { return a == b ? Rational(1) : Rational(0); }

// Compares a product matrix entry-wise against mixture(x,x',y,y').
template <class Expected>
IdentityCheck compare_matrix(const std::string& name, const ProductSpec& spec, const RMatrix& actual,
                             Expected expected) {
    IdentityCheck check{name, true, {}};
    const std::size_t n = actual.size();
    for (Vertex u = 0; u < n && check.holds; ++u)
        for (Vertex v = 0; v < n && check.holds; ++v) {
            const Rational want =
                expected(spec.first_of(u), spec.second_of(u), spec.first_of(v), spec.second_of(v));
            if (actual[u][v] != want) {
                check.holds = false;
                check.detail = "at (" + std::to_string(u) + "," + std::to_string(v) + "): " + actual[u][v].str() +
                               " != " + want.str();
            }
        }
    return check;
}

template <class Expected>
IdentityCheck compare_vector(const std::string& name, const ProductSpec& spec, const RVector& actual,
                             Expected expected) {
    IdentityCheck check{name, true, {}};
    for (Vertex u = 0; u < actual.size() && check.holds; ++u) {
        const Rational want = expected(spec.first_of(u), spec.second_of(u));
        if (actual[u] != want) {
            check.holds = false;
            check.detail = "at " + std::to_string(u) + ": " + actual[u].str() + " != " + want.str();
        }
    }
    return check;
}

RVector laplacian(const MarkovData& md, const RVector& f) {
    const std::size_t n = f.size();
    RVector out(n);
    for (Vertex x = 0; x < n; ++x) {
        Rational acc = f[x];
        for (Vertex y = 0; y < n; ++y)
            if (!md.Pmean[x][y].is_zero()) acc -= md.Pmean[x][y] * f[y];
        out[x] = acc;
    }
    return out;
}

}  // namespace

ProductSpec::ProductSpec(WeightedDigraph g, WeightedDigraph h, Rational a, Rational b)
    : first(std::move(g)), second(std::move(h)), alpha(std::move(a)), beta(std::move(b)) {
    if (alpha.sign() <= 0 || beta.sign() <= 0)
        throw DomainError("product weights must be positive, got alpha=" + alpha.str() + ", beta=" + beta.str());
}

WeightedDigraph cartesian_product(const ProductSpec& spec) {
    const auto& g = spec.first;
    const auto& h = spec.second;
    const std::size_t n = g.size() * h.size();
    RMatrix mu = zero_matrix(n, n);
    std::vector<std::string> labels(n);
    for (Vertex x = 0; x < g.size(); ++x)
        for (Vertex xp = 0; xp < h.size(); ++xp) {
            const Vertex u = spec.index(x, xp);
            labels[u] = "(" + g.label(x) + "," + h.label(xp) + ")";
            for (Vertex y : g.out_neighbors(x)) mu[u][spec.index(y, xp)] = spec.beta * h.vertex_weight(xp) * g.weight(x, y);
            for (Vertex yp : h.out_neighbors(xp))
                mu[u][spec.index(x, yp)] = spec.alpha * g.vertex_weight(x) * h.weight(xp, yp);
        }
    return WeightedDigraph::from_matrix(std::move(mu), std::move(labels));
}

ProductContext::ProductContext(ProductSpec s)
    : spec(std::move(s)), first(spec.first), second(spec.second), product(cartesian_product(spec)) {}

bool ProductCheckReport::all_hold() const { return first_failure() == nullptr; }

const IdentityCheck* ProductCheckReport::first_failure() const {
    for (const auto& c : checks)
        if (!c.holds) return &c;
    return nullptr;
}

ProductCheckReport check_product_identities(const ProductContext& pc, std::uint64_t seed, int random_functions) {
    const auto& spec = pc.spec;
    const auto& a = pc.first.markov;
    const auto& b = pc.second.markov;
    const auto& p = pc.product.markov;
    const Rational s1 = spec.first_share();
    const Rational s2 = spec.second_share();
    ProductCheckReport report;

    RVector weights(pc.product.size());
    for (Vertex u = 0; u < weights.size(); ++u) weights[u] = pc.product.graph.vertex_weight(u);
    report.checks.push_back(compare_vector("vertex weight", spec, weights, [&](Vertex x, Vertex xp) {
        return (spec.alpha + spec.beta) * spec.first.vertex_weight(x) * spec.second.vertex_weight(xp);
    }));

    auto mixture = [&](const RMatrix& k1, const RMatrix& k2) {
        return [&, k1p = &k1, k2p = &k2](Vertex x, Vertex xp, Vertex y, Vertex yp) {
            return s1 * (*k1p)[x][y] * delta(xp, yp) + s2 * (*k2p)[xp][yp] * delta(x, y);
        };
    };
    report.checks.push_back(compare_matrix("transition kernel", spec, p.P, mixture(a.P, b.P)));
    report.checks.push_back(compare_vector("Perron measure", spec, p.m,
                                           [&](Vertex x, Vertex xp) { return a.m[x] * b.m[xp]; }));
    report.checks.push_back(compare_matrix("reverse kernel", spec, p.Prev, mixture(a.Prev, b.Prev)));
    report.checks.push_back(compare_matrix("mean kernel", spec, p.Pmean, mixture(a.Pmean, b.Pmean)));

    {
        IdentityCheck dist{"distance", true, {}};
        const auto& d = pc.product.dist;
        for (Vertex u = 0; u < d.size() && dist.holds; ++u)
            for (Vertex v = 0; v < d.size() && dist.holds; ++v) {
                const int want = pc.first.dist(spec.first_of(u), spec.first_of(v)) +
                                 pc.second.dist(spec.second_of(u), spec.second_of(v));
                if (d(u, v) != want) {
                    dist.holds = false;
                    dist.detail = "at (" + std::to_string(u) + "," + std::to_string(v) + "): " +
                                  std::to_string(d(u, v)) + " != " + std::to_string(want);
                }
            }
        report.checks.push_back(std::move(dist));
    }

    {
        std::mt19937_64 rng(seed);
        auto draw = [&] { return Rational(static_cast<long>(rng() % 13) - 6, static_cast<long>(rng() % 4) + 1); };
        IdentityCheck lap{"Laplacian of product-form functions", true, {}};
        for (int t = 0; t < random_functions && lap.holds; ++t) {
            RVector f(spec.first.size()), fp(spec.second.size());
            for (auto& v : f) v = draw();
            for (auto& v : fp) v = draw();
            RVector joint(pc.product.size());
            for (Vertex u = 0; u < joint.size(); ++u) joint[u] = f[spec.first_of(u)] + fp[spec.second_of(u)];
            const RVector lf = laplacian(a, f);
            const RVector lfp = laplacian(b, fp);
            auto c = compare_vector(lap.name, spec, laplacian(p, joint),
                                    [&](Vertex x, Vertex xp) { return s1 * lf[x] + s2 * lfp[xp]; });
            if (!c.holds) lap = std::move(c);
        }
        report.checks.push_back(std::move(lap));
    }

    const auto h1 = mean_curvatures(pc.first);
    const auto h2 = mean_curvatures(pc.second);
    const auto hp = mean_curvatures(pc.product);
    report.checks.push_back(compare_vector("mean curvature", spec, hp.H, [&](Vertex x, Vertex xp) {
        return s1 * h1.H[x] + s2 * h2.H[xp];
    }));
    report.checks.push_back(compare_vector("reverse mean curvature", spec, hp.Hrev, [&](Vertex x, Vertex xp) {
        return s1 * h1.Hrev[x] + s2 * h2.Hrev[xp];
    }));
    report.checks.push_back(compare_matrix("mixed mean curvature", spec, hp.Hmix,
                                           [&](Vertex x, Vertex xp, Vertex y, Vertex yp) {
                                               return s1 * h1.Hmix[x][y] + s2 * h2.Hmix[xp][yp];
                                           }));
    return report;
}

ProductCurvatureCheck check_product_curvature(const ProductContext& pc, Vertex u, Vertex v) {
    if (u == v) throw DomainError("product curvature needs distinct vertices");
    const auto& spec = pc.spec;
    const Vertex x = spec.first_of(u), xp = spec.second_of(u);
    const Vertex y = spec.first_of(v), yp = spec.second_of(v);

    ProductCurvatureCheck out;
    out.x = u;
    out.y = v;
    out.direct = ricci(pc.product, u, v).kappa;
    if (x != y && xp != yp) {
        const Rational d1(pc.first.dist(x, y));
        const Rational d2(pc.second.dist(xp, yp));
        out.predicted = spec.first_share() * d1 / (d1 + d2) * ricci(pc.first, x, y).kappa +
                        spec.second_share() * d2 / (d1 + d2) * ricci(pc.second, xp, yp).kappa;
    } else if (x != y) {
        out.predicted = spec.first_share() * ricci(pc.first, x, y).kappa;
    } else {
        out.predicted = spec.second_share() * ricci(pc.second, xp, yp).kappa;
    }
    return out;
}

std::vector<ProductCurvatureCheck> check_product_curvature_all(const ProductContext& pc) {
    std::vector<ProductCurvatureCheck> out;
    const std::size_t n = pc.product.size();
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (u != v) out.push_back(check_product_curvature(pc, u, v));
    return out;
}

}  // namespace dricci
