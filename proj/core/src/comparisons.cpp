#include "dricci/comparisons.hpp"

#include "dricci/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <random>

#ifndef DRICCI_VERSION
#define DRICCI_VERSION "0.0.0"
#endif

namespace dricci {

const char* library_version() { return DRICCI_VERSION; }

double Quantity::to_double() const {
    return std::holds_alternative<Rational>(value) ? std::get<Rational>(value).to_double() : std::get<double>(value);
}

double round15(double v) {
    if (!std::isfinite(v)) return v;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    const double r = std::strtod(buf, nullptr);
    return r == 0.0 ? 0.0 : r;  // drop negative zero
}

std::string Quantity::str() const {
    if (std::holds_alternative<Rational>(value)) return std::get<Rational>(value).str();
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", round15(std::get<double>(value)));
    return buf;
}

const char* verdict_status_name(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::Holds: return "holds";
        case VerdictStatus::Violated: return "violated";
        case VerdictStatus::HypothesisNotMet: return "hypothesis-not-met";
        case VerdictStatus::Vacuous: return "vacuous";
    }
    return "?";
}

Analysis::Analysis(WeightedDigraph g, unsigned threads)
    : ctx(std::move(g)), curvature(curvature_report(ctx, Scope::All, threads)), mean(mean_curvatures(ctx)) {}

Rational Analysis::source_min(Vertex x) const {
    std::optional<Rational> best;
    for (Vertex y = 0; y < ctx.size(); ++y)
        if (y != x && (!best || curvature.kappa(x, y) < *best)) best = curvature.kappa(x, y);
    return *best;
}

Rational Analysis::source_mean_max(Vertex x) const {
    std::optional<Rational> best;
    for (Vertex y = 0; y < ctx.size(); ++y)
        if (y != x && (!best || mean.Hmix[x][y] > *best)) best = mean.Hmix[x][y];
    return *best;
}

namespace {

bool at_least(const Quantity& larger, const Quantity& smaller, double slack) {
    if (larger.is_exact() && smaller.is_exact())
        return std::get<Rational>(larger.value) >= std::get<Rational>(smaller.value);
    return larger.to_double() >= smaller.to_double() - slack;
}

TheoremVerdict decide(std::string theorem, std::string instance, std::vector<Hypothesis> hyps, Quantity larger,
                      Quantity smaller, double slack = 0.0) {
    TheoremVerdict v{std::move(theorem), std::move(instance), std::move(hyps), std::move(larger), std::move(smaller),
                     slack, VerdictStatus::Holds, {}};
    v.status = at_least(v.larger, v.smaller, slack) ? VerdictStatus::Holds : VerdictStatus::Violated;
    return v;
}

TheoremVerdict skipped(std::string theorem, std::string instance, std::vector<Hypothesis> hyps, VerdictStatus status,
                       std::string note) {
    TheoremVerdict v;
    v.theorem = std::move(theorem);
    v.instance = std::move(instance);
    v.hypotheses = std::move(hyps);
    v.status = status;
    v.note = std::move(note);
    return v;
}

std::string at(const Analysis& a, Vertex x) { return "x=" + a.label(x); }
std::string at(const Analysis& a, Vertex x, Vertex y) { return "x=" + a.label(x) + ",y=" + a.label(y); }
std::string at_radius(const Analysis& a, Vertex x, int r) { return "x=" + a.label(x) + ",R=" + std::to_string(r); }

// Lambda for the volume and inscribed radius statements: sup H(x,.) lifted to 2.
Hypothesis volume_lambda(const Analysis& a, Vertex x) {
    const Rational sup = a.source_mean_max(x);
    if (sup >= Rational(2)) return {"Lambda", sup, "sup H(x,y)"};
    return {"Lambda", Rational(2), "sup H(x,y) = " + sup.str() + " lifted to 2"};
}

std::vector<Vertex> sphere(const DistanceMatrix& d, Vertex x, int r) {
    std::vector<Vertex> out;
    for (Vertex y = 0; y < d.size(); ++y)
        if (d(x, y) == r) out.push_back(y);
    return out;
}

Rational mass(const MarkovData& md, const std::vector<Vertex>& s) {
    Rational acc;
    for (Vertex v : s) acc += md.m[v];
    return acc;
}

}  // namespace

Rational kernel_floor(const GraphContext& ctx) {
    std::optional<Rational> best;
    for (Vertex y = 0; y < ctx.size(); ++y)
        for (Vertex z : neighborhoods(ctx.graph, y).all)
            if (!best || ctx.markov.Pmean[z][y] < *best) best = ctx.markov.Pmean[z][y];
    return *best;
}

std::vector<TheoremVerdict> check_bonnet_myers(const Analysis& a) {
    std::vector<TheoremVerdict> out;
    const std::size_t n = a.ctx.size();
    for (const auto& p : a.curvature.pairs) {
        if (p.kappa.sign() <= 0) continue;
        out.push_back(decide("bonnet_myers", at(a, p.x, p.y), {{"kappa", p.kappa, "ricci(x,y)"}},
                             a.mean.Hmix[p.x][p.y] / p.kappa, Rational(p.distance)));
    }
    if (out.empty())
        out.push_back(skipped("bonnet_myers", "all pairs", {}, VerdictStatus::Vacuous, "no pair has positive curvature"));
    for (Vertex x = 0; x < n; ++x) {
        const Rational k = a.source_min(x);
        const Hypothesis lambda = volume_lambda(a, x);
        std::vector<Hypothesis> hyps{{"K", k, "inf kappa(x,y) over y != x"}, lambda};
        if (k.sign() <= 0) {
            out.push_back(skipped("inscribed_radius", at(a, x), std::move(hyps), VerdictStatus::HypothesisNotMet,
                                  "needs K > 0"));
            continue;
        }
        out.push_back(decide("inscribed_radius", at(a, x), std::move(hyps),
                             std::get<Rational>(lambda.value.value) / k, Rational(inscribed_radius(a.ctx.dist, x))));
    }
    return out;
}

std::vector<TheoremVerdict> check_volume(const Analysis& a, Vertex x) {
    std::vector<TheoremVerdict> out;
    const auto& md = a.ctx.markov;
    const auto& d = a.ctx.dist;
    const Rational k = a.source_min(x);
    const Hypothesis lambda_h = volume_lambda(a, x);
    const Rational lambda = std::get<Rational>(lambda_h.value.value);
    const Rational floor = kernel_floor(a.ctx);
    const std::vector<Hypothesis> base{{"K", k, "inf kappa(x,y) over y != x"}, lambda_h, {"M", floor, "inf Pmean(z,y)"}};
    const int inrad = inscribed_radius(d, x);
    auto with_r = [&](int r) {
        auto h = base;
        h.push_back({"R", Rational(r), "radius"});
        return h;
    };
    auto factor = [&](int i) { return (lambda - Rational(i) * k) / (Rational(2) * floor); };

    for (int r = 0; r <= inrad; ++r) {
        if (k * Rational(r) > lambda) {
            out.push_back(skipped("volume_ratio", at_radius(a, x, r), with_r(r), VerdictStatus::HypothesisNotMet,
                                  "K R > Lambda"));
            continue;
        }
        const Rational inner = mass(md, sphere(d, x, r));
        const Rational outer = mass(md, sphere(d, x, r + 1));
        out.push_back(decide("volume_ratio", at_radius(a, x, r), with_r(r), factor(r), outer / inner));
        if (r == 0) continue;
        for (Vertex y : sphere(d, x, r)) {
            Rational kernel;
            for (Vertex z : sphere(d, x, r + 1)) kernel += md.Pmean[y][z];
            out.push_back(decide("volume_kernel_mass", at_radius(a, x, r) + ",y=" + a.label(y), with_r(r),
                                 (lambda - k * Rational(r)) / Rational(2), kernel));
        }
    }

    Rational product(1);
    Rational ball_bound(1);
    Rational ball_mass = md.m[x];
    for (int r = 1; r <= inrad; ++r) {
        product *= factor(r - 1);
        ball_bound += product;
        ball_mass += mass(md, sphere(d, x, r));
        if (Rational(r - 1) * k > lambda) {
            out.push_back(skipped("volume_sphere", at_radius(a, x, r), with_r(r), VerdictStatus::HypothesisNotMet,
                                  "(R-1) K > Lambda"));
            out.push_back(skipped("volume_ball", at_radius(a, x, r), with_r(r), VerdictStatus::HypothesisNotMet,
                                  "(R-1) K > Lambda"));
            continue;
        }
        out.push_back(decide("volume_sphere", at_radius(a, x, r), with_r(r), md.m[x] * product,
                             mass(md, sphere(d, x, r))));
        out.push_back(decide("volume_ball", at_radius(a, x, r), with_r(r), md.m[x] * ball_bound, ball_mass));
    }
    return out;
}

std::vector<TheoremVerdict> check_laplacian_comparison(const Analysis& a, Vertex x) {
    std::vector<TheoremVerdict> out;
    const Rational k = a.source_min(x);
    const Rational lambda = a.mean.H[x];
    const auto ld = laplacian_data(a.ctx.markov);
    const RVector rho = distance_from(a.ctx.dist, x);
    const RVector lrho = apply_laplacian(ld, rho);
    for (Vertex y = 0; y < a.ctx.size(); ++y) {
        if (y == x) continue;
        out.push_back(decide("laplacian_comparison", at(a, x, y),
                             {{"K", k, "inf kappa(x,y) over y != x"}, {"Lambda", lambda, "H_x"}}, lrho[y],
                             k * rho[y] + lambda));
    }
    return out;
}

namespace {

struct ErInstance {
    std::vector<Hypothesis> hyps;
    std::vector<Vertex> region;
    Rational margin;  // (K R + Lambda) / D
    std::optional<std::string> unmet;
};

ErInstance er_instance(const Analysis& a, Vertex x, int radius) {
    ErInstance e;
    const Rational k = a.source_min(x);
    const Rational lambda = a.mean.H[x];
    const int inrad = inscribed_radius(a.ctx.dist, x);
    e.hyps = {{"K", k, "inf kappa(x,y) over y != x"},
              {"Lambda", lambda, "H_x"},
              {"D", Rational(inrad), "InRad_x"},
              {"R", Rational(radius), "radius"}};
    for (Vertex y = 0; y < a.ctx.size(); ++y)
        if (a.ctx.dist(x, y) >= radius) e.region.push_back(y);
    const Rational top = k * Rational(radius) + lambda;
    if (radius < 1) e.unmet = "needs R >= 1";
    else if (top.sign() <= 0) e.unmet = "K R + Lambda <= 0";
    else if (e.region.empty()) e.unmet = "E_R(x) is empty";
    else e.margin = top / Rational(inrad);
    return e;
}

}  // namespace

TheoremVerdict check_isoperimetric_er(const Analysis& a, Vertex x, int radius) {
    auto e = er_instance(a, x, radius);
    if (e.unmet)
        return skipped("isoperimetric_er", at_radius(a, x, radius), std::move(e.hyps), VerdictStatus::HypothesisNotMet,
                       *e.unmet);
    const auto iso = dirichlet_isoperimetric(a.ctx.markov, e.region);
    return decide("isoperimetric_er", at_radius(a, x, radius), std::move(e.hyps), iso.value, e.margin);
}

TheoremVerdict check_main_theorem(const Analysis& a, Vertex x, int radius, double p) {
    auto e = er_instance(a, x, radius);
    e.hyps.push_back({"p", p, "exponent"});
    if (e.unmet)
        return skipped("main_theorem", at_radius(a, x, radius), std::move(e.hyps), VerdictStatus::HypothesisNotMet,
                       *e.unmet);
    const double value = p == 2.0 ? dirichlet_poincare(a.ctx.markov, e.region, 2.0).value
                                  : dirichlet_descent(a.ctx.markov, e.region, p).first;
    const double bound = std::pow(2.0, p - 1.0) / std::pow(p, p) * std::pow(e.margin.to_double(), p);
    auto v = decide("main_theorem", at_radius(a, x, radius), std::move(e.hyps), value, bound, kFloatSlack);
    if (p != 2.0) v.note = "descent value, best found";
    return v;
}

TheoremVerdict check_lichnerowicz(const Analysis& a, const Spectrum& s) {
    const Rational k = *a.curvature.global_min;
    std::vector<Hypothesis> hyps{{"K", k, "inf kappa over all pairs"}};
    if (k.sign() <= 0)
        return skipped("lichnerowicz", "global", std::move(hyps), VerdictStatus::HypothesisNotMet, "needs K > 0");
    return decide("lichnerowicz", "global", std::move(hyps), s.eigenvalues.at(1), k, kFloatSlack);
}

std::string fnv1a_hex(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

nlohmann::json to_json(const Quantity& q) {
    if (q.is_exact()) return std::get<Rational>(q.value).str();
    return round15(std::get<double>(q.value));
}

nlohmann::json to_json(const TheoremVerdict& v) {
    nlohmann::json j;
    j["theorem"] = v.theorem;
    j["instance"] = v.instance;
    j["status"] = verdict_status_name(v.status);
    j["holds"] = v.status == VerdictStatus::Holds;
    nlohmann::json hyps = nlohmann::json::array();
    for (const auto& h : v.hypotheses) hyps.push_back({{"name", h.name}, {"value", to_json(h.value)}, {"source", h.source}});
    j["hypotheses"] = std::move(hyps);
    if (v.status == VerdictStatus::Holds || v.status == VerdictStatus::Violated) {
        j["larger"] = to_json(v.larger);
        j["smaller"] = to_json(v.smaller);
        j["slack"] = v.slack;
    }
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

namespace {

nlohmann::json rational_array(const RVector& v) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : v) j.push_back(r.str());
    return j;
}

nlohmann::json float_array(const DVector& v) {
    nlohmann::json j = nlohmann::json::array();
    for (double d : v) j.push_back(round15(d));
    return j;
}

}  // namespace

FullReport full_report(const WeightedDigraph& g, const ReportOptions& options) {
    FullReport out;
    auto& doc = out.document;
    const Analysis a(g, std::max(1u, options.threads));
    const auto& ctx = a.ctx;
    const std::size_t n = ctx.size();
    nlohmann::json notes = nlohmann::json::array();

    doc["schema"] = 1;
    doc["tool"] = {{"name", "dricci"}, {"version", library_version()}};
    const std::string canonical = to_edge_list(g);
    doc["input"] = {{"digest", "fnv1a64:" + fnv1a_hex(canonical)},
                    {"vertices", n},
                    {"edges", g.edge_count()},
                    {"labels", g.labels()}};

    const auto cls = classify(g);
    doc["classify"] = {{"unweighted", cls.unweighted},
                       {"undirected", cls.undirected},
                       {"eulerian", cls.eulerian},
                       {"regular_degree", cls.regular_degree ? nlohmann::json(*cls.regular_degree) : nlohmann::json()}};
    doc["perron"] = rational_array(ctx.markov.m);

    bool reduction = cls.undirected;
    for (Vertex x = 0; x < n && reduction; ++x)
        reduction = a.mean.H[x] == Rational(-1) && a.mean.Hrev[x] == Rational(-1);
    doc["mean_curvature"] = {{"H", rational_array(a.mean.H)},
                             {"Hrev", rational_array(a.mean.Hrev)},
                             {"undirected_reduction", reduction}};

    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& p : a.curvature.pairs) {
        const bool edge = g.has_edge(p.x, p.y);
        if (options.scope == Scope::Edges && !edge) continue;
        pairs.push_back({{"x", g.label(p.x)},
                         {"y", g.label(p.y)},
                         {"distance", p.distance},
                         {"edge", edge},
                         {"kappa", p.kappa.str()}});
    }
    doc["curvature"] = {{"scope", options.scope == Scope::All ? "all" : "edges"},
                        {"edge_min", a.curvature.edge_min.str()},
                        {"global_min", a.curvature.global_min->str()},
                        {"pairs", std::move(pairs)}};

    nlohmann::json bounds = nlohmann::json::array();
    for (const auto& e : g.edges()) {
        const auto ub = upper_bound(ctx, e.from, e.to);
        nlohmann::json b{{"x", g.label(e.from)},
                         {"y", g.label(e.to)},
                         {"lower_edge", lower_bound_edge(ctx, e.from, e.to).str()},
                         {"kappa", a.curvature.kappa(e.from, e.to).str()},
                         {"upper", ub.bound.str()},
                         {"upper_simple", ub.simple.str()}};
        if (cls.regular_degree) b["lower_regular"] = lower_bound_regular(ctx, e.from, e.to).str();
        bounds.push_back(std::move(b));
    }
    doc["bounds"] = std::move(bounds);

    const auto spec = spectrum(ctx.markov);
    doc["spectrum"] = {{"eigenvalues", float_array(spec.eigenvalues)},
                       {"max_residual", round15(*std::max_element(spec.residuals.begin(), spec.residuals.end()))}};

    {
        const auto c = cd_constants(ctx);
        std::mt19937_64 rng(options.seed);
        auto draw = [&] {
            const auto num = static_cast<long>(rng() % 13) - 6;
            const auto den = static_cast<long>(rng() % 4) + 1;
            return Rational(num, den);
        };
        const Rational k = *a.curvature.global_min;
        std::vector<CdVariant> variants{CdVariant::Full, CdVariant::Simple, CdVariant::FromBound, CdVariant::Constant};
        std::vector<std::optional<Rational>> minima(variants.size());
        for (int t = 0; t < options.cd_samples; ++t) {
            RVector f(n);
            for (auto& v : f) v = draw();
            for (std::size_t i = 0; i < variants.size(); ++i)
                for (const auto& r : cd_check(ctx, c, f, variants[i], k))
                    if (!minima[i] || r < *minima[i]) minima[i] = r;
        }
        nlohmann::json mins;
        for (std::size_t i = 0; i < variants.size(); ++i)
            mins[std::string(cd_variant_name(variants[i]))] = minima[i] ? nlohmann::json(minima[i]->str()) : nlohmann::json();
        nlohmann::json empty = nlohmann::json::array();
        for (Vertex v : c.empty_ratio) empty.push_back(g.label(v));
        doc["cd"] = {{"full", rational_array(c.full)},
                     {"simple", rational_array(c.simple)},
                     {"triangle", c.triangles},
                     {"empty_ratio_vertices", std::move(empty)},
                     {"bound_K", k.str()},
                     {"samples", options.cd_samples},
                     {"seed", options.seed},
                     {"min_residual", std::move(mins)}};
        if (!c.empty_ratio.empty())
            notes.push_back("triangle ratio infimum over an empty set taken as 0 at " + std::to_string(c.empty_ratio.size()) +
                            " vertices");
        for (std::size_t i = 0; i < variants.size(); ++i)
            if (minima[i] && minima[i]->sign() < 0)
                out.verdicts.push_back(skipped("curvature_dimension", std::string(cd_variant_name(variants[i])), {},
                                               VerdictStatus::Violated, "negative residual " + minima[i]->str()));
    }

    auto add = [&](std::vector<TheoremVerdict> vs) {
        for (auto& v : vs) out.verdicts.push_back(std::move(v));
    };
    add(check_bonnet_myers(a));
    for (Vertex x = 0; x < n; ++x) {
        add(check_volume(a, x));
        add(check_laplacian_comparison(a, x));
        const int inrad = inscribed_radius(ctx.dist, x);
        for (int r = 1; r <= inrad; ++r) {
            try {
                out.verdicts.push_back(check_isoperimetric_er(a, x, r));
            } catch (const BudgetExceeded& e) {
                notes.push_back(std::string("isoperimetric_er ") + at_radius(a, x, r) + ": " + e.what());
            }
            out.verdicts.push_back(check_main_theorem(a, x, r, 2.0));
        }
    }
    out.verdicts.push_back(check_lichnerowicz(a, spec));

    nlohmann::json verdicts = nlohmann::json::array();
    std::map<std::string, std::map<std::string, int>> summary;
    for (const auto& v : out.verdicts) {
        verdicts.push_back(to_json(v));
        ++summary[v.theorem][verdict_status_name(v.status)];
    }
    doc["verdicts"] = std::move(verdicts);
    doc["summary"] = summary;
    doc["notes"] = std::move(notes);
    return out;
}

}  // namespace dricci
