#pragma once

#include "dricci/operators.hpp"
#include "dricci/spectral.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <variant>
#include <vector>

namespace dricci {

/// An exact rational or a float (eigenvalues, descent values).
struct Quantity {
    std::variant<Rational, double> value;

    Quantity() : value(Rational(0)) {}
    Quantity(Rational r) : value(std::move(r)) {}  // NOLINT(google-explicit-constructor)
    Quantity(double d) : value(d) {}               // NOLINT(google-explicit-constructor)

    [[nodiscard]] bool is_exact() const { return std::holds_alternative<Rational>(value); }
    [[nodiscard]] double to_double() const;
    [[nodiscard]] std::string str() const;
};

enum class VerdictStatus { Holds, Violated, HypothesisNotMet, Vacuous };
const char* verdict_status_name(VerdictStatus s);

struct Hypothesis {
    std::string name;  // "K", "Lambda", "D", "M", "R", "p"
    Quantity value;
    std::string source;
};

/// Each check is phrased as larger >= smaller - slack.
struct TheoremVerdict {
    std::string theorem;
    std::string instance;
    std::vector<Hypothesis> hypotheses;
    Quantity larger;
    Quantity smaller;
    double slack = 0.0;
    VerdictStatus status = VerdictStatus::Holds;
    std::string note;
};

/// Everything the checks share: contexts, every pairwise curvature, mean curvatures.
struct Analysis {
    GraphContext ctx;
    CurvatureReport curvature;  // Scope::All
    MeanCurvatures mean;

    explicit Analysis(WeightedDigraph g, unsigned threads = 1);

    /// inf over y != x of kappa(x,y).
    [[nodiscard]] Rational source_min(Vertex x) const;
    /// sup over y != x of H(x,y).
    [[nodiscard]] Rational source_mean_max(Vertex x) const;
    [[nodiscard]] std::string label(Vertex x) const { return ctx.graph.label(x); }
};

inline constexpr double kFloatSlack = 1e-9;

/// d(x,y) <= H(x,y)/kappa(x,y) for every positively curved pair, and the
/// inscribed radius estimate for sources with positive curvature.
std::vector<TheoremVerdict> check_bonnet_myers(const Analysis& a);
/// Sphere ratios, the per-vertex kernel mass bound and both sphere and ball corollaries, from x.
std::vector<TheoremVerdict> check_volume(const Analysis& a, Vertex x);
/// L rho_x(y) >= K rho_x(y) + Lambda for y != x.
std::vector<TheoremVerdict> check_laplacian_comparison(const Analysis& a, Vertex x);
TheoremVerdict check_isoperimetric_er(const Analysis& a, Vertex x, int radius);
TheoremVerdict check_main_theorem(const Analysis& a, Vertex x, int radius, double p);
/// lambda_1 >= K with K the global curvature minimum.
TheoremVerdict check_lichnerowicz(const Analysis& a, const Spectrum& s);

/// inf over y, z in the neighborhood of y of Pmean(z,y).
Rational kernel_floor(const GraphContext& ctx);

/// 64-bit FNV-1a as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);

struct ReportOptions {
    Scope scope = Scope::All;
    unsigned threads = 1;
    int cd_samples = 50;
    std::uint64_t seed = 1;
};

struct FullReport {
    nlohmann::json document;
    std::vector<TheoremVerdict> verdicts;
};

/// Aggregates classification, Perron measure, mean curvatures, curvatures,
/// bounds, spectrum, curvature-dimension residuals and every theorem verdict.
FullReport full_report(const WeightedDigraph& g, const ReportOptions& options = {});

nlohmann::json to_json(const Quantity& q);
nlohmann::json to_json(const TheoremVerdict& v);
const char* library_version();

/// Rounds to 15 significant digits.
double round15(double v);

}  // namespace dricci
