#include "dricci/cli.hpp"

#include "dricci/comparisons.hpp"
#include "dricci/errors.hpp"
#include "dricci/product.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace dricci::cli {

namespace {

using nlohmann::json;

WeightedDigraph load(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return parse_edge_list(ss.str());
    }
    return read_edge_list_file(path);
}

Vertex vertex(const WeightedDigraph& g, const std::string& label) {
    if (auto v = g.find(label)) return *v;
    throw DomainError("unknown vertex '" + label + "'");
}

std::vector<Vertex> vertex_list(const WeightedDigraph& g, const std::string& csv) {
    std::vector<Vertex> out;
    std::string item;
    std::istringstream in(csv);
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(vertex(g, item));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

void emit_json(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

/// Writes to --out when given, otherwise to `out`.
void write_text(const std::string& path, std::ostream& out, const std::string& text) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw DomainError("cannot write '" + path + "'");
    file << text;
}

Scope parse_scope(const std::string& s) { return s == "edges" ? Scope::Edges : Scope::All; }

struct AnalyzeArgs {
    std::string graph;
    std::string scope = "all";
    std::string out;
    std::string format = "json";
    unsigned threads = 1;
    int cd_samples = 50;
    std::uint64_t seed = 1;
};

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out) {
    const auto g = load(a.graph);
    ReportOptions options;
    options.scope = parse_scope(a.scope);
    options.threads = a.threads;
    options.cd_samples = a.cd_samples;
    options.seed = a.seed;
    const auto report = full_report(g, options);

    if (a.format == "csv") {
        std::string text = "x,y,distance,edge,kappa\n";
        for (const auto& p : report.document["curvature"]["pairs"]) {
            text += csv_field(p["x"].get<std::string>()) + ',' + csv_field(p["y"].get<std::string>()) + ',' +
                    std::to_string(p["distance"].get<int>()) + ',' + (p["edge"].get<bool>() ? "true" : "false") +
                    ',' + p["kappa"].get<std::string>() + '\n';
        }
        write_text(a.out, out, text);
    } else {
        write_text(a.out, out, report.document.dump(2) + "\n");
    }

    bool any_holds = false;
    for (const auto& v : report.verdicts) {
        if (v.status == VerdictStatus::Violated) return kFailed;
        any_holds = any_holds || v.status == VerdictStatus::Holds;
    }
    return any_holds || report.verdicts.empty() ? kOk : kNothingChecked;
}

json pair_json(const GraphContext& ctx, const PairCurvature& p) {
    const auto& g = ctx.graph;
    json j{{"x", g.label(p.x)}, {"y", g.label(p.y)}, {"distance", p.distance}, {"kappa", p.kappa.str()}};
    j["edge"] = g.has_edge(p.x, p.y);
    return j;
}

int cmd_curvature(const std::string& path, const std::vector<std::string>& pair, const std::string& scope,
                  unsigned threads, std::ostream& out) {
    const GraphContext ctx(load(path));
    const auto& g = ctx.graph;
    if (!pair.empty()) {
        const Vertex x = vertex(g, pair[0]);
        const Vertex y = vertex(g, pair[1]);
        if (x == y) throw DomainError("pair needs two distinct vertices");
        const auto r = ricci(ctx, x, y);
        json j = pair_json(ctx, {x, y, ctx.dist(x, y), r.kappa, r.witness});
        json witness = json::object();
        for (Vertex v = 0; v < g.size(); ++v) witness[g.label(v)] = r.witness[v].str();
        j["witness"] = witness;
        json bounds{{"lower_general", lower_bound_general(ctx, x, y).str()}};
        if (g.has_edge(x, y)) {
            bounds["lower_edge"] = lower_bound_edge(ctx, x, y).str();
            const auto ub = upper_bound(ctx, x, y);
            bounds["upper"] = ub.bound.str();
            bounds["upper_simple"] = ub.simple.str();
        }
        j["bounds"] = bounds;
        emit_json(out, j);
        return kOk;
    }
    const auto rep = curvature_report(ctx, parse_scope(scope), threads);
    json pairs = json::array();
    for (const auto& p : rep.pairs) pairs.push_back(pair_json(ctx, p));
    json j{{"scope", scope == "edges" ? "edges" : "all"}, {"edge_min", rep.edge_min.str()}, {"pairs", pairs}};
    if (rep.global_min) j["global_min"] = rep.global_min->str();
    emit_json(out, j);
    return kOk;
}

int cmd_spectrum(const std::string& path, std::ostream& out) {
    const GraphContext ctx(load(path));
    const auto s = spectrum(ctx.markov);
    json values = json::array();
    for (double v : s.eigenvalues) values.push_back(round15(v));
    const double worst = s.residuals.empty() ? 0.0 : *std::max_element(s.residuals.begin(), s.residuals.end());
    json j{{"eigenvalues", values}, {"max_residual", round15(worst)}};
    if (s.eigenvalues.size() > 1) j["lambda1"] = round15(s.eigenvalues[1]);
    emit_json(out, j);
    return kOk;
}

int cmd_dirichlet(const std::string& path, const std::string& subset, double p, std::uint64_t seed,
                  std::ostream& out) {
    const GraphContext ctx(load(path));
    const auto& g = ctx.graph;
    const auto r = dirichlet_poincare(ctx.markov, vertex_list(g, subset), p, seed);
    json labels = json::array();
    for (Vertex v : r.subset) labels.push_back(g.label(v));
    json witness = json::array();
    for (Vertex v : r.isoperimetric.witness) witness.push_back(g.label(v));
    json minimizer = json::object();
    for (Vertex v : r.subset) minimizer[g.label(v)] = round15(r.minimizer[v]);
    const bool holds = r.value >= r.cheeger_bound - kFloatSlack;
    emit_json(out, json{{"subset", labels},
                        {"p", round15(p)},
                        {"value", round15(r.value)},
                        {"method", r.exact_path ? "eigen" : "descent"},
                        {"minimizer", minimizer},
                        {"isoperimetric", r.isoperimetric.value.str()},
                        {"isoperimetric_witness", witness},
                        {"cheeger_bound", round15(r.cheeger_bound)},
                        {"cheeger_holds", holds}});
    return holds ? kOk : kFailed;
}

int cmd_product(const std::string& first, const std::string& second, const std::string& alpha,
                const std::string& beta, bool check, std::ostream& out) {
    const ProductContext pc(ProductSpec(load(first), load(second), Rational::parse(alpha), Rational::parse(beta)));
    if (!check) {
        out << to_edge_list(pc.product.graph);
        return kOk;
    }
    const auto ids = check_product_identities(pc);
    json identities = json::array();
    for (const auto& c : ids.checks) {
        json item{{"name", c.name}, {"holds", c.holds}};
        if (!c.holds) item["detail"] = c.detail;
        identities.push_back(item);
    }
    const auto& g = pc.product.graph;
    const auto pairs = check_product_curvature_all(pc);
    json failures = json::array();
    for (const auto& c : pairs)
        if (!c.holds())
            failures.push_back(json{{"x", g.label(c.x)},
                                    {"y", g.label(c.y)},
                                    {"direct", c.direct.str()},
                                    {"predicted", c.predicted.str()}});
    const bool all = ids.all_hold() && failures.empty();
    emit_json(out, json{{"identities", identities},
                        {"curvature", json{{"pairs", pairs.size()}, {"failures", failures}}},
                        {"all_hold", all}});
    return all ? kOk : kFailed;
}

int cmd_gen(const std::string& family, std::size_t n, std::ostream& out) {
    out << to_edge_list(family == "complete" ? gen_complete(n) : gen_cycle(n));
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Ricci curvature and comparison checks for weighted directed graphs", "dricci"};
    app.set_version_flag("--version", std::string(library_version()));
    app.require_subcommand(1);

    AnalyzeArgs analyze;
    auto* an = app.add_subcommand("analyze", "Full report: curvature, spectrum, CD residuals, theorem verdicts");
    an->add_option("graph", analyze.graph, "Edge-list TSV, '-' for standard input")->required();
    an->add_option("--scope", analyze.scope)->check(CLI::IsMember({"edges", "all"}));
    an->add_option("--out", analyze.out, "Write here instead of standard output");
    an->add_option("--format", analyze.format)->check(CLI::IsMember({"json", "csv"}));
    an->add_option("--threads", analyze.threads)->check(CLI::Range(1u, 256u));
    an->add_option("--cd-samples", analyze.cd_samples)->check(CLI::Range(0, 100000));
    an->add_option("--seed", analyze.seed);

    std::string graph;
    std::vector<std::string> pair;
    std::string scope = "edges";
    unsigned threads = 1;
    auto* cu = app.add_subcommand("curvature", "Curvature of edges, all pairs, or one pair with its bounds");
    cu->add_option("graph", graph)->required();
    cu->add_option("--pair", pair)->expected(2);
    cu->add_option("--scope", scope)->check(CLI::IsMember({"edges", "all"}));
    cu->add_option("--threads", threads)->check(CLI::Range(1u, 256u));

    auto* sp = app.add_subcommand("spectrum", "Eigenvalues of the normalized mean Laplacian");
    sp->add_option("graph", graph)->required();

    std::string subset;
    double p = 2.0;
    std::uint64_t seed = 1;
    auto* di = app.add_subcommand("dirichlet", "Dirichlet p-Poincare constant against the Cheeger bound");
    di->add_option("graph", graph)->required();
    di->add_option("--subset", subset, "Comma-separated vertex labels")->required();
    di->add_option("--p", p);
    di->add_option("--seed", seed);

    std::string second;
    std::string alpha = "1";
    std::string beta = "1";
    bool check = false;
    auto* pr = app.add_subcommand("product", "Weighted Cartesian product, optionally checking its identities");
    pr->add_option("first", graph)->required();
    pr->add_option("second", second)->required();
    pr->add_option("--alpha", alpha);
    pr->add_option("--beta", beta);
    pr->add_flag("--check", check);

    std::string family;
    std::size_t n = 0;
    auto* ge = app.add_subcommand("gen", "Write a directed complete graph or cycle as TSV");
    ge->add_option("family", family)->required()->check(CLI::IsMember({"complete", "cycle"}));
    ge->add_option("n", n)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out << library_version() << '\n';
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "Usage: " << e.what() << '\n';
        return kInputError;
    }

    try {
        if (*an) return cmd_analyze(analyze, out);
        if (*cu) return cmd_curvature(graph, pair, scope, threads, out);
        if (*sp) return cmd_spectrum(graph, out);
        if (*di) return cmd_dirichlet(graph, subset, p, seed, out);
        if (*pr) return cmd_product(graph, second, alpha, beta, check, out);
        if (*ge) return cmd_gen(family, n, out);
    } catch (const Error& e) {
        err << e.what() << '\n';
        switch (e.kind()) {
            case ErrorKind::BudgetExceeded: return kBudget;
            case ErrorKind::Internal: return kFailed;
            default: return kInputError;
        }
    } catch (const std::exception& e) {
        err << "Internal: " << e.what() << '\n';
        return kFailed;
    }
    return kFailed;
}

}  // namespace dricci::cli
