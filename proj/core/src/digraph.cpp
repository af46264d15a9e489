#include "dricci/digraph.hpp"

#include "dricci/errors.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace dricci {

namespace {

std::vector<bool> reachable(const std::vector<std::vector<Vertex>>& adj, Vertex start) {
    std::vector<bool> seen(adj.size(), false);
    std::queue<Vertex> q;
    seen[start] = true;
    q.push(start);
    while (!q.empty()) {
        const Vertex v = q.front();
        q.pop();
        for (Vertex w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                q.push(w);
            }
    }
    return seen;
}

std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i + 1));
    return labels;
}

}  // namespace

WeightedDigraph WeightedDigraph::from_matrix(RMatrix mu, std::vector<std::string> labels) {
    WeightedDigraph g;
    g.mu_ = std::move(mu);
    g.labels_ = labels.empty() ? default_labels(g.mu_.size()) : std::move(labels);
    g.validate_and_index();
    return g;
}

WeightedDigraph WeightedDigraph::from_edges(std::size_t n, const std::vector<Edge>& edges,
                                            std::vector<std::string> labels) {
    RMatrix mu = zero_matrix(n, n);
    for (const auto& e : edges) {
        if (e.from >= n || e.to >= n) throw DomainError("edge endpoint out of range");
        if (!mu[e.from][e.to].is_zero()) throw DomainError("duplicate edge");
        mu[e.from][e.to] = e.weight;
    }
    return from_matrix(std::move(mu), std::move(labels));
}

void WeightedDigraph::validate_and_index() {
    const std::size_t n = mu_.size();
    if (n < 2) throw DomainError("graph needs at least 2 vertices");
    if (labels_.size() != n) throw DomainError("label count differs from vertex count");
    for (const auto& row : mu_)
        if (row.size() != n) throw DomainError("weight matrix is not square");

    out_.assign(n, {});
    in_.assign(n, {});
    out_weight_.assign(n, Rational(0));
    for (Vertex x = 0; x < n; ++x) {
        if (!mu_[x][x].is_zero()) throw Error(ErrorKind::SelfLoop, "self-loop at " + labels_[x]);
        for (Vertex y = 0; y < n; ++y) {
            if (mu_[x][y].sign() < 0)
                throw DomainError("negative weight on " + labels_[x] + "->" + labels_[y]);
            if (mu_[x][y].sign() > 0) {
                out_[x].push_back(y);
                in_[y].push_back(x);
                out_weight_[x] += mu_[x][y];
            }
        }
    }

    const auto forward = reachable(out_, 0);
    const auto backward = reachable(in_, 0);
    for (Vertex v = 0; v < n; ++v) {
        if (!forward[v])
            throw Error(ErrorKind::NotStronglyConnected,
                        "no path " + labels_[0] + "→" + labels_[v]);
        if (!backward[v])
            throw Error(ErrorKind::NotStronglyConnected,
                        "no path " + labels_[v] + "→" + labels_[0]);
    }
}

std::optional<Vertex> WeightedDigraph::find(std::string_view label) const {
    for (Vertex v = 0; v < labels_.size(); ++v)
        if (labels_[v] == label) return v;
    return std::nullopt;
}

std::vector<Edge> WeightedDigraph::edges() const {
    std::vector<Edge> out;
    for (Vertex x = 0; x < size(); ++x)
        for (Vertex y : out_[x]) out.push_back({x, y, mu_[x][y]});
    return out;
}

std::size_t WeightedDigraph::edge_count() const {
    std::size_t count = 0;
    for (const auto& row : out_) count += row.size();
    return count;
}

WeightedDigraph parse_edge_list(std::string_view text) {
    std::map<std::string, Vertex, std::less<>> index;
    std::vector<std::string> labels;
    std::vector<Edge> edges;
    std::set<std::pair<Vertex, Vertex>> seen;

    auto vertex_of = [&](const std::string& label) {
        auto it = index.find(label);
        if (it != index.end()) return it->second;
        const Vertex v = labels.size();
        index.emplace(label, v);
        labels.push_back(label);
        return v;
    };

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        std::string line(text.substr(pos, end - pos));
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) {
            if (end == text.size()) break;
            continue;
        }
        if (line.front() == '#') continue;

        std::vector<std::string> fields;
        std::size_t start = 0;
        for (;;) {
            const std::size_t tab = line.find('\t', start);
            fields.push_back(line.substr(start, tab == std::string::npos ? std::string::npos : tab - start));
            if (tab == std::string::npos) break;
            start = tab + 1;
        }
        if (fields.size() != 3)
            throw ParseError(line_no, "expected 3 tab-separated fields, got " + std::to_string(fields.size()));
        for (const auto& f : fields)
            if (f.empty() || f.find_first_of(" \t\r") != std::string::npos)
                throw ParseError(line_no, "fields must be non-empty tokens without whitespace");

        Rational w;
        try {
            w = Rational::parse(fields[2]);
        } catch (const DomainError& e) {
            throw ParseError(line_no, std::string("bad weight: ") + e.what());
        }
        if (w.sign() <= 0) throw ParseError(line_no, "weight must be positive, got " + fields[2]);
        if (fields[0] == fields[1])
            throw Error(ErrorKind::SelfLoop, "line " + std::to_string(line_no) + ": self-loop at " + fields[0]);

        const Vertex a = vertex_of(fields[0]);
        const Vertex b = vertex_of(fields[1]);
        if (!seen.emplace(a, b).second)
            throw ParseError(line_no, "duplicate edge " + fields[0] + "→" + fields[1]);
        edges.push_back({a, b, w});
        if (end == text.size()) break;
    }
    if (edges.empty()) throw ParseError(line_no, "no edges");
    return WeightedDigraph::from_edges(labels.size(), edges, labels);
}

WeightedDigraph read_edge_list_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_edge_list(ss.str());
}

std::string to_edge_list(const WeightedDigraph& g) {
    std::string out;
    for (const auto& e : g.edges())
        out += g.label(e.from) + "\t" + g.label(e.to) + "\t" + e.weight.str() + "\n";
    return out;
}

int DistanceMatrix::diameter() const {
    int best = 0;
    for (const auto& row : d_)
        for (int v : row) best = std::max(best, v);
    return best;
}

DistanceMatrix distances(const WeightedDigraph& g) {
    const std::size_t n = g.size();
    std::vector<std::vector<int>> d(n, std::vector<int>(n, -1));
    for (Vertex s = 0; s < n; ++s) {
        std::queue<Vertex> q;
        d[s][s] = 0;
        q.push(s);
        while (!q.empty()) {
            const Vertex v = q.front();
            q.pop();
            for (Vertex w : g.out_neighbors(v))
                if (d[s][w] < 0) {
                    d[s][w] = d[s][v] + 1;
                    q.push(w);
                }
        }
    }
    return DistanceMatrix(std::move(d));
}

int inscribed_radius(const DistanceMatrix& d, Vertex x) {
    int best = 0;
    for (Vertex y = 0; y < d.size(); ++y) best = std::max(best, d(x, y));
    return best;
}

RVector distance_from(const DistanceMatrix& d, Vertex x) {
    RVector f(d.size());
    for (Vertex y = 0; y < d.size(); ++y) f[y] = Rational(d(x, y));
    return f;
}

RVector distance_to(const DistanceMatrix& d, Vertex x) {
    RVector f(d.size());
    for (Vertex y = 0; y < d.size(); ++y) f[y] = Rational(d(y, x));
    return f;
}

Neighborhoods neighborhoods(const WeightedDigraph& g, Vertex x) {
    Neighborhoods nb;
    nb.out = g.out_neighbors(x);
    nb.in = g.in_neighbors(x);
    std::set_union(nb.out.begin(), nb.out.end(), nb.in.begin(), nb.in.end(), std::back_inserter(nb.all));
    return nb;
}

Classification classify(const WeightedDigraph& g) {
    Classification c;
    const std::size_t n = g.size();
    c.unweighted = true;
    c.undirected = true;
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = 0; y < n; ++y) {
            if (g.has_edge(x, y) && g.weight(x, y) != Rational(1)) c.unweighted = false;
            if (g.weight(x, y) != g.weight(y, x)) c.undirected = false;
        }
    if (c.unweighted) {
        c.eulerian = true;
        for (Vertex x = 0; x < n; ++x)
            if (g.out_neighbors(x).size() != g.in_neighbors(x).size()) c.eulerian = false;
    }
    if (c.eulerian) {
        const std::size_t r = g.out_neighbors(0).size();
        bool constant = true;
        for (Vertex x = 0; x < n; ++x)
            if (g.out_neighbors(x).size() != r) constant = false;
        if (constant) c.regular_degree = r;
    }
    return c;
}

WeightedDigraph gen_complete(std::size_t n) {
    if (n < 3) throw DomainError("gen_complete needs n >= 3, got " + std::to_string(n));
    RMatrix mu = zero_matrix(n, n);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = 0; j < n; ++j)
            if (i != j) mu[i][j] = Rational(1);
    for (Vertex i = 0; i + 1 < n; ++i) mu[i + 1][i] = Rational(0);
    mu[0][n - 1] = Rational(0);
    return WeightedDigraph::from_matrix(std::move(mu));
}

WeightedDigraph gen_cycle(std::size_t n) {
    if (n < 3) throw DomainError("gen_cycle needs n >= 3, got " + std::to_string(n));
    RMatrix mu = zero_matrix(n, n);
    for (Vertex i = 0; i < n; ++i) mu[i][(i + 1) % n] = Rational(1);
    return WeightedDigraph::from_matrix(std::move(mu));
}

WeightedDigraph symmetrize(const WeightedDigraph& g) {
    const std::size_t n = g.size();
    RMatrix mu = zero_matrix(n, n);
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = 0; y < n; ++y) mu[x][y] = g.weight(x, y) + g.weight(y, x);
    return WeightedDigraph::from_matrix(std::move(mu), g.labels());
}

}  // namespace dricci
