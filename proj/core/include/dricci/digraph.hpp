#pragma once

#include "dricci/rational.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dricci {

using Vertex = std::size_t;

struct Edge {
    Vertex from = 0;
    Vertex to = 0;
    Rational weight;
};

/// Simple, strongly connected, finite weighted directed graph.
///
/// Vertices are dense indices 0..n-1; labels are kept only for I/O. The
/// weight matrix mu has mu(x,y) > 0 exactly when x -> y, and a zero diagonal.
/// Every constructor validates, so a live object is always strongly connected.
class WeightedDigraph {
public:
    /// Throws SelfLoop, DomainError (negative weight / shape) or NotStronglyConnected.
    static WeightedDigraph from_matrix(RMatrix mu, std::vector<std::string> labels = {});
    static WeightedDigraph from_edges(std::size_t n, const std::vector<Edge>& edges,
                                      std::vector<std::string> labels = {});

    [[nodiscard]] std::size_t size() const { return mu_.size(); }
    [[nodiscard]] const Rational& weight(Vertex x, Vertex y) const { return mu_[x][y]; }
    [[nodiscard]] bool has_edge(Vertex x, Vertex y) const { return mu_[x][y].sign() > 0; }
    /// mu(x) = sum_y mu(x,y).
    [[nodiscard]] const Rational& vertex_weight(Vertex x) const { return out_weight_[x]; }
    [[nodiscard]] const RMatrix& weights() const { return mu_; }

    [[nodiscard]] const std::string& label(Vertex x) const { return labels_[x]; }
    [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
    [[nodiscard]] std::optional<Vertex> find(std::string_view label) const;

    /// Edges in row-major order.
    [[nodiscard]] std::vector<Edge> edges() const;
    [[nodiscard]] std::size_t edge_count() const;

    [[nodiscard]] const std::vector<Vertex>& out_neighbors(Vertex x) const { return out_[x]; }
    [[nodiscard]] const std::vector<Vertex>& in_neighbors(Vertex x) const { return in_[x]; }

private:
    WeightedDigraph() = default;
    void validate_and_index();

    RMatrix mu_;
    RVector out_weight_;
    std::vector<std::string> labels_;
    std::vector<std::vector<Vertex>> out_;
    std::vector<std::vector<Vertex>> in_;
};

/// Parses the TSV edge list: `<src> TAB <dst> TAB <weight>` per line, `#`
/// comments, weights as decimals or `p/q`. Vertices are numbered in order of
/// first appearance. Duplicate edges are an error, never merged.
WeightedDigraph parse_edge_list(std::string_view text);
WeightedDigraph read_edge_list_file(const std::string& path);
/// Inverse of parse_edge_list (edges in row-major order, weights as p/q).
std::string to_edge_list(const WeightedDigraph& g);

/// Hop-count distances; edge weights never enter. Not symmetric in general.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(std::vector<std::vector<int>> d) : d_(std::move(d)) {}

    [[nodiscard]] int operator()(Vertex x, Vertex y) const { return d_[x][y]; }
    [[nodiscard]] std::size_t size() const { return d_.size(); }
    [[nodiscard]] int diameter() const;
    /// max{d(x,y), d(y,x)}
    [[nodiscard]] int symmetric_max(Vertex x, Vertex y) const { return std::max(d_[x][y], d_[y][x]); }
    [[nodiscard]] const std::vector<std::vector<int>>& rows() const { return d_; }

private:
    std::vector<std::vector<int>> d_;
};

DistanceMatrix distances(const WeightedDigraph& g);

/// InRad_x V = max_y d(x,y).
int inscribed_radius(const DistanceMatrix& d, Vertex x);

/// rho_x(y) = d(x,y) as a rational function on V.
RVector distance_from(const DistanceMatrix& d, Vertex x);
/// reverse rho_x(y) = d(y,x).
RVector distance_to(const DistanceMatrix& d, Vertex x);

struct Neighborhoods {
    std::vector<Vertex> out;  // N_x
    std::vector<Vertex> in;   // reverse N_x
    std::vector<Vertex> all;  // N_x union reverse N_x, sorted
};

Neighborhoods neighborhoods(const WeightedDigraph& g, Vertex x);

struct Classification {
    bool unweighted = false;
    bool undirected = false;
    /// Defined for unweighted graphs only: in-degree equals out-degree everywhere.
    bool eulerian = false;
    /// Set when the graph is Eulerian with constant degree r.
    std::optional<std::size_t> regular_degree;
};

Classification classify(const WeightedDigraph& g);

/// Directed complete graph on x1..xn minus the edges x_{i+1} -> x_i and x1 -> xn.
WeightedDigraph gen_complete(std::size_t n);
/// Directed cycle x1 -> x2 -> ... -> xn -> x1.
WeightedDigraph gen_cycle(std::size_t n);
/// Undirected graph with weight mu(x,y) + mu(y,x) on both orientations.
WeightedDigraph symmetrize(const WeightedDigraph& g);

}  // namespace dricci
