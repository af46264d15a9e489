#pragma once

#include "dricci/curvature.hpp"

#include <cstdint>
#include <string>

namespace dricci {

/// Two factors and the positive mixing weights of their weighted product.
struct ProductSpec {
    WeightedDigraph first;
    WeightedDigraph second;
    Rational alpha;
    Rational beta;

    /// Throws DomainError unless alpha, beta > 0.
    ProductSpec(WeightedDigraph g, WeightedDigraph h, Rational a, Rational b);

    /// Row-major index of (x, x').
    [[nodiscard]] Vertex index(Vertex x, Vertex xp) const { return x * second.size() + xp; }
    [[nodiscard]] Vertex first_of(Vertex v) const { return v / second.size(); }
    [[nodiscard]] Vertex second_of(Vertex v) const { return v % second.size(); }
    /// beta / (alpha + beta)
    [[nodiscard]] Rational first_share() const { return beta / (alpha + beta); }
    /// alpha / (alpha + beta)
    [[nodiscard]] Rational second_share() const { return alpha / (alpha + beta); }
};

/// mu((x,x'),(y,x')) = beta mu'(x') mu_xy and mu((x,x'),(x,y')) = alpha mu(x) mu'_x'y'.
/// Vertex labels are "(a,b)".
WeightedDigraph cartesian_product(const ProductSpec& spec);

/// Contexts for both factors and the product, built once.
struct ProductContext {
    ProductSpec spec;
    GraphContext first;
    GraphContext second;
    GraphContext product;

    explicit ProductContext(ProductSpec s);
};

struct IdentityCheck {
    std::string name;
    bool holds = true;
    std::string detail;  // first mismatch with both sides, empty when it holds
};

struct ProductCheckReport {
    std::vector<IdentityCheck> checks;

    [[nodiscard]] bool all_hold() const;
    [[nodiscard]] const IdentityCheck* first_failure() const;
};

/// Vertex weight, kernels, Perron measure, distance, the Laplacian of
/// product-form functions and the three mean curvatures, each compared
/// exactly against the factor mixtures.
ProductCheckReport check_product_identities(const ProductContext& pc, std::uint64_t seed = 1,
                                            int random_functions = 10);

struct ProductCurvatureCheck {
    Vertex x = 0;
    Vertex y = 0;
    Rational direct;     // ricci on the product
    Rational predicted;  // mixture of factor curvatures
    [[nodiscard]] bool holds() const { return direct == predicted; }
};

ProductCurvatureCheck check_product_curvature(const ProductContext& pc, Vertex x, Vertex y);
/// Every ordered pair of distinct product vertices.
std::vector<ProductCurvatureCheck> check_product_curvature_all(const ProductContext& pc);

}  // namespace dricci
