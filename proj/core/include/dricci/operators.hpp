#pragma once

#include "dricci/curvature.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace dricci {

/// L = I - Pmean together with the weights of the inner product.
struct LaplacianData {
    RMatrix L;
    RVector weights;       // Perron measure
    RMatrix edge_weights;  // m(x) Pmean(x,y), symmetric

    [[nodiscard]] std::size_t size() const { return L.size(); }
};

LaplacianData laplacian_data(const MarkovData& md);

RVector apply_laplacian(const LaplacianData& ld, const RVector& f);
/// Delta = -L.
RVector apply_negative_laplacian(const MarkovData& md, const RVector& f);
/// sum_x f0(x) f1(x) m(x)
Rational inner_product(const LaplacianData& ld, const RVector& f0, const RVector& f1);

/// sum_y |f(x)-f(y)|^(p-2) (f(x)-f(y)) Pmean(x,y), exact for integer p >= 2.
/// Throws DomainError for p < 2.
RVector apply_p_laplacian(const MarkovData& md, const RVector& f, int p);
/// Floating-point variant for real p > 1. Throws DomainError for p <= 1.
std::vector<double> apply_p_laplacian(const MarkovData& md, const std::vector<double>& f, double p);

struct IdentitySides {
    Rational lhs;
    Rational rhs;
};

/// Both sides of the integration by parts formula over the subset omega
/// (boundary term included). Throws DomainError for an empty subset.
IdentitySides integration_by_parts_check(const LaplacianData& ld, const std::vector<Vertex>& omega, const RVector& f0,
                                         const RVector& f1);

/// Gamma(f0,f1) = (Delta(f0 f1) - f0 Delta f1 - f1 Delta f0) / 2
RVector gamma(const MarkovData& md, const RVector& f0, const RVector& f1);
/// Gamma2(f0,f1) = (Delta Gamma(f0,f1) - Gamma(f0, Delta f1) - Gamma(f1, Delta f0)) / 2
RVector gamma2(const MarkovData& md, const RVector& f0, const RVector& f1);
/// (1/4) sum_{y,z} (f(x) - 2f(y) + f(z))^2 Pmean(x,y) Pmean(y,z)
RVector gcal(const MarkovData& md, const RVector& f);

/// Closed forms, computed by direct summation.
RVector gamma_closed(const MarkovData& md, const RVector& f);
RVector delta_gamma_closed(const MarkovData& md, const RVector& f);
/// 2 Gamma(f, Delta f)
RVector twice_gamma_delta_closed(const MarkovData& md, const RVector& f);

/// T(x) = min over y in the full neighborhood of x of |N(x) cap N(y)|.
std::vector<std::size_t> triangle_fn(const WeightedDigraph& g);

struct CdConstants {
    RVector full;    // K(x) with the triangle term
    RVector simple;  // 2 inf Pmean(y,x) - 1
    /// min{inf P(y,x) over out-neighbors, inf reverse P(y,x) over in-neighbors} - 1, unweighted graphs only.
    std::optional<RVector> unweighted;
    RVector in_min;        // inf over the neighborhood of Pmean(y,x)
    RVector ratio_min;     // inf of Pmean(y,z)/Pmean(y,x) over triangles, 0 when there are none
    std::vector<std::size_t> triangles;
    /// Vertices whose ratio infimum ran over an empty set.
    std::vector<Vertex> empty_ratio;
};

CdConstants cd_constants(const GraphContext& ctx);
/// 2K - 3 + ((K-1)/2) T(x) ratio_min(x), valid when every kappa >= K.
RVector cd_constants_from_bound(const CdConstants& c, const Rational& k);

enum class CdVariant { Full, Simple, FromBound, Constant };
std::string_view cd_variant_name(CdVariant v);

/// Gamma2(f,f) - (Delta f)^2 / 2 - K(x) Gamma(f,f) per vertex.
RVector cd_residual(const MarkovData& md, const RVector& f, const RVector& constant);
/// FromBound and Constant need the curvature bound; DomainError otherwise.
RVector cd_check(const GraphContext& ctx, const CdConstants& c, const RVector& f, CdVariant variant,
                 std::optional<Rational> bound = std::nullopt);

}  // namespace dricci
