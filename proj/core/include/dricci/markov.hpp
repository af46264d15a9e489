#pragma once

#include "dricci/digraph.hpp"
#include "dricci/rational.hpp"

namespace dricci {

/// Kernels and measures derived from one graph. Built once, read-only after.
struct MarkovData {
    RMatrix P;      // P(x,y) = mu_xy / mu(x)
    RVector m;      // Perron measure, sums to 1
    RMatrix Prev;   // reverse kernel m(y) P(y,x) / m(x)
    RMatrix Pmean;  // (P + Prev) / 2
    RMatrix mxy;    // m(x) Pmean(x,y), symmetric

    [[nodiscard]] std::size_t size() const { return m.size(); }
};

/// Throws PerronDegenerate if the stationary system is not uniquely solvable.
MarkovData build_markov(const WeightedDigraph& g);

/// Nonnegative rational vector on V summing to exactly 1.
class ProbMeasure {
public:
    /// Throws DomainError on negative entries or a total other than 1.
    explicit ProbMeasure(RVector weights);
    static ProbMeasure dirac(std::size_t n, Vertex x);

    [[nodiscard]] const RVector& weights() const { return w_; }
    [[nodiscard]] const Rational& operator[](Vertex v) const { return w_[v]; }
    [[nodiscard]] std::size_t size() const { return w_.size(); }
    [[nodiscard]] std::vector<Vertex> support() const;

    /// (1-t) a + t b for t in [0,1].
    static ProbMeasure mix(const ProbMeasure& a, const ProbMeasure& b, const Rational& t);

    friend bool operator==(const ProbMeasure&, const ProbMeasure&) = default;

private:
    RVector w_;
};

/// (1-eps) delta_x + eps * step, where step(x) = 0 (simple graphs).
ProbMeasure lazy_from_row(const RVector& step, Vertex x, const Rational& eps);

/// nu_x^eps built on the mean kernel.
ProbMeasure lazy_measure(const MarkovData& md, Vertex x, const Rational& eps);

/// Row x of P.
RVector outer_step(const WeightedDigraph& g, Vertex x);
/// mu_zx / sum_y mu_yx as a function of z.
RVector inner_step(const WeightedDigraph& g, Vertex x);

/// (A^eps f)(x) = sum_z f(z) nu_x^eps(z).
RVector averaging_apply(const MarkovData& md, const Rational& eps, const RVector& f);

}  // namespace dricci
