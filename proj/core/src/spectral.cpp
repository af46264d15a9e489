#include "dricci/spectral.hpp"

#include "dricci/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

namespace dricci {

__extension__ using Wide = __int128;

SymmetricEigen jacobi_eigen(const DMatrix& input, double tol, int max_sweeps) {
    const std::size_t n = input.size();
    DMatrix a = input;
    DMatrix v(n, DVector(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) v[i][i] = 1.0;

    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) s += a[i][j] * a[i][j];
        return std::sqrt(s);
    };

    SymmetricEigen out;
    while (out.sweeps < max_sweeps && off_norm() >= tol) {
        ++out.sweeps;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a[p][q];
                if (apq == 0.0) continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                a[p][p] -= t * apq;
                a[q][q] += t * apq;
                a[p][q] = a[q][p] = 0.0;
                for (std::size_t r = 0; r < n; ++r) {
                    if (r != p && r != q) {
                        const double arp = a[r][p];
                        const double arq = a[r][q];
                        a[r][p] = a[p][r] = c * arp - s * arq;
                        a[r][q] = a[q][r] = s * arp + c * arq;
                    }
                    const double vrp = v[r][p];
                    const double vrq = v[r][q];
                    v[r][p] = c * vrp - s * vrq;
                    v[r][q] = s * vrp + c * vrq;
                }
            }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a[i][i] < a[j][j]; });
    for (std::size_t i : order) {
        const double lambda = a[i][i];
        DVector vec(n);
        for (std::size_t r = 0; r < n; ++r) vec[r] = v[r][i];
        double res = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
            double acc = -lambda * vec[r];
            for (std::size_t k = 0; k < n; ++k) acc += input[r][k] * vec[k];
            res += acc * acc;
        }
        out.values.push_back(lambda);
        out.vectors.push_back(std::move(vec));
        out.residuals.push_back(std::sqrt(res));
    }
    return out;
}

DMatrix symmetrized_laplacian(const MarkovData& md) {
    const std::size_t n = md.size();
    DMatrix s(n, DVector(n, 0.0));
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = 0; y < n; ++y) {
            const double off = md.mxy[x][y].to_double() / std::sqrt(md.m[x].to_double() * md.m[y].to_double());
            s[x][y] = (x == y ? 1.0 : 0.0) - off;
        }
    return s;
}

Spectrum spectrum(const MarkovData& md) {
    auto eig = jacobi_eigen(symmetrized_laplacian(md));
    return {std::move(eig.values), std::move(eig.residuals)};
}

Rational boundary_measure(const MarkovData& md, const std::vector<Vertex>& omega) {
    std::vector<bool> inside(md.size(), false);
    for (Vertex v : omega) inside.at(v) = true;
    Rational acc;
    for (Vertex y = 0; y < md.size(); ++y) {
        if (!inside[y]) continue;
        for (Vertex z = 0; z < md.size(); ++z)
            if (!inside[z]) acc += md.mxy[y][z];
    }
    return acc;
}

namespace {

std::vector<Vertex> validated_subset(const MarkovData& md, std::vector<Vertex> subset) {
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    if (subset.empty()) throw DomainError("subset must be nonempty");
    if (subset.back() >= md.size()) throw DomainError("subset vertex out of range");
    if (subset.size() == md.size()) throw DomainError("subset must be a proper subset");
    return subset;
}

// Gray-code walk over all nonempty subsets of `subset`, tracking the boundary
// and mass incrementally. `T` is the accumulator, `Cross` the type used to
// compare ratios by cross multiplication.
template <class T, class Cross>
std::pair<std::pair<T, T>, std::uint32_t> gray_search(const std::vector<Vertex>& subset, const std::vector<T>& mass,
                                                       const std::vector<std::vector<T>>& edge) {
    const std::size_t n = mass.size();
    const std::size_t k = subset.size();
    std::vector<T> into(n, T(0));  // sum over omega of edge[y][z], per z
    std::vector<bool> inside(n, false);
    T boundary(0);
    T total(0);
    std::uint32_t mask = 0;
    std::pair<T, T> best{T(0), T(0)};
    std::uint32_t best_mask = 0;
    bool have = false;
    const std::uint64_t count = std::uint64_t{1} << k;
    for (std::uint64_t i = 1; i < count; ++i) {
        const auto bit = static_cast<std::size_t>(__builtin_ctzll(i));
        const Vertex v = subset[bit];
        mask ^= (1u << bit);
        if (!inside[v]) {
            boundary += mass[v] - T(2) * into[v];
            total += mass[v];
            inside[v] = true;
            for (Vertex z = 0; z < n; ++z) into[z] += edge[v][z];
        } else {
            inside[v] = false;
            for (Vertex z = 0; z < n; ++z) into[z] -= edge[v][z];
            boundary -= mass[v] - T(2) * into[v];
            total -= mass[v];
        }
        if (mask == 0) continue;
        if (!have || Cross(boundary) * Cross(best.second) < Cross(best.first) * Cross(total)) {
            best = {boundary, total};
            best_mask = mask;
            have = true;
        }
    }
    return {best, best_mask};
}

std::vector<Vertex> unmask(const std::vector<Vertex>& subset, std::uint32_t mask) {
    std::vector<Vertex> out;
    for (std::size_t b = 0; b < subset.size(); ++b)
        if (mask & (1u << b)) out.push_back(subset[b]);
    return out;
}

}  // namespace

Isoperimetric dirichlet_isoperimetric(const MarkovData& md, const std::vector<Vertex>& subset_in) {
    const auto subset = validated_subset(md, subset_in);
    if (subset.size() > kIsoperimetricCap)
        throw BudgetExceeded("isoperimetric enumeration is capped at " + std::to_string(kIsoperimetricCap) +
                             " vertices, got " + std::to_string(subset.size()));
    const std::size_t n = md.size();

    // Scale to integers when the common denominator is small enough.
    mpz_class lcm = 1;
    for (Vertex x = 0; x < n; ++x) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), md.m[x].denominator().get_mpz_t());
        for (Vertex y = 0; y < n; ++y) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), md.mxy[x][y].denominator().get_mpz_t());
    }
    Isoperimetric out;
    if (lcm <= mpz_class(std::numeric_limits<std::int64_t>::max() / 4)) {
        const mpq_class scale(lcm);
        auto scaled = [&](const Rational& r) {
            const mpq_class s = r.raw() * scale;
            return static_cast<std::int64_t>(mpz_class(s.get_num()).get_si());
        };
        std::vector<std::int64_t> mass(n);
        std::vector<std::vector<std::int64_t>> edge(n, std::vector<std::int64_t>(n));
        for (Vertex x = 0; x < n; ++x) {
            mass[x] = scaled(md.m[x]);
            for (Vertex y = 0; y < n; ++y) edge[x][y] = scaled(md.mxy[x][y]);
        }
        const auto [ratio, mask] = gray_search<std::int64_t, Wide>(subset, mass, edge);
        out.value = Rational(static_cast<long>(ratio.first), static_cast<long>(ratio.second));
        out.witness = unmask(subset, mask);
    } else {
        std::vector<Rational> mass(md.m.begin(), md.m.end());
        const auto [ratio, mask] = gray_search<Rational, Rational>(subset, mass, md.mxy);
        out.value = ratio.first / ratio.second;
        out.witness = unmask(subset, mask);
    }
    return out;
}

double rayleigh_quotient(const MarkovData& md, const DVector& f, double p) {
    const std::size_t n = md.size();
    double num = 0.0;
    double den = 0.0;
    for (Vertex x = 0; x < n; ++x) {
        den += std::pow(std::abs(f[x]), p) * md.m[x].to_double();
        for (Vertex y = 0; y < n; ++y)
            if (!md.mxy[x][y].is_zero()) num += std::pow(std::abs(f[y] - f[x]), p) * md.mxy[x][y].to_double();
    }
    if (den == 0.0) throw DomainError("Rayleigh quotient of the zero function");
    return 0.5 * num / den;
}

namespace {

struct DoubleData {
    DVector mass;
    DMatrix edge;
};

DoubleData to_double(const MarkovData& md) {
    const std::size_t n = md.size();
    DoubleData d{DVector(n), DMatrix(n, DVector(n))};
    for (Vertex x = 0; x < n; ++x) {
        d.mass[x] = md.m[x].to_double();
        for (Vertex y = 0; y < n; ++y) d.edge[x][y] = md.mxy[x][y].to_double();
    }
    return d;
}

double signed_power(double t, double e) { return t == 0.0 ? 0.0 : std::pow(std::abs(t), e) * (t > 0 ? 1.0 : -1.0); }

double quotient(const DoubleData& d, const DVector& f, double p) {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t x = 0; x < f.size(); ++x) {
        den += std::pow(std::abs(f[x]), p) * d.mass[x];
        for (std::size_t y = 0; y < f.size(); ++y)
            if (d.edge[x][y] != 0.0) num += std::pow(std::abs(f[y] - f[x]), p) * d.edge[x][y];
    }
    return den == 0.0 ? std::numeric_limits<double>::infinity() : 0.5 * num / den;
}

// Gradient of the quotient restricted to the subset coordinates.
DVector gradient(const DoubleData& d, const DVector& f, double p, const std::vector<Vertex>& subset, double value) {
    double den = 0.0;
    for (std::size_t x = 0; x < f.size(); ++x) den += std::pow(std::abs(f[x]), p) * d.mass[x];
    DVector g(f.size(), 0.0);
    for (Vertex v : subset) {
        double dn = 0.0;
        for (std::size_t y = 0; y < f.size(); ++y)
            if (d.edge[v][y] != 0.0) dn += p * signed_power(f[v] - f[y], p - 1.0) * d.edge[v][y];
        const double dd = p * signed_power(f[v], p - 1.0) * d.mass[v];
        g[v] = (dn - value * dd) / den;
    }
    return g;
}

void normalize_max(DVector& f) {
    double m = 0.0;
    for (double v : f) m = std::max(m, std::abs(v));
    if (m > 0.0)
        for (double& v : f) v /= m;
}

std::pair<double, DVector> descend(const DoubleData& d, DVector f, double p, const std::vector<Vertex>& subset) {
    normalize_max(f);
    double value = quotient(d, f, p);
    double step = 0.1;
    for (int iter = 0; iter < 20000 && step > 1e-15; ++iter) {
        const DVector g = gradient(d, f, p, subset, value);
        double norm = 0.0;
        for (double v : g) norm += v * v;
        norm = std::sqrt(norm);
        if (norm < 1e-13) break;
        DVector trial = f;
        for (Vertex v : subset) trial[v] -= step * g[v] / norm;
        normalize_max(trial);
        const double tv = quotient(d, trial, p);
        if (tv < value) {
            f = std::move(trial);
            value = tv;
            step *= 1.5;
        } else {
            step *= 0.5;
        }
    }
    return {value, std::move(f)};
}

// Smallest eigenpair of the symmetrized operator restricted to the subset,
// mapped back to a function on V that vanishes outside.
std::pair<double, DVector> dirichlet_two(const MarkovData& md, const std::vector<Vertex>& subset) {
    const DMatrix s = symmetrized_laplacian(md);
    DMatrix sub(subset.size(), DVector(subset.size()));
    for (std::size_t i = 0; i < subset.size(); ++i)
        for (std::size_t j = 0; j < subset.size(); ++j) sub[i][j] = s[subset[i]][subset[j]];
    const auto eig = jacobi_eigen(sub);
    DVector f(md.size(), 0.0);
    double sign = 0.0;
    for (std::size_t i = 0; i < subset.size(); ++i) {
        f[subset[i]] = eig.vectors[0][i] / std::sqrt(md.m[subset[i]].to_double());
        if (sign == 0.0 && f[subset[i]] != 0.0) sign = f[subset[i]] > 0 ? 1.0 : -1.0;
    }
    for (double& v : f) v *= (sign == 0.0 ? 1.0 : sign);
    normalize_max(f);
    return {eig.values[0], std::move(f)};
}

}  // namespace

std::pair<double, DVector> dirichlet_descent(const MarkovData& md, const std::vector<Vertex>& subset_in, double p,
                                             std::uint64_t seed, int restarts) {
    if (!(p > 1.0)) throw DomainError("p must exceed 1");
    const auto subset = validated_subset(md, subset_in);
    const DoubleData d = to_double(md);
    DVector base = dirichlet_two(md, subset).second;
    for (double& v : base) v = std::abs(v);

    std::mt19937_64 rng(seed);
    auto unit = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    std::pair<double, DVector> best{std::numeric_limits<double>::infinity(), {}};
    for (int r = 0; r < std::max(1, restarts); ++r) {
        DVector start = base;
        if (r > 0)
            for (Vertex v : subset) start[v] = (r % 2 == 0) ? base[v] + 0.5 * (unit() - 0.5) : unit();
        auto candidate = descend(d, std::move(start), p, subset);
        if (candidate.first < best.first) best = std::move(candidate);
    }
    return best;
}

DirichletResult dirichlet_poincare(const MarkovData& md, const std::vector<Vertex>& subset_in, double p,
                                   std::uint64_t seed) {
    if (!(p > 1.0)) throw DomainError("p must exceed 1");
    DirichletResult out;
    out.subset = validated_subset(md, subset_in);
    if (out.subset.size() > kIsoperimetricCap)
        throw BudgetExceeded("isoperimetric enumeration is capped at " + std::to_string(kIsoperimetricCap) +
                             " vertices");
    out.p = p;
    if (p == 2.0) {
        auto [value, f] = dirichlet_two(md, out.subset);
        out.value = value;
        out.minimizer = std::move(f);
        out.exact_path = true;
    } else {
        auto [value, f] = dirichlet_descent(md, out.subset, p, seed);
        out.value = value;
        out.minimizer = std::move(f);
        out.exact_path = false;
    }
    out.isoperimetric = dirichlet_isoperimetric(md, out.subset);
    out.cheeger_bound = std::pow(2.0, p - 1.0) / std::pow(p, p) * std::pow(out.isoperimetric.value.to_double(), p);
    return out;
}

IdentitySides coarea_check(const MarkovData& md, const RVector& f) {
    const std::size_t n = md.size();
    RVector levels(f.begin(), f.end());
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    IdentitySides s;
    // On [levels[i], levels[i+1]) the superlevel set {f > t} is {f > levels[i]}.
    for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
        std::vector<Vertex> omega;
        for (Vertex x = 0; x < n; ++x)
            if (f[x] > levels[i]) omega.push_back(x);
        s.lhs += (levels[i + 1] - levels[i]) * boundary_measure(md, omega);
    }
    for (Vertex y = 0; y < n; ++y)
        for (Vertex z = 0; z < n; ++z)
            if (!md.mxy[y][z].is_zero()) s.rhs += (f[y] - f[z]).abs() * md.mxy[y][z];
    s.rhs /= Rational(2);
    return s;
}

}  // namespace dricci
