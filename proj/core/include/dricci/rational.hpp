#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace dricci {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class; every operation is exact and the
/// canonical form is restored after each arithmetic step.
class Rational {
public:
    Rational() = default;
    Rational(long value) : q_(value) {}                 // NOLINT(google-explicit-constructor)
    Rational(int value) : q_(static_cast<long>(value)) {} // NOLINT(google-explicit-constructor)
    Rational(long numerator, long denominator);
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Parses "p", "-p", "p/q" or a finite decimal "12.375". Throws DomainError.
    static Rational parse(std::string_view text);

    [[nodiscard]] std::string str() const;
    [[nodiscard]] double to_double() const { return q_.get_d(); }
    [[nodiscard]] const mpq_class& raw() const { return q_; }

    [[nodiscard]] mpz_class numerator() const { return q_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return q_.get_den(); }

    [[nodiscard]] int sign() const { return sgn(q_); }
    [[nodiscard]] bool is_zero() const { return sgn(q_) == 0; }
    [[nodiscard]] bool is_integer() const { return q_.get_den() == 1; }

    [[nodiscard]] Rational abs() const { return Rational(::abs(q_)); }
    /// Integer power with a possibly negative exponent.
    [[nodiscard]] Rational pow(int exponent) const;

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class q_{0};
};

inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }
/// Positive part (t)_+.
inline Rational positive_part(const Rational& t) { return t.sign() > 0 ? t : Rational(0); }

using RVector = std::vector<Rational>;
using RMatrix = std::vector<RVector>;

RMatrix zero_matrix(std::size_t rows, std::size_t cols);
Rational dot(const RVector& a, const RVector& b);
Rational sum(const RVector& v);

}  // namespace dricci
