#include "dricci/rational.hpp"

#include "dricci/errors.hpp"

#include <cctype>
#include <ostream>

namespace dricci {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Parse: return "ParseError";
        case ErrorKind::NotStronglyConnected: return "NotStronglyConnected";
        case ErrorKind::SelfLoop: return "SelfLoop";
        case ErrorKind::Domain: return "DomainError";
        case ErrorKind::PerronDegenerate: return "PerronDegenerate";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::NotRegular: return "NotRegular";
        case ErrorKind::NotAnEdge: return "NotAnEdge";
        case ErrorKind::Internal: return "InternalError";
    }
    return "Error";
}

Rational::Rational(long numerator, long denominator) {
    if (denominator == 0) throw DomainError("zero denominator");
    q_ = mpq_class(numerator, denominator);
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::pow(int exponent) const {
    Rational base = *this;
    if (exponent < 0) {
        base = Rational(1) / base;
        exponent = -exponent;
    }
    Rational result(1);
    while (exponent > 0) {
        if (exponent & 1) result *= base;
        base *= base;
        exponent >>= 1;
    }
    return result;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    const std::string original(text);
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    mpq_class value;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto num = text.substr(0, slash);
        auto den = text.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) throw DomainError("malformed fraction '" + original + "'");
        const mpz_class d(std::string(den), 10);
        if (d == 0) throw DomainError("zero denominator in '" + original + "'");
        value = mpq_class(mpz_class(std::string(num), 10), d);
    } else if (auto dot_pos = text.find('.'); dot_pos != std::string_view::npos) {
        auto whole = text.substr(0, dot_pos);
        auto frac = text.substr(dot_pos + 1);
        if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
            (!frac.empty() && !all_digits(frac)))
            throw DomainError("malformed decimal '" + original + "'");
        std::string digits = std::string(whole) + std::string(frac);
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        value = mpq_class(mpz_class(digits, 10), scale);
    } else {
        if (!all_digits(text)) throw DomainError("malformed number '" + original + "'");
        value = mpq_class(mpz_class(std::string(text), 10));
    }
    value.canonicalize();
    if (negative) value = -value;
    return Rational(value);
}

std::string Rational::str() const { return q_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

RMatrix zero_matrix(std::size_t rows, std::size_t cols) {
    return RMatrix(rows, RVector(cols, Rational(0)));
}

Rational dot(const RVector& a, const RVector& b) {
    Rational s(0);
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) s += a[i] * b[i];
    return s;
}

Rational sum(const RVector& v) {
    Rational s(0);
    for (const auto& x : v) s += x;
    return s;
}

}  // namespace dricci
