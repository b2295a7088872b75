#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "parter/errors.hpp"

namespace parter {

/// Exact rational number with arbitrary-precision numerator and denominator,
/// kept canonical at all times: den > 0, gcd(|num|, den) = 1, zero stored as
/// 0/1. Backed by GMP's mpq_t; GMP only preserves canonical form for
/// canonical inputs, so every constructor canonicalizes.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}

    Rational(long num, long den) {
        if (den == 0)
            throw InvalidArgumentError("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    Rational(mpz_class num, mpz_class den) {
        if (den == 0)
            throw InvalidArgumentError("Rational: zero denominator");
        v_ = mpq_class(std::move(num), std::move(den));
        v_.canonicalize();
    }

    /// Wraps an mpq value that is already canonical (GMP arithmetic output).
    static Rational from_canonical(mpq_class q) {
        Rational r;
        r.v_ = std::move(q);
        return r;
    }

    /// Parses "p" or "p/q" with optional leading sign on either part.
    /// Locale-independent; rejects anything else (whitespace, decimals, q=0).
    static Rational parse(std::string_view text);

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return mpq_sgn(v_.get_mpq_t()) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return mpq_sgn(v_.get_mpq_t()); }

    Rational operator-() const { return from_canonical(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw InvalidArgumentError("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    /// "p" when den = 1, else "p/q".
    std::string str() const {
        if (v_.get_den() == 1)
            return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

    /// Deterministic 64-bit digest of the value (not the representation);
    /// identical across platforms. Feeds matrix fingerprints.
    std::uint64_t digest() const {
        // residues mod two fixed 64-bit primes, mixed
        constexpr unsigned long p1 = 0xFFFFFFFFFFFFFFC5ULL; // 2^64 - 59
        constexpr unsigned long p2 = 0xFFFFFFFFFFFFFFFBULL; // 2^64 - 5, composite but fine as modulus
        std::uint64_t h = mpz_fdiv_ui(v_.get_num().get_mpz_t(), p1);
        h ^= 0x9E3779B97F4A7C15ULL * mpz_fdiv_ui(v_.get_den().get_mpz_t(), p2);
        if (sign() < 0) h = ~h;
        return h;
    }

private:
    mpq_class v_;
};

inline Rational Rational::parse(std::string_view text) {
    auto parse_int = [](std::string_view s, const char* what) -> mpz_class {
        if (s.empty())
            throw ParseError(std::string("empty ") + what);
        std::size_t start = (s[0] == '+' || s[0] == '-') ? 1 : 0;
        if (start == s.size())
            throw ParseError(std::string("missing digits in ") + what);
        for (std::size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw ParseError("invalid character '" + std::string(1, s[i]) +
                                 "' in " + what);
        return mpz_class(std::string(s), 10);
    };

    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        Rational r;
        r.v_ = mpq_class(parse_int(text, "integer"));
        return r;
    }
    mpz_class num = parse_int(text.substr(0, slash), "numerator");
    mpz_class den = parse_int(text.substr(slash + 1), "denominator");
    if (den == 0)
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational r;
    r.v_ = mpq_class(std::move(num), std::move(den));
    r.v_.canonicalize();
    return r;
}

} // namespace parter
