#pragma once

#include <gmpxx.h>

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "subres/errors.hpp"

namespace subres {

/// Arbitrary-precision rational scalar, always kept canonical:
/// denominator > 0 and gcd(|numerator|, denominator) = 1. Zero is 0/1.
///
/// Text grammar: "n" or "n/d" with d > 0, e.g. "-3/7".
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den) : v_(canonical(mpz_class(num), mpz_class(den))) {}
    explicit Rational(mpz_class n) : v_(std::move(n)) {}
    Rational(mpz_class num, mpz_class den) : v_(canonical(std::move(num), std::move(den))) {}
    explicit Rational(mpq_class q) : v_(std::move(q)) { mpq_canonicalize(v_.get_mpq_t()); }

    static Rational parse(std::string_view text);

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return mpq_sgn(v_.get_mpq_t()) == 0; }
    int sgn() const { return mpq_sgn(v_.get_mpq_t()); }

    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    Rational operator-() const { return Rational(mpq_class(-v_), already_canonical{}); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw NonExactDivision("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    // GMP's mpq arithmetic yields canonical results from canonical operands,
    // so only fresh numerator/denominator pairs need mpq_canonicalize.
    struct already_canonical {};
    Rational(mpq_class q, already_canonical) : v_(std::move(q)) {}

    static mpq_class canonical(mpz_class num, mpz_class den) {
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        mpq_class q;
        mpz_set(mpq_numref(q.get_mpq_t()), num.get_mpz_t());
        mpz_set(mpq_denref(q.get_mpq_t()), den.get_mpz_t());
        mpq_canonicalize(q.get_mpq_t());
        return q;
    }

    mpq_class v_;
};

inline Rational Rational::parse(std::string_view text) {
    const auto bad = [&]() -> Rational {
        throw std::invalid_argument("invalid rational literal: \"" + std::string(text) + "\"");
    };
    const auto is_integer = [](std::string_view s, bool allow_sign) {
        if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    const auto slash = text.find('/');
    const std::string_view num_part = slash == std::string_view::npos ? text : text.substr(0, slash);
    if (!is_integer(num_part, true)) return bad();
    mpz_class num(std::string(num_part), 10);
    if (slash == std::string_view::npos) return Rational(std::move(num));
    const std::string_view den_part = text.substr(slash + 1);
    if (!is_integer(den_part, false)) return bad();  // grammar requires d > 0, so no sign
    mpz_class den(std::string(den_part), 10);
    if (den == 0) return bad();
    return Rational(std::move(num), std::move(den));
}

inline bool is_zero(const Rational& r) { return r.is_zero(); }

/// Exact division in the field of rationals; fails only on a zero divisor.
inline Rational exact_div(const Rational& a, const Rational& b) { return a / b; }

inline Rational pow(const Rational& base, int exp) {
    if (exp < 0) throw std::invalid_argument("pow: negative exponent");
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), static_cast<unsigned long>(exp));
    mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), static_cast<unsigned long>(exp));
    // powers of a canonical fraction stay canonical
    return Rational(mpq_class(n) / mpq_class(d));
}

inline mpz_class binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) throw std::invalid_argument("binomial(n, k) requires 0 <= k <= n");
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace subres
