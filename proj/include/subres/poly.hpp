#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "subres/rational.hpp"

namespace subres {

/// Dense univariate polynomial in x over Rational. coeffs()[i] is the
/// coefficient of x^i and the highest stored entry is nonzero; the zero
/// polynomial is the empty sequence and reports degree() == kZeroDegree
/// (the "minus infinity" stand-in).
class Poly {
public:
    static constexpr int kZeroDegree = -1;

    Poly() = default;
    explicit Poly(Rational constant) {
        if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
    }
    explicit Poly(long constant) : Poly(Rational(constant)) {}

    static Poly from_coeffs(std::vector<Rational> coeffs) {
        Poly p;
        p.coeffs_ = std::move(coeffs);
        p.trim();
        return p;
    }

    /// c * x^power
    static Poly monomial(int power, Rational c = Rational(1)) {
        if (power < 0) throw std::invalid_argument("monomial: negative power");
        Poly p;
        if (!c.is_zero()) {
            p.coeffs_.assign(static_cast<size_t>(power) + 1, Rational());
            p.coeffs_.back() = std::move(c);
        }
        return p;
    }

    static Poly variable() { return monomial(1); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == Rational(1); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    /// Coefficient of x^i; zero outside the stored range.
    Rational coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational();
        return coeffs_[static_cast<size_t>(i)];
    }

    Rational leading() const { return coeffs_.empty() ? Rational() : coeffs_.back(); }

    /// Horner evaluation at t.
    Rational eval(const Rational& t) const {
        Rational acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    Poly operator-() const {
        Poly r(*this);
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    Poly& operator+=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        Poly r;
        r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational());
        for (size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (size_t j = 0; j < b.coeffs_.size(); ++j)
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return r;  // leading product of nonzeros is nonzero over a field
    }

    friend Poly operator*(const Poly& p, const Rational& c) {
        if (c.is_zero() || p.is_zero()) return Poly();
        Poly r(p);
        for (auto& e : r.coeffs_) e *= c;
        return r;
    }
    friend Poly operator*(const Rational& c, const Poly& p) { return p * c; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Human-readable form, descending powers: "-4x + 6", "x^2 - 5x + 6", "0".
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

inline std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const Rational c = coeff(k);
        if (c.is_zero()) continue;
        const bool negative = c.sgn() < 0;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        const Rational mag = negative ? -c : c;
        if (k == 0) {
            out += mag.str();
        } else {
            if (mag != Rational(1)) out += mag.str();
            out += "x";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

inline bool is_zero(const Poly& p) { return p.is_zero(); }

/// Exact polynomial quotient a / b; throws NonExactDivision when b is zero
/// or leaves a nonzero remainder.
inline Poly exact_div(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw NonExactDivision("polynomial division by zero");
    if (a.is_zero()) return Poly();
    std::vector<Rational> rem(a.coeffs());
    const int db = b.degree();
    const Rational lead = b.leading();
    std::vector<Rational> quot;
    int dr = a.degree();
    if (dr >= db) quot.assign(static_cast<size_t>(dr - db) + 1, Rational());
    while (dr >= db) {
        const Rational q = rem[static_cast<size_t>(dr)] / lead;
        quot[static_cast<size_t>(dr - db)] = q;
        for (int i = 0; i <= db; ++i)
            rem[static_cast<size_t>(dr - db + i)] -= q * b.coeff(i);
        // the top term cancels by construction
        while (dr >= 0 && rem[static_cast<size_t>(dr)].is_zero()) --dr;
    }
    if (dr >= 0) throw NonExactDivision("non-exact polynomial division");
    return Poly::from_coeffs(std::move(quot));
}

}  // namespace subres
