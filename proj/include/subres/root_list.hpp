#pragma once

#include <numeric>
#include <utility>
#include <vector>

#include "subres/poly.hpp"

namespace subres {

/// Ordered list of pairwise-distinct rationals. Order is significant (these
/// are ordered root lists, not sets); distinctness is a construction-time
/// hard error because the sum formulas divide by within-list differences.
class RootList {
public:
    RootList() = default;
    explicit RootList(std::vector<Rational> elems) : elems_(std::move(elems)) {
        for (size_t i = 0; i < elems_.size(); ++i)
            for (size_t j = i + 1; j < elems_.size(); ++j)
                if (elems_[i] == elems_[j])
                    throw std::invalid_argument("duplicate element in root list: " + elems_[i].str());
    }

    int size() const { return static_cast<int>(elems_.size()); }
    bool empty() const { return elems_.empty(); }
    const Rational& operator[](int i) const { return elems_.at(static_cast<size_t>(i)); }
    const std::vector<Rational>& elems() const { return elems_; }
    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }

    RootList prefix(int k) const {
        if (k < 0 || k > size()) throw std::invalid_argument("prefix length out of range");
        return RootList(std::vector<Rational>(elems_.begin(), elems_.begin() + k));
    }

    bool contains(const Rational& r) const {
        for (const auto& e : elems_)
            if (e == r) return true;
        return false;
    }

    friend bool operator==(const RootList& a, const RootList& b) { return a.elems_ == b.elems_; }
    friend bool operator!=(const RootList& a, const RootList& b) { return !(a == b); }

private:
    std::vector<Rational> elems_;
};

/// Ordered list of non-negative integers (exponent lists and sublist
/// selections). Contextual invariants are validated by the consuming ops.
using IndexList = std::vector<int>;

inline IndexList iota_list(int n) {
    if (n < 0) throw std::invalid_argument("iota_list: negative length");
    IndexList e(static_cast<size_t>(n));
    std::iota(e.begin(), e.end(), 0);
    return e;
}

/// Monic product of (x - alpha) over the list; empty list gives 1.
inline Poly poly_from_roots(const RootList& roots) {
    Poly p(1l);
    for (const auto& alpha : roots)
        p = p * Poly::from_coeffs({-alpha, Rational(1)});
    return p;
}

/// R(x, Y): the same monic product, named for formula readability.
inline Poly r_poly(const RootList& y) { return poly_from_roots(y); }

/// R(X, Y) = prod over all ordered pairs (x, y) of (x - y); empty side gives 1.
inline Rational r_pair(const RootList& x, const RootList& y) {
    Rational acc(1);
    for (const auto& xi : x)
        for (const auto& yj : y) acc *= xi - yj;
    return acc;
}

}  // namespace subres
