#pragma once

#include <vector>

#include "subres/subres.hpp"

namespace test_helpers {

inline subres::Rational rat(long n, long d = 1) { return subres::Rational(n, d); }

inline subres::Poly poly(std::initializer_list<long> ascending_coeffs) {
    std::vector<subres::Rational> cs;
    for (long c : ascending_coeffs) cs.emplace_back(c);
    return subres::Poly::from_coeffs(std::move(cs));
}

inline subres::RootList roots(std::initializer_list<long> values) {
    std::vector<subres::Rational> rs;
    for (long v : values) rs.emplace_back(v);
    return subres::RootList(std::move(rs));
}

}  // namespace test_helpers
