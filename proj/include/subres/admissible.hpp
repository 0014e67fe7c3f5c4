#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace subres {

/// The one admissibility gate shared by every subresultant operation:
/// 0 <= d < min(m, n), or d = min(m, n) when the degrees differ.
/// A degree below zero stands for the zero polynomial and admits nothing.
inline bool admissible(int m, int n, int d) noexcept {
    if (m < 0 || n < 0 || d < 0) return false;
    const int mn = std::min(m, n);
    return d < mn || (d == mn && m != n);
}

inline void require_admissible(int m, int n, int d) {
    if (admissible(m, n, d)) return;
    std::string msg = "d=" + std::to_string(d) + " inadmissible: ";
    if (m < 0 || n < 0)
        msg += "zero polynomial";
    else if (d < 0)
        msg += "negative";
    else if (m == n && d == m)
        msg += "m=n";
    else
        msg += "exceeds min(m,n)=" + std::to_string(std::min(m, n));
    throw std::invalid_argument(msg);
}

/// All admissible d for the pair of degrees, ascending; empty when none.
inline std::vector<int> admissible_degrees(int m, int n) {
    std::vector<int> ds;
    if (m < 0 || n < 0) return ds;
    const int mn = std::min(m, n);
    for (int d = 0; d < mn; ++d) ds.push_back(d);
    if (m != n) ds.push_back(mn);
    return ds;
}

}  // namespace subres
