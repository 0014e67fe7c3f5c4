#pragma once

#include <vector>

#include "subres/root_list.hpp"

namespace subres {

/// An order-preserving split of a parent list into a chosen sublist and its
/// complement. positions holds the 1-based indices of the chosen elements
/// within the parent, strictly increasing.
template <class L>
struct SubsetSplit {
    L chosen;
    L complement;
    IndexList positions;
};

namespace detail {

/// All k-combinations of {0, ..., n-1} in lexicographic order.
inline std::vector<IndexList> combinations(int n, int k) {
    std::vector<IndexList> out;
    IndexList comb = iota_list(k);
    while (true) {
        out.push_back(comb);
        int i = k - 1;
        while (i >= 0 && comb[static_cast<size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++comb[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            comb[static_cast<size_t>(j)] = comb[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
}

}  // namespace detail

/// All C(|parent|, k) order-preserving splits of the parent.
inline std::vector<SubsetSplit<RootList>> subsets(const RootList& parent, int k) {
    if (k < 0 || k > parent.size()) throw std::invalid_argument("subsets: k out of range");
    std::vector<SubsetSplit<RootList>> out;
    for (const IndexList& comb : detail::combinations(parent.size(), k)) {
        SubsetSplit<RootList> split;
        std::vector<Rational> chosen, complement;
        size_t next = 0;
        for (int i = 0; i < parent.size(); ++i) {
            if (next < comb.size() && comb[next] == i) {
                chosen.push_back(parent[i]);
                split.positions.push_back(i + 1);
                ++next;
            } else {
                complement.push_back(parent[i]);
            }
        }
        split.chosen = RootList(std::move(chosen));
        split.complement = RootList(std::move(complement));
        out.push_back(std::move(split));
    }
    return out;
}

inline std::vector<SubsetSplit<IndexList>> subsets(const IndexList& parent, int k) {
    const int n = static_cast<int>(parent.size());
    if (k < 0 || k > n) throw std::invalid_argument("subsets: k out of range");
    std::vector<SubsetSplit<IndexList>> out;
    for (const IndexList& comb : detail::combinations(n, k)) {
        SubsetSplit<IndexList> split;
        size_t next = 0;
        for (int i = 0; i < n; ++i) {
            if (next < comb.size() && comb[next] == i) {
                split.chosen.push_back(parent[static_cast<size_t>(i)]);
                split.positions.push_back(i + 1);
                ++next;
            } else {
                split.complement.push_back(parent[static_cast<size_t>(i)]);
            }
        }
        out.push_back(std::move(split));
    }
    return out;
}

/// Parity sign of moving a sublist to the front of its parent while keeping
/// relative orders: (-1)^{sum_k (positions_k - k)} with 1-based positions.
inline int sg_sublist(const IndexList& positions, int parent_len) {
    if (parent_len < 0) throw std::invalid_argument("sg_sublist: negative parent length");
    long transpositions = 0;
    int prev = 0;
    for (size_t k = 0; k < positions.size(); ++k) {
        const int p = positions[k];
        if (p <= prev || p > parent_len)
            throw std::invalid_argument("sg_sublist: positions must be strictly increasing, 1-based, within the parent");
        transpositions += p - static_cast<int>(k + 1);
        prev = p;
    }
    return transpositions % 2 == 0 ? 1 : -1;
}

}  // namespace subres
