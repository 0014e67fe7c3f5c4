#pragma once

#include <map>

#include "subres/builders.hpp"
#include "subres/combinatorics.hpp"

namespace subres {

namespace detail {

inline Poly apply_sign(Poly p, long exponent) {
    return (exponent % 2 + 2) % 2 == 0 ? p : -p;
}

}  // namespace detail

/// The defining determinant matrix of Sres_d: size m + n - 2d, an f band of
/// n - d rows over a g band of m - d rows, coefficients descending from the
/// leading one, and the last column replaced by x^k f(x) resp. x^k g(x).
inline DMatrix<Poly> sres_def_matrix(const Poly& f, const Poly& g, int d) {
    const int m = f.degree(), n = g.degree();
    require_admissible(m, n, d);
    const int size = m + n - 2 * d;
    DMatrix<Poly> mat(size, size);
    for (int i = 0; i < n - d; ++i) {
        for (int j = i; j < size - 1; ++j)
            mat.at(i, j) = Poly(f.coeff(m - (j - i)));
        mat.at(i, size - 1) = Poly::monomial(n - d - 1 - i) * f;
    }
    for (int i = 0; i < m - d; ++i) {
        const int r = (n - d) + i;
        for (int j = i; j < size - 1; ++j)
            mat.at(r, j) = Poly(g.coeff(n - (j - i)));
        mat.at(r, size - 1) = Poly::monomial(m - d - 1 - i) * g;
    }
    return mat;
}

/// Sres_d(f, g) from the defining determinant. Accepts arbitrary (non-monic)
/// leading coefficients; the result has degree at most d.
inline Poly sres_def(const Poly& f, const Poly& g, int d) {
    return det_bareiss(sres_def_matrix(f, g, d));
}

/// Sres_d for every admissible d, keyed by d.
inline std::map<int, Poly> sres_chain(const Poly& f, const Poly& g) {
    const int m = f.degree(), n = g.degree();
    require_admissible(m, n, 0);  // nonempty admissible range starts at 0
    std::map<int, Poly> chain;
    for (int d : admissible_degrees(m, n)) chain.emplace(d, sres_def(f, g, d));
    return chain;
}

/// Sres_d via the block stack: (-1)^{d + (n-d)(m-d)} |S_d|. Root-formula
/// pathway, so inputs must be monic.
inline Poly sres_sd(const Poly& f, const Poly& g, int d) {
    const int m = f.degree(), n = g.degree();
    require_admissible(m, n, d);
    if (!f.is_monic() || !g.is_monic())
        throw std::invalid_argument("sres_sd requires monic inputs");
    return detail::apply_sign(det_bareiss(build_sd(f, g, d)),
                              d + static_cast<long>(n - d) * (m - d));
}

/// Hong's formula in the roots of f: the m x m determinant of
/// [ <x-t, A>_d ; <g(t), A>_{m-d} ] divided by the Vandermonde of A.
inline Poly sres_hong(const RootList& a, const RootList& b, int d) {
    const int m = a.size();
    require_admissible(m, b.size(), d);
    const Poly g = poly_from_roots(b);
    const DMatrix<Poly> mat =
        vstack(bracket(x_minus_t, a, iota_list(d)), to_poly(bracket(g, a, iota_list(m - d))));
    return exact_div(det_bareiss(mat), Poly(vandermonde_det(a)));
}

namespace detail {

inline void check_partition(const IndexList& p_list, const IndexList& q_list, int d) {
    std::vector<bool> seen(static_cast<size_t>(d), false);
    for (const IndexList* part : {&p_list, &q_list}) {
        int prev = -1;
        for (int e : *part) {
            if (e <= prev || e >= d || seen[static_cast<size_t>(e)])
                throw std::invalid_argument("malformed partition (P, Q) of (0..d-1)");
            seen[static_cast<size_t>(e)] = true;
            prev = e;
        }
    }
    // |P| + |Q| = d and no repeats, so coverage is already complete
}

}  // namespace detail

/// Sres_d via the partitioned (m+n) x (m+n) block determinant: P and Q are
/// disjoint sublists with P u Q = (0..d-1); the top rows evaluate x - t on A
/// at exponents P and on B at exponents Q, over the full power rows of A and
/// B, with sign (-1)^{q + (m-d)n} sg(P, E) and the Vandermonde denominators.
inline Poly lemma3_rhs(const RootList& a, const RootList& b, const IndexList& p_list,
                       const IndexList& q_list) {
    const int m = a.size(), n = b.size();
    const int p = static_cast<int>(p_list.size()), q = static_cast<int>(q_list.size());
    const int d = p + q;
    detail::check_partition(p_list, q_list, d);
    require_admissible(m, n, d);

    const DMatrix<Poly> top = hstack(bracket(x_minus_t, a, p_list), DMatrix<Poly>(p, n));
    const DMatrix<Poly> mid = hstack(DMatrix<Poly>(q, m), bracket(x_minus_t, b, q_list));
    const IndexList full = iota_list(m + n - d);
    const DMatrix<Poly> bottom = hstack(to_poly(bracket(Poly(1l), a, full)),
                                        to_poly(bracket(Poly(1l), b, full)));
    const Poly det = det_bareiss(vstack(top, vstack(mid, bottom)));

    IndexList positions(p_list.size());
    for (size_t i = 0; i < p_list.size(); ++i) positions[i] = p_list[i] + 1;  // E is (0..d-1)
    const int sg = sg_sublist(positions, d);
    const Poly signed_det = detail::apply_sign(det * Rational(sg), q + static_cast<long>(m - d) * n);
    return exact_div(signed_det, Poly(vandermonde_det(a) * vandermonde_det(b)));
}

/// Sres_d as the single sum over d-element sublists A' of A:
/// sum R(x, A') R(A\A', B) / R(A\A', A').
inline Poly single_sum(const RootList& a, const RootList& b, int d) {
    require_admissible(a.size(), b.size(), d);
    Poly acc;
    for (const auto& split : subsets(a, d)) {
        const Rational w =
            r_pair(split.complement, b) / r_pair(split.complement, split.chosen);
        acc += r_poly(split.chosen) * w;
    }
    return acc;
}

/// The raw double sum Sylv^{p,q}(A, B; x) over all sublist pairs (A', B') of
/// sizes (p, q). Defined for any 0 <= p <= |A|, 0 <= q <= |B|; only p + q in
/// the admissible range relates to a subresultant.
inline Poly double_sum(const RootList& a, const RootList& b, int p, int q) {
    if (p < 0 || p > a.size() || q < 0 || q > b.size())
        throw std::invalid_argument("double_sum: p or q out of range");
    const auto a_splits = subsets(a, p);
    const auto b_splits = subsets(b, q);
    Poly acc;
    for (const auto& as : a_splits) {
        const Poly ra = r_poly(as.chosen);
        for (const auto& bs : b_splits) {
            const Rational numer =
                r_pair(as.chosen, bs.chosen) * r_pair(as.complement, bs.complement);
            const Rational denom =
                r_pair(as.chosen, as.complement) * r_pair(bs.chosen, bs.complement);
            acc += ra * r_poly(bs.chosen) * (numer / denom);
        }
    }
    return acc;
}

/// Sres_d from the double sum: (-1)^{p(m-d)} / C(d, p) * Sylv^{p,q} with
/// d = p + q admissible.
inline Poly sres_sylvester(const RootList& a, const RootList& b, int p, int q) {
    if (p < 0 || q < 0) throw std::invalid_argument("sres_sylvester: negative p or q");
    const int m = a.size();
    const int d = p + q;
    require_admissible(m, b.size(), d);
    const Rational scale =
        Rational(static_cast<long>(p) * (m - d) % 2 == 0 ? 1 : -1) / Rational(binomial(d, p));
    return double_sum(a, b, p, q) * scale;
}

/// Res(f, g) = prod_{alpha in A} g(alpha) for the monic polynomials built
/// from the root lists; empty A gives 1.
inline Rational poisson_resultant(const RootList& a, const RootList& b) {
    const Poly g = poly_from_roots(b);
    Rational acc(1);
    for (const auto& alpha : a) acc *= g.eval(alpha);
    return acc;
}

}  // namespace subres
