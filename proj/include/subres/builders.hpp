#pragma once

#include <span>

#include "subres/admissible.hpp"
#include "subres/matrix.hpp"
#include "subres/root_list.hpp"

namespace subres {

/// Tags selecting the two degree-one bracket templates: entry
/// gamma^e * (x - gamma), respectively its entrywise negation
/// gamma^e * (gamma - x).
struct XMinusT {};
struct TMinusX {};
inline constexpr XMinusT x_minus_t{};
inline constexpr TMinusX t_minus_x{};

namespace detail {

inline void check_exponents(const IndexList& exps) {
    for (int e : exps)
        if (e < 0) throw std::invalid_argument("bracket: negative exponent");
}

}  // namespace detail

/// Bracket matrix of a polynomial evaluated on a list: entry (i, j) is
/// gamma_j^{exps_i} * p(gamma_j). Shape |exps| x |gamma|.
inline DMatrix<Rational> bracket(const Poly& p, const RootList& gamma, const IndexList& exps) {
    detail::check_exponents(exps);
    DMatrix<Rational> m(static_cast<int>(exps.size()), gamma.size());
    for (int j = 0; j < gamma.size(); ++j) {
        const Rational value = p.eval(gamma[j]);
        for (int i = 0; i < m.rows(); ++i)
            m.at(i, j) = pow(gamma[j], exps[static_cast<size_t>(i)]) * value;
    }
    return m;
}

/// Bracket of x - t: entry (i, j) is gamma_j^{exps_i} * (x - gamma_j),
/// a degree-one polynomial in x.
inline DMatrix<Poly> bracket(XMinusT, const RootList& gamma, const IndexList& exps) {
    detail::check_exponents(exps);
    DMatrix<Poly> m(static_cast<int>(exps.size()), gamma.size());
    for (int j = 0; j < gamma.size(); ++j)
        for (int i = 0; i < m.rows(); ++i) {
            const Rational ge = pow(gamma[j], exps[static_cast<size_t>(i)]);
            m.at(i, j) = Poly::from_coeffs({-(ge * gamma[j]), ge});
        }
    return m;
}

/// Bracket of t - x: the entrywise negation of the x - t bracket.
inline DMatrix<Poly> bracket(TMinusX, const RootList& gamma, const IndexList& exps) {
    DMatrix<Poly> m = bracket(x_minus_t, gamma, exps);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = -m.at(i, j);
    return m;
}

/// prod_{i<j} (gamma_j - gamma_i); empty and singleton lists give 1.
/// Defined for arbitrary sequences (duplicates make it vanish).
inline Rational vandermonde_det(std::span<const Rational> gamma) {
    Rational acc(1);
    for (size_t i = 0; i < gamma.size(); ++i)
        for (size_t j = i + 1; j < gamma.size(); ++j) acc *= gamma[j] - gamma[i];
    return acc;
}

inline Rational vandermonde_det(const RootList& gamma) {
    return vandermonde_det(std::span<const Rational>(gamma.elems()));
}

/// Coefficient band of f in increasing order: (n - d) rows of width
/// m + n - d, row i holding a_0 ... a_m shifted i to the right.
inline DMatrix<Rational> build_mf(const Poly& f, int n, int d) {
    const int m = f.degree();
    require_admissible(m, n, d);
    DMatrix<Rational> mat(n - d, m + n - d);
    for (int i = 0; i < mat.rows(); ++i)
        for (int k = 0; k <= m; ++k) mat.at(i, i + k) = f.coeff(k);
    return mat;
}

/// Same band for g: (m - d) rows of b_0 ... b_n.
inline DMatrix<Rational> build_mg(const Poly& g, int m, int d) {
    const int n = g.degree();
    require_admissible(m, n, d);
    DMatrix<Rational> mat(m - d, m + n - d);
    for (int i = 0; i < mat.rows(); ++i)
        for (int k = 0; k <= n; ++k) mat.at(i, i + k) = g.coeff(k);
    return mat;
}

/// d rows of width m + n - d with -x on the diagonal and 1 just right of it
/// (dropped when it falls outside the matrix). d = 0 yields an empty block.
inline DMatrix<Poly> build_mtx(int m, int n, int d) {
    if (m < 0 || n < 0 || d < 0 || m + n - d < 0)
        throw std::invalid_argument("build_mtx: negative shape");
    DMatrix<Poly> mat(d, m + n - d);
    for (int i = 0; i < d; ++i) {
        if (i < mat.cols()) mat.at(i, i) = Poly::monomial(1, Rational(-1));
        if (i + 1 < mat.cols()) mat.at(i, i + 1) = Poly(1l);
    }
    return mat;
}

/// The square block stack [M_{t-x}; M_f; M_g] of size m + n - d.
inline DMatrix<Poly> build_sd(const Poly& f, const Poly& g, int d) {
    const int m = f.degree(), n = g.degree();
    require_admissible(m, n, d);
    return vstack(build_mtx(m, n, d),
                  vstack(to_poly(build_mf(f, n, d)), to_poly(build_mg(g, m, d))));
}

}  // namespace subres
