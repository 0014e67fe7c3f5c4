#pragma once

#include <concepts>
#include <stdexcept>
#include <utility>
#include <vector>

#include "subres/poly.hpp"

namespace subres {

/// Scalar domains the exact engines accept: a commutative ring with
/// equality, a unit constructible as T(1), and an exact_div that throws
/// NonExactDivision when the quotient does not exist.
template <class T>
concept RingScalar = std::regular<T> && requires(const T a, const T b) {
    { a + b } -> std::convertible_to<T>;
    { a - b } -> std::convertible_to<T>;
    { a * b } -> std::convertible_to<T>;
    { -a } -> std::convertible_to<T>;
    { exact_div(a, b) } -> std::convertible_to<T>;
    { is_zero(a) } -> std::same_as<bool>;
    T(1l);
};

/// Dense row-major matrix over one scalar domain. Zero rows or columns are
/// allowed (empty blocks occur when d = 0); an immutable value once built.
template <RingScalar T>
class DMatrix {
public:
    DMatrix() : rows_(0), cols_(0) {}
    DMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("matrix with negative dimension");
        e_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), T{});
    }

    static DMatrix from_rows(std::vector<std::vector<T>> rows) {
        const int r = static_cast<int>(rows.size());
        const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
        DMatrix m(r, c);
        for (int i = 0; i < r; ++i) {
            if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != c)
                throw std::invalid_argument("ragged rows");
            for (int j = 0; j < c; ++j)
                m.at(i, j) = std::move(rows[static_cast<size_t>(i)][static_cast<size_t>(j)]);
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& at(int i, int j) { return e_[index(i, j)]; }
    const T& at(int i, int j) const { return e_[index(i, j)]; }

    void swap_rows(int i, int j) {
        for (int k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
    }

    friend bool operator==(const DMatrix& a, const DMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const DMatrix& a, const DMatrix& b) { return !(a == b); }

private:
    size_t index(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw std::out_of_range("matrix index");
        return static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j);
    }

    int rows_, cols_;
    std::vector<T> e_;
};

template <RingScalar T>
DMatrix<T> matmul(const DMatrix<T>& a, const DMatrix<T>& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul: inner dimensions differ");
    DMatrix<T> c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (is_zero(a.at(i, k))) continue;
            for (int j = 0; j < b.cols(); ++j)
                c.at(i, j) = c.at(i, j) + a.at(i, k) * b.at(k, j);
        }
    return c;
}

template <RingScalar T>
DMatrix<T> vstack(const DMatrix<T>& top, const DMatrix<T>& bottom) {
    if (top.cols() != bottom.cols()) throw std::invalid_argument("vstack: column counts differ");
    DMatrix<T> m(top.rows() + bottom.rows(), top.cols());
    for (int i = 0; i < top.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = top.at(i, j);
    for (int i = 0; i < bottom.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.at(top.rows() + i, j) = bottom.at(i, j);
    return m;
}

template <RingScalar T>
DMatrix<T> hstack(const DMatrix<T>& left, const DMatrix<T>& right) {
    if (left.rows() != right.rows()) throw std::invalid_argument("hstack: row counts differ");
    DMatrix<T> m(left.rows(), left.cols() + right.cols());
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < left.cols(); ++j) m.at(i, j) = left.at(i, j);
        for (int j = 0; j < right.cols(); ++j) m.at(i, left.cols() + j) = right.at(i, j);
    }
    return m;
}

/// Lift a rational matrix into the polynomial domain (degree-0 entries).
inline DMatrix<Poly> to_poly(const DMatrix<Rational>& m) {
    DMatrix<Poly> r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.at(i, j) = Poly(m.at(i, j));
    return r;
}

/// Exact determinant by fraction-free (Bareiss) elimination. Valid over any
/// integral domain: every division is exact. Zero pivots are resolved by
/// searching down the column and swapping with sign tracking; if the whole
/// column is zero the determinant is zero. A 0x0 matrix has determinant 1.
template <RingScalar T>
T det_bareiss(DMatrix<T> m) {
    if (!m.square()) throw std::invalid_argument("det_bareiss: matrix not square");
    const int n = m.rows();
    if (n == 0) return T(1l);
    int sign = 1;
    T prev(1l);
    for (int k = 0; k + 1 < n; ++k) {
        if (is_zero(m.at(k, k))) {
            int r = k + 1;
            while (r < n && is_zero(m.at(r, k))) ++r;
            if (r == n) return T{};
            m.swap_rows(k, r);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = exact_div(m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j), prev);
            m.at(i, k) = T{};
        }
        prev = m.at(k, k);
    }
    T d = m.at(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

namespace detail {

template <RingScalar T>
T det_laplace_rec(const DMatrix<T>& m, int row, std::vector<int>& cols) {
    if (cols.size() == 1) return m.at(row, cols.front());
    T acc{};
    for (size_t idx = 0; idx < cols.size(); ++idx) {
        const T& a = m.at(row, cols[idx]);
        if (is_zero(a)) continue;
        const int c = cols[idx];
        cols.erase(cols.begin() + static_cast<long>(idx));
        const T sub = det_laplace_rec(m, row + 1, cols);
        cols.insert(cols.begin() + static_cast<long>(idx), c);
        const T term = a * sub;
        acc = (idx % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace detail

/// Independent determinant oracle: recursive cofactor expansion along the
/// first row. Factorial cost, so dimension is capped at 8.
template <RingScalar T>
T det_laplace(const DMatrix<T>& m) {
    if (!m.square()) throw std::invalid_argument("det_laplace: matrix not square");
    if (m.rows() > 8) throw std::invalid_argument("det_laplace: dimension > 8");
    if (m.rows() == 0) return T(1l);
    std::vector<int> cols(static_cast<size_t>(m.cols()));
    for (int j = 0; j < m.cols(); ++j) cols[static_cast<size_t>(j)] = j;
    return detail::det_laplace_rec(m, 0, cols);
}

}  // namespace subres
