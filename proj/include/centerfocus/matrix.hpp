#ifndef CENTERFOCUS_MATRIX_HPP
#define CENTERFOCUS_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include <centerfocus/budget.hpp>
#include <centerfocus/poly.hpp>

namespace cf {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<T> row(std::size_t r) const {
        return std::vector<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
    }
    std::vector<T> col(std::size_t c) const {
        std::vector<T> out;
        out.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
        return out;
    }

    void set_col(std::size_t c, const std::vector<T>& v) {
        if (v.size() != rows_) throw std::invalid_argument("column length mismatch");
        for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }

    // Keeps the listed columns, in the given order.
    Matrix select_cols(const std::vector<std::size_t>& which) const {
        Matrix out(rows_, which.size());
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t k = 0; k < which.size(); ++k) out(r, k) = (*this)(r, which[k]);
        }
        return out;
    }

    Matrix select_rows(const std::vector<std::size_t>& which) const {
        Matrix out(which.size(), cols_);
        for (std::size_t k = 0; k < which.size(); ++k) {
            for (std::size_t c = 0; c < cols_; ++c) out(k, c) = (*this)(which[k], c);
        }
        return out;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using PolyMatrix = Matrix<Poly>;

inline RationalMatrix evaluate(const PolyMatrix& m, std::span<const Rational> point) {
    RationalMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).evaluate(point);
    }
    return out;
}

inline Rational determinant(RationalMatrix a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    Rational det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a(piv, k) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            a.swap_rows(piv, k);
            det = -det;
        }
        det *= a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k) == 0) continue;
            Rational f = a(i, k) / a(k, k);
            for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return det;
}

// Fraction-free (Bareiss) determinant over the polynomial ring. Each step
// divides exactly by the previous pivot; pivots are chosen with the fewest
// terms to limit intermediate growth.
inline Poly determinant(PolyMatrix a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    bool negate = false;
    Poly prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        Budget::check();
        std::size_t piv = n;
        for (std::size_t i = k; i < n; ++i) {
            if (a(i, k).is_zero()) continue;
            if (piv == n || a(i, k).size() < a(piv, k).size()) piv = i;
        }
        if (piv == n) return 0;
        if (piv != k) {
            a.swap_rows(piv, k);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Poly v = a(k, k) * a(i, j) - a(i, k) * a(k, j);
                auto q = divide_exact(v, prev);
                if (!q) throw std::logic_error("Bareiss step is not exact");
                a(i, j) = std::move(*q);
            }
            a(i, k) = Poly{};
        }
        prev = a(k, k);
    }
    return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

inline std::size_t rank(RationalMatrix a) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t piv = r;
        while (piv < a.rows() && a(piv, c) == 0) ++piv;
        if (piv == a.rows()) continue;
        a.swap_rows(piv, r);
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            if (a(i, c) == 0) continue;
            Rational f = a(i, c) / a(r, c);
            for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        ++r;
    }
    return r;
}

// Reduced row echelon form of a rational matrix; returns the pivot columns.
inline std::vector<std::size_t> row_reduce(RationalMatrix& a) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t piv = r;
        while (piv < a.rows() && a(piv, c) == 0) ++piv;
        if (piv == a.rows()) continue;
        a.swap_rows(piv, r);
        Rational inv = 1 / a(r, c);
        for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c) == 0) continue;
            Rational f = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// Inverse of a square rational matrix, or nullopt when singular.
inline std::optional<RationalMatrix> inverse(const RationalMatrix& a) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw std::invalid_argument("inverse of a non-square matrix");
    RationalMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = 1;
    }
    auto piv = row_reduce(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
    RationalMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    }
    return inv;
}

}  // namespace cf

#endif  // CENTERFOCUS_MATRIX_HPP
