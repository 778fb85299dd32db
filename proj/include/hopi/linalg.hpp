#pragma once

// Dense matrices over GF(q^2). Row-major value type; elimination always
// pivots on the lowest-index row with a nonzero entry in the current column.

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hopi/error.hpp"
#include "hopi/gf.hpp"

namespace hopi {

class Matrix {
public:
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols) {}

    Matrix(FieldPtr field, std::size_t rows, std::size_t cols, Vector entries)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != rows_ * cols_) {
            throw Error(Errc::ShapeMismatch, "entry count does not match rows*cols");
        }
        for (auto e : data_) {
            if (!field_->contains(e)) throw Error(Errc::ParamOutOfRange, "entry outside the field");
        }
    }

    static Matrix identity(FieldPtr field, std::size_t n) {
        Matrix out(field, n, n);
        for (std::size_t i = 0; i < n; ++i) out(i, i) = field->one();
        return out;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const Field& field() const noexcept { return *field_; }
    const FieldPtr& field_ptr() const noexcept { return field_; }

    Element& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    Element operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

    std::span<const Element> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
    std::span<Element> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
    const Vector& entries() const noexcept { return data_; }

    friend bool operator==(const Matrix& a, const Matrix& b) noexcept {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    FieldPtr field_;
    std::size_t rows_;
    std::size_t cols_;
    Vector data_;
};

inline Matrix transpose(const Matrix& a) {
    Matrix out(a.field_ptr(), a.cols(), a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) out(c, r) = a(r, c);
    }
    return out;
}

inline Matrix mul_matrix(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw Error(Errc::ShapeMismatch, "inner dimensions differ");
    const Field& f = a.field();
    Matrix out(a.field_ptr(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const Element s = a(i, l);
            if (s.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = f.add(out(i, j), f.mul(s, b(l, j)));
        }
    }
    return out;
}

inline Vector mul_vec(const Matrix& a, std::span<const Element> x) {
    if (a.cols() != x.size()) throw Error(Errc::ShapeMismatch, "vector length differs from column count");
    Vector out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) out[i] = a.field().dot(a.row(i), x);
    return out;
}

inline Matrix submatrix_rows(const Matrix& a, std::span<const std::size_t> rows) {
    Matrix out(a.field_ptr(), rows.size(), a.cols());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] >= a.rows()) throw Error(Errc::ShapeMismatch, "row index out of range");
        const auto src = a.row(rows[i]);
        std::copy(src.begin(), src.end(), out.row(i).begin());
    }
    return out;
}

/// In-place reduced row echelon form. Returns the pivot column of each
/// pivot row, in order.
inline std::vector<std::size_t> row_reduce(Matrix& a) {
    const Field& f = a.field();
    std::vector<std::size_t> pivots;
    std::size_t prow = 0;
    for (std::size_t c = 0; c < a.cols() && prow < a.rows(); ++c) {
        std::size_t sel = prow;
        while (sel < a.rows() && a(sel, c).is_zero()) ++sel;
        if (sel == a.rows()) continue;
        if (sel != prow) {
            auto x = a.row(sel);
            auto y = a.row(prow);
            std::swap_ranges(x.begin(), x.end(), y.begin());
        }
        const Element scale = f.inv(a(prow, c));
        for (auto& e : a.row(prow)) e = f.mul(e, scale);
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == prow || a(r, c).is_zero()) continue;
            const Element factor = f.neg(a(r, c));
            for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = f.add(a(r, j), f.mul(factor, a(prow, j)));
        }
        pivots.push_back(c);
        ++prow;
    }
    return pivots;
}

inline std::size_t rank(Matrix a) { return row_reduce(a).size(); }

/// Basis of {x : A x = 0}, one vector per free column.
inline std::vector<Vector> nullspace(Matrix a) {
    const Field& f = a.field();
    const auto pivots = row_reduce(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v(a.cols());
        v[free] = f.one();
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(a(i, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

/// x with A x = b for square nonsingular A.
inline Vector solve(const Matrix& a, std::span<const Element> b) {
    if (a.rows() != a.cols()) throw Error(Errc::ShapeMismatch, "solve needs a square matrix");
    if (b.size() != a.rows()) throw Error(Errc::ShapeMismatch, "right-hand side length differs");
    const std::size_t n = a.rows();
    Matrix aug(a.field_ptr(), n, n + 1);
    for (std::size_t r = 0; r < n; ++r) {
        const auto src = a.row(r);
        std::copy(src.begin(), src.end(), aug.row(r).begin());
        aug(r, n) = b[r];
    }
    const auto pivots = row_reduce(aug);
    if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) {
        throw Error(Errc::SingularMatrix, "matrix of size " + std::to_string(n) + " is singular");
    }
    Vector x(n);
    for (std::size_t r = 0; r < n; ++r) x[r] = aug(r, n);
    return x;
}

inline Matrix inverse(const Matrix& a) {
    if (a.rows() != a.cols()) throw Error(Errc::ShapeMismatch, "inverse needs a square matrix");
    const std::size_t n = a.rows();
    Matrix aug(a.field_ptr(), n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        const auto src = a.row(r);
        std::copy(src.begin(), src.end(), aug.row(r).begin());
        aug(r, n + r) = a.field().one();
    }
    const auto pivots = row_reduce(aug);
    if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) {
        throw Error(Errc::SingularMatrix, "matrix is singular");
    }
    Matrix out(a.field_ptr(), n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) out(r, c) = aug(r, n + c);
    }
    return out;
}

}  // namespace hopi
