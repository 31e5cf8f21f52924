#pragma once

// Dense exact linear algebra over the rationals.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jumpcon/errors.hpp"
#include "jumpcon/rational.hpp"

namespace jumpcon {

class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    RatMatrix(std::initializer_list<std::initializer_list<Rational>> init) {
        rows_ = init.size();
        cols_ = rows_ == 0 ? 0 : init.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw DimensionError("RatMatrix: ragged initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static RatMatrix identity(std::size_t n) {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    /// Matrix whose rows are the given vectors (all of equal length).
    static RatMatrix from_rows(const std::vector<RatVector>& rows) {
        if (rows.empty()) return {};
        RatMatrix m(rows.size(), rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw DimensionError("from_rows: ragged rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static RatMatrix from_columns(const std::vector<RatVector>& cols) { return from_rows(cols).transpose(); }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RatVector row(std::size_t i) const { return RatVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }
    RatVector col(std::size_t j) const {
        RatVector v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    RatMatrix transpose() const {
        RatMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_symmetric() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (x != 0) return false;
        return true;
    }

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sum: shape mismatch");
        RatMatrix c = a;
        for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
        return c;
    }

    friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix difference: shape mismatch");
        RatMatrix c = a;
        for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
        return c;
    }

    friend RatMatrix operator*(const Rational& s, const RatMatrix& a) {
        RatMatrix c = a;
        for (auto& x : c.data_) x *= s;
        return c;
    }

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
        if (a.cols_ != b.rows_) throw DimensionError("matrix product: inner dimensions differ");
        RatMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }

    friend RatVector operator*(const RatMatrix& a, const RatVector& v) {
        if (a.cols_ != v.size()) throw DimensionError("matrix-vector product: length mismatch");
        RatVector out(a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
        return out;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// vᵀ·m·w
inline Rational bilinear(const RatVector& v, const RatMatrix& m, const RatVector& w) { return dot(v, m * w); }

/// Exact determinant by fraction-free (Bareiss) elimination. Each row is first
/// scaled to integers, so the elimination itself runs over ℤ.
namespace detail {

/// Each row multiplied by the lcm of its denominators; `scale` collects the product of those multipliers.
inline std::vector<std::vector<Integer>> integer_rows(const RatMatrix& m, Integer& scale) {
    std::vector<std::vector<Integer>> a(m.rows(), std::vector<Integer>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        scale *= l;
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    }
    return a;
}

}  // namespace detail

inline Rational det_exact(const RatMatrix& m) {
    if (!m.is_square()) throw DimensionError("det_exact: matrix is not square");
    const std::size_t n = m.rows();
    if (n > 64) throw DimensionError("det_exact: size exceeds 64");
    if (n == 0) return 1;

    Integer scale = 1;
    auto a = detail::integer_rows(m, scale);

    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Rational d(a[n - 1][n - 1] * sign, scale);
    d.canonicalize();
    return d;
}

/// Reduced row echelon form together with its pivot columns.
struct RowEchelon {
    RatMatrix reduced;
    std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination; the pivot in each column is the first nonzero
/// entry at or below the current row.
inline RowEchelon row_reduce(RatMatrix m) {
    RowEchelon out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        const Rational inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            const Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.reduced = std::move(m);
    return out;
}

/// Forward elimination only; no back substitution is needed to count pivots.
inline std::size_t rank(const RatMatrix& m) {
    RatMatrix a = m;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t r = 0;
    Rational factor;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a(p, c) == 0) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(a(p, j), a(r, j));
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a(i, c) == 0) continue;
            factor = a(i, c) / a(r, c);
            for (std::size_t j = c + 1; j < cols; ++j)
                if (a(r, j) != 0) a(i, j) -= factor * a(r, j);
        }
        ++r;
    }
    return r;
}

/// Basis of the right kernel, one vector per free column in ascending order,
/// with a 1 in its free column.
inline std::vector<RatVector> nullspace(const RatMatrix& m) {
    const RowEchelon e = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<RatVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        RatVector v(m.cols());
        v[f] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Unique solution of m·x = b for invertible square m; nullopt if m is singular.
inline std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b) {
    if (!m.is_square()) throw DimensionError("solve: matrix is not square");
    if (b.size() != m.rows()) throw DimensionError("solve: right-hand side length mismatch");
    const std::size_t n = m.rows();
    RatMatrix aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n) = b[i];
    }
    const RowEchelon e = row_reduce(aug);
    if (e.pivots.size() != n || e.pivots.back() != n - 1) return std::nullopt;
    RatVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = e.reduced(i, n);
    return x;
}

inline std::optional<RatMatrix> inverse(const RatMatrix& m) {
    if (!m.is_square()) throw DimensionError("inverse: matrix is not square");
    const std::size_t n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    const RowEchelon e = row_reduce(aug);
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

/// Classical adjugate (transpose of the cofactor matrix); defined for singular input too.
inline RatMatrix adjugate(const RatMatrix& m) {
    if (!m.is_square()) throw DimensionError("adjugate: matrix is not square");
    const std::size_t n = m.rows();
    RatMatrix adj(n, n);
    if (n == 1) {
        adj(0, 0) = 1;
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            RatMatrix minor(n - 1, n - 1);
            for (std::size_t r = 0, mr = 0; r < n; ++r) {
                if (r == i) continue;
                for (std::size_t c = 0, mc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor(mr, mc++) = m(r, c);
                }
                ++mr;
            }
            const Rational cof = det_exact(minor);
            adj(j, i) = (i + j) % 2 == 0 ? cof : Rational(-cof);
        }
    return adj;
}

/// Coefficients of det(m − t·I) in descending powers of t, leading (−1)ⁿ.
/// Faddeev–LeVerrier recurrence; its only divisions are by small integers.
inline RatVector char_poly(const RatMatrix& m) {
    if (!m.is_square()) throw DimensionError("char_poly: matrix is not square");
    const std::size_t n = m.rows();
    // c[i] is the coefficient of tⁱ in det(t·I − m)
    RatVector c(n + 1);
    c[n] = 1;
    RatMatrix acc(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        acc = m * acc;
        for (std::size_t i = 0; i < n; ++i) acc(i, i) += c[n - k + 1];
        const RatMatrix prod = m * acc;
        Rational trace = 0;
        for (std::size_t i = 0; i < n; ++i) trace += prod(i, i);
        c[n - k] = -trace / static_cast<long>(k);
    }
    RatVector out(n + 1);
    const int sign = n % 2 == 0 ? 1 : -1;
    for (std::size_t i = 0; i <= n; ++i) out[i] = sign * c[n - i];
    return out;
}

/// Horner evaluation of descending-power coefficients.
inline Rational eval_poly(const RatVector& descending, const Rational& t) {
    Rational acc = 0;
    for (const auto& a : descending) acc = acc * t + a;
    return acc;
}

}  // namespace jumpcon
