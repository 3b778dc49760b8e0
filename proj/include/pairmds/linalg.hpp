#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pairmds/gf.hpp"

namespace pairmds {

/// Dense matrix over a Field, entries stored as canonical element indices.
/// All operations are exact and allocate fresh results.
class Matrix {
   public:
    Matrix(FieldPtr field, int rows, int cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {
        require(rows >= 0 && cols >= 0, Errc::DimensionMismatch, "negative dimension");
    }

    static Matrix from_rows(FieldPtr field, const std::vector<std::vector<int>>& rows) {
        int r = static_cast<int>(rows.size());
        int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
        Matrix m(std::move(field), r, c);
        for (int i = 0; i < r; ++i) {
            require(static_cast<int>(rows[i].size()) == c, Errc::DimensionMismatch, "ragged rows");
            for (int j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
        }
        return m;
    }

    static Matrix identity(FieldPtr field, int n) {
        Matrix m(std::move(field), n, n);
        for (int i = 0; i < n; ++i) m.set(i, i, 1);
        return m;
    }

    const FieldPtr& field() const noexcept { return field_; }
    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    int get(int r, int c) const { return a_[index(r, c)]; }
    void set(int r, int c, int v) {
        require(0 <= v && v < field_->q(), Errc::IndexOutOfRange, "entry out of [0,q)");
        a_[index(r, c)] = v;
    }
    FieldElement at(int r, int c) const { return {field_, get(r, c)}; }

    std::span<const int> row(int r) const { return {a_.data() + index(r, 0), static_cast<size_t>(cols_)}; }
    const int* data() const noexcept { return a_.data(); }

    Matrix transpose() const {
        Matrix t(field_, cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.a_[static_cast<size_t>(j) * rows_ + i] = get(i, j);
        return t;
    }

    Matrix scaled(int s) const {
        Matrix m = *this;
        for (auto& x : m.a_) x = field_->mul(x, s);
        return m;
    }

    bool is_zero() const noexcept {
        for (int x : a_)
            if (x != 0) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.field_->same(*b.field_) && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    std::string to_text() const {
        std::string s;
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) {
                if (j) s += ' ';
                s += std::to_string(get(i, j));
            }
            s += '\n';
        }
        return s;
    }

   private:
    size_t index(int r, int c) const {
        require(0 <= r && r < rows_ && 0 <= c && c < cols_, Errc::IndexOutOfRange,
                "matrix index out of range");
        return static_cast<size_t>(r) * cols_ + c;
    }

    FieldPtr field_;
    int rows_, cols_;
    std::vector<int> a_;
};

/// Reduced row echelon form with first-nonzero pivot selection; the pivot
/// column list is strictly increasing.
inline std::pair<Matrix, std::vector<int>> rref(const Matrix& M) {
    Matrix R = M;
    const Field& f = *R.field();
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < R.cols() && r < R.rows(); ++c) {
        int pr = -1;
        for (int i = r; i < R.rows(); ++i)
            if (R.get(i, c) != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < R.cols(); ++j) {
                int t = R.get(r, j);
                R.set(r, j, R.get(pr, j));
                R.set(pr, j, t);
            }
        int iv = f.inv(R.get(r, c));
        for (int j = 0; j < R.cols(); ++j) R.set(r, j, f.mul(R.get(r, j), iv));
        for (int i = 0; i < R.rows(); ++i) {
            if (i == r) continue;
            int s = R.get(i, c);
            if (s == 0) continue;
            for (int j = 0; j < R.cols(); ++j)
                R.set(i, j, f.sub(R.get(i, j), f.mul(s, R.get(r, j))));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(R), std::move(pivots)};
}

inline int rank(const Matrix& M) { return static_cast<int>(rref(M).second.size()); }

/// Basis of {x : M x^T = 0} as rows, normalized to the unique RREF basis of
/// the kernel so witnesses are reproducible.
inline Matrix kernel(const Matrix& M) {
    auto [R, piv] = rref(M);
    const Field& f = *M.field();
    std::vector<bool> is_piv(M.cols(), false);
    for (int c : piv) is_piv[c] = true;
    Matrix K(M.field(), M.cols() - static_cast<int>(piv.size()), M.cols());
    int kr = 0;
    for (int c = 0; c < M.cols(); ++c) {
        if (is_piv[c]) continue;
        K.set(kr, c, 1);
        for (size_t i = 0; i < piv.size(); ++i) K.set(kr, piv[i], f.neg(R.get(static_cast<int>(i), c)));
        ++kr;
    }
    return rref(K).first;
}

inline Matrix mat_mul(const Matrix& A, const Matrix& B) {
    require_same_field(A.field(), B.field());
    require(A.cols() == B.rows(), Errc::DimensionMismatch, "inner dimensions differ");
    const Field& f = *A.field();
    Matrix C(A.field(), A.rows(), B.cols());
    for (int i = 0; i < A.rows(); ++i)
        for (int t = 0; t < A.cols(); ++t) {
            int a = A.get(i, t);
            if (a == 0) continue;
            for (int j = 0; j < B.cols(); ++j)
                C.set(i, j, f.add(C.get(i, j), f.mul(a, B.get(t, j))));
        }
    return C;
}

inline Matrix inverse(const Matrix& A) {
    require(A.rows() == A.cols(), Errc::DimensionMismatch, "inverse of a non-square matrix");
    int n = A.rows();
    Matrix aug(A.field(), n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.set(i, j, A.get(i, j));
        aug.set(i, n + i, 1);
    }
    auto [R, piv] = rref(aug);
    require(static_cast<int>(piv.size()) == n && (n == 0 || piv[n - 1] == n - 1),
            Errc::SingularMatrix, "matrix is singular");
    Matrix inv(A.field(), n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.set(i, j, R.get(i, n + j));
    return inv;
}

inline Matrix submatrix(const Matrix& M, std::span<const int> row_sel, std::span<const int> col_sel) {
    Matrix S(M.field(), static_cast<int>(row_sel.size()), static_cast<int>(col_sel.size()));
    for (size_t i = 0; i < row_sel.size(); ++i)
        for (size_t j = 0; j < col_sel.size(); ++j)
            S.set(static_cast<int>(i), static_cast<int>(j), M.get(row_sel[i], col_sel[j]));
    return S;
}

/// rows 0..nrows-1 are the 0th..(nrows-1)th powers of the points
inline Matrix vandermonde(const FieldPtr& f, std::span<const int> points, int nrows) {
    Matrix V(f, nrows, static_cast<int>(points.size()));
    for (int c = 0; c < V.cols(); ++c) {
        int v = 1;
        for (int r = 0; r < nrows; ++r) {
            V.set(r, c, v);
            v = f->mul(v, points[c]);
        }
    }
    return V;
}

}  // namespace pairmds
