#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "opcalc/scalar.hpp"

namespace opcalc {

// Dense matrix over an exact field. Columns usually hold an operator applied
// to source basis vectors, so composition is matrix product and rank/kernel
// questions are Gaussian elimination. Pivots prefer entries with small
// numerators to limit fraction growth.
class Matrix {
  public:
    Matrix(const FieldSpec& f, int rows, int cols)
        : f_(f), rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, Scalar::zero(f)) {}

    static Matrix from_columns(const FieldSpec& f, int rows,
                               const std::vector<std::vector<Scalar>>& cols) {
        Matrix m(f, rows, static_cast<int>(cols.size()));
        for (int c = 0; c < m.cols_; ++c) {
            if (static_cast<int>(cols[c].size()) != rows)
                throw UsageError("column length mismatch");
            for (int r = 0; r < rows; ++r) m.at(r, c) = cols[c][r];
        }
        return m;
    }

    static Matrix identity(const FieldSpec& f, int n) {
        Matrix m(f, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldSpec& field() const { return f_; }

    Scalar& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Scalar& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

    std::vector<Scalar> column(int c) const {
        std::vector<Scalar> v;
        v.reserve(rows_);
        for (int r = 0; r < rows_; ++r) v.push_back(at(r, c));
        return v;
    }

    bool is_zero() const {
        for (const auto& s : a_)
            if (!s.is_zero()) return false;
        return true;
    }

    Matrix times(const Matrix& o) const {
        if (cols_ != o.rows_) throw UsageError("matrix shape mismatch in product");
        Matrix r(f_, rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Scalar& s = at(i, k);
                if (s.is_zero()) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    const Scalar& t = o.at(k, j);
                    if (!t.is_zero()) r.at(i, j) += s * t;
                }
            }
        return r;
    }

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const {
        if (static_cast<int>(v.size()) != cols_) throw UsageError("vector length mismatch");
        std::vector<Scalar> r(rows_, Scalar::zero(f_));
        for (int c = 0; c < cols_; ++c) {
            if (v[c].is_zero()) continue;
            for (int row = 0; row < rows_; ++row) {
                const Scalar& s = at(row, c);
                if (!s.is_zero()) r[row] += s * v[c];
            }
        }
        return r;
    }

    // In-place reduced row echelon form; returns the pivot columns in order.
    std::vector<int> row_reduce() {
        std::vector<int> pivots;
        int row = 0;
        for (int col = 0; col < cols_ && row < rows_; ++col) {
            int best = -1;
            std::size_t best_w = 0;
            for (int r = row; r < rows_; ++r) {
                if (at(r, col).is_zero()) continue;
                std::size_t w = at(r, col).complexity();
                if (best < 0 || w < best_w) {
                    best = r;
                    best_w = w;
                }
            }
            if (best < 0) continue;
            swap_rows(row, best);
            Scalar inv = at(row, col).inverse();
            for (int c = col; c < cols_; ++c) at(row, c) *= inv;
            for (int r = 0; r < rows_; ++r) {
                if (r == row || at(r, col).is_zero()) continue;
                Scalar factor = at(r, col);
                for (int c = col; c < cols_; ++c) at(r, c) -= factor * at(row, c);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    int rank() const {
        Matrix m = *this;
        return static_cast<int>(m.row_reduce().size());
    }

    // Basis of {x : Ax = 0}.
    std::vector<std::vector<Scalar>> kernel_basis() const {
        Matrix m = *this;
        std::vector<int> pivots = m.row_reduce();
        std::vector<bool> is_pivot(cols_, false);
        for (int c : pivots) is_pivot[c] = true;
        std::vector<std::vector<Scalar>> basis;
        for (int free = 0; free < cols_; ++free) {
            if (is_pivot[free]) continue;
            std::vector<Scalar> v(cols_, Scalar::zero(f_));
            v[free] = Scalar::one(f_);
            for (std::size_t pr = 0; pr < pivots.size(); ++pr)
                v[pivots[pr]] = -m.at(static_cast<int>(pr), free);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    // A particular solution of Ax = b, if consistent.
    std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& b) const {
        if (static_cast<int>(b.size()) != rows_) throw UsageError("rhs length mismatch");
        Matrix aug(f_, rows_, cols_ + 1);
        for (int r = 0; r < rows_; ++r) {
            for (int c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
            aug.at(r, cols_) = b[r];
        }
        std::vector<int> pivots = aug.row_reduce();
        for (int c : pivots)
            if (c == cols_) return std::nullopt;  // 0 = 1 row
        std::vector<Scalar> x(cols_, Scalar::zero(f_));
        for (std::size_t pr = 0; pr < pivots.size(); ++pr)
            x[pivots[pr]] = aug.at(static_cast<int>(pr), cols_);
        return x;
    }

  private:
    void swap_rows(int a, int b) {
        if (a == b) return;
        for (int c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
    }

    FieldSpec f_;
    int rows_, cols_;
    std::vector<Scalar> a_;
};

// Given spanning sets B ⊆ Z of a common ambient space (as column vectors),
// returns indices into Z of columns forming a basis of span(Z)/span(B).
// Greedy left-to-right pivoting on [B | Z] makes each selected Z column
// independent of span(B) and of the previously selected ones.
inline std::vector<int> quotient_representatives(const FieldSpec& f, int ambient_dim,
                                                 const std::vector<std::vector<Scalar>>& b_cols,
                                                 const std::vector<std::vector<Scalar>>& z_cols) {
    const int nb = static_cast<int>(b_cols.size()), nz = static_cast<int>(z_cols.size());
    Matrix m(f, ambient_dim, nb + nz);
    for (int c = 0; c < nb; ++c)
        for (int r = 0; r < ambient_dim; ++r) m.at(r, c) = b_cols[c][r];
    for (int c = 0; c < nz; ++c)
        for (int r = 0; r < ambient_dim; ++r) m.at(r, nb + c) = z_cols[c][r];
    std::vector<int> reps;
    for (int c : m.row_reduce())
        if (c >= nb) reps.push_back(c - nb);
    return reps;
}

}  // namespace opcalc
