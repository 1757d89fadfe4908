#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "rbsym/rational.hpp"

namespace rbsym {

// Dense matrix over exact rationals; just enough for transition-matrix
// inversion and rank checks.
class RationalMatrix {
public:
    RationalMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(rows, std::vector<Rational>(cols, Rational(0))) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int i, int j) { return a_[i][j]; }
    const Rational& at(int i, int j) const { return a_[i][j]; }

    static RationalMatrix identity(int n) {
        RationalMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    RationalMatrix operator*(const RationalMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix dimension mismatch");
        RationalMatrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                if (a_[i][k] == 0) continue;
                for (int j = 0; j < o.cols_; ++j) r.a_[i][j] += a_[i][k] * o.a_[k][j];
            }
        return r;
    }

    bool operator==(const RationalMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    std::optional<RationalMatrix> inverse() const {
        if (rows_ != cols_) return std::nullopt;
        int n = rows_;
        auto work = a_;
        RationalMatrix inv = identity(n);
        for (int col = 0; col < n; ++col) {
            int pivot = -1;
            for (int r = col; r < n; ++r)
                if (work[r][col] != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) return std::nullopt;
            std::swap(work[col], work[pivot]);
            std::swap(inv.a_[col], inv.a_[pivot]);
            Rational d = work[col][col];
            for (int j = 0; j < n; ++j) {
                work[col][j] /= d;
                inv.a_[col][j] /= d;
            }
            for (int r = 0; r < n; ++r) {
                if (r == col || work[r][col] == 0) continue;
                Rational f = work[r][col];
                for (int j = 0; j < n; ++j) {
                    work[r][j] -= f * work[col][j];
                    inv.a_[r][j] -= f * inv.a_[col][j];
                }
            }
        }
        return inv;
    }

    int rank() const {
        auto work = a_;
        int r = 0;
        for (int col = 0; col < cols_ && r < rows_; ++col) {
            int pivot = -1;
            for (int i = r; i < rows_; ++i)
                if (work[i][col] != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) continue;
            std::swap(work[r], work[pivot]);
            for (int i = r + 1; i < rows_; ++i) {
                if (work[i][col] == 0) continue;
                Rational f = work[i][col] / work[r][col];
                for (int j = col; j < cols_; ++j) work[i][j] -= f * work[r][j];
            }
            ++r;
        }
        return r;
    }

private:
    int rows_, cols_;
    std::vector<std::vector<Rational>> a_;
};

}  // namespace rbsym
