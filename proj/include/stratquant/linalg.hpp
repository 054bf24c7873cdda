#ifndef STRATQUANT_LINALG_HPP
#define STRATQUANT_LINALG_HPP

#include <optional>
#include <vector>

#include "stratquant/rational.hpp"

namespace stratquant {

/// Dense matrix of exact Gaussian rationals, row major.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Scalar& operator()(int r, int c) { return data_[size_t(r) * cols_ + c]; }
    const Scalar& operator()(int r, int c) const { return data_[size_t(r) * cols_ + c]; }

    static Matrix identity(int n);
    Matrix transpose() const;
    Matrix conj_transpose() const;
    bool is_zero() const;
    bool is_symmetric() const;

    Matrix operator-() const;
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& c, const Matrix& m);
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Scalar trace() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Scalar> data_;
};

/// Rank over the fraction field, by fraction-free (Bareiss) elimination on
/// the denominator-cleared matrix. Deterministic; empty matrix has rank 0.
int exact_rank(Matrix m);

/// Exact determinant of a square matrix (Bareiss with row pivoting).
Scalar determinant(Matrix m);

/// Leading principal minors det(M[0..k][0..k]) for k = 0..n-1, computed by
/// swap-free fraction-free elimination. A zero pivot makes that minor and
/// all later ones zero, which is exactly what a positive-definiteness check
/// needs.
std::vector<Scalar> leading_principal_minors(Matrix m);

/// One exact solution of A x = b, or nullopt when inconsistent. Free
/// variables are set to zero; deterministic.
std::optional<std::vector<Scalar>> solve(Matrix a, std::vector<Scalar> b);

}  // namespace stratquant

#endif
