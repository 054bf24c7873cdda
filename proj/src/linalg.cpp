#include "stratquant/linalg.hpp"

#include <stdexcept>

namespace stratquant {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::conj_transpose() const {
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c).conj();
    return t;
}

bool Matrix::is_zero() const {
    for (const Scalar& s : data_)
        if (!s.is_zero()) return false;
    return true;
}

bool Matrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int r = 0; r < rows_; ++r)
        for (int c = r + 1; c < cols_; ++c)
            if ((*this)(r, c) != (*this)(c, r)) return false;
    return true;
}

Matrix Matrix::operator-() const {
    Matrix m(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = -data_[i];
    return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        throw std::invalid_argument("matrix dimension mismatch in +");
    }
    Matrix m(a.rows_, a.cols_);
    for (size_t i = 0; i < m.data_.size(); ++i) m.data_[i] = a.data_[i] + b.data_[i];
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        throw std::invalid_argument("matrix dimension mismatch in -");
    }
    Matrix m(a.rows_, a.cols_);
    for (size_t i = 0; i < m.data_.size(); ++i) m.data_[i] = a.data_[i] - b.data_[i];
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
        throw std::invalid_argument("matrix dimension mismatch in *");
    }
    Matrix m(a.rows_, b.cols_);
    for (int r = 0; r < a.rows_; ++r) {
        for (int k = 0; k < a.cols_; ++k) {
            const Scalar& ark = a(r, k);
            if (ark.is_zero()) continue;
            for (int c = 0; c < b.cols_; ++c) {
                if (b(k, c).is_zero()) continue;
                m(r, c) += ark * b(k, c);
            }
        }
    }
    return m;
}

Matrix operator*(const Scalar& c, const Matrix& m) {
    Matrix r(m.rows_, m.cols_);
    for (size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = c * m.data_[i];
    return r;
}

Scalar Matrix::trace() const {
    Scalar t(0);
    for (int i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
    return t;
}

namespace {

// Multiply each row by the lcm of its entries' denominators so the matrix
// has Gaussian-integer entries; rank is unchanged.
void clear_denominators(Matrix& m) {
    for (int r = 0; r < m.rows(); ++r) {
        mpz_class l(1);
        for (int c = 0; c < m.cols(); ++c) {
            mpz_class lr, li;
            mpz_lcm(lr.get_mpz_t(), l.get_mpz_t(), m(r, c).re.get_den().get_mpz_t());
            mpz_lcm(li.get_mpz_t(), lr.get_mpz_t(), m(r, c).im.get_den().get_mpz_t());
            l = li;
        }
        if (l == 1) continue;
        Scalar f{mpq_class(l)};
        for (int c = 0; c < m.cols(); ++c) m(r, c) *= f;
    }
}

}  // namespace

int exact_rank(Matrix m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    clear_denominators(m);
    int rank = 0;
    int row = 0;
    Scalar prev(1);
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pivot = -1;
        for (int r = row; r < m.rows(); ++r) {
            if (!m(r, col).is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != row) {
            for (int c = col; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
        }
        // Bareiss step: entries stay Gaussian integers, divisions exact
        for (int r = row + 1; r < m.rows(); ++r) {
            for (int c = col + 1; c < m.cols(); ++c) {
                m(r, c) = (m(row, col) * m(r, c) - m(r, col) * m(row, c)) / prev;
            }
            m(r, col) = Scalar(0);
        }
        prev = m(row, col);
        ++rank;
        ++row;
    }
    return rank;
}

Scalar determinant(Matrix m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("determinant of non-square matrix");
    }
    int n = m.rows();
    if (n == 0) return Scalar(1);
    Scalar prev(1);
    bool negate = false;
    for (int k = 0; k < n - 1; ++k) {
        int pivot = -1;
        for (int r = k; r < n; ++r) {
            if (!m(r, k).is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return Scalar(0);
        if (pivot != k) {
            for (int c = 0; c < n; ++c) std::swap(m(pivot, c), m(k, c));
            negate = !negate;
        }
        for (int r = k + 1; r < n; ++r) {
            for (int c = k + 1; c < n; ++c) {
                m(r, c) = (m(k, k) * m(r, c) - m(r, k) * m(k, c)) / prev;
            }
            m(r, k) = Scalar(0);
        }
        prev = m(k, k);
    }
    Scalar det = m(n - 1, n - 1);
    return negate ? -det : det;
}

std::vector<Scalar> leading_principal_minors(Matrix m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("leading principal minors of non-square matrix");
    }
    int n = m.rows();
    std::vector<Scalar> minors(n, Scalar(0));
    Scalar prev(1);
    for (int k = 0; k < n; ++k) {
        if (m(k, k).is_zero()) break;  // this and later minors stay 0
        minors[k] = m(k, k);
        for (int r = k + 1; r < n; ++r) {
            for (int c = k + 1; c < n; ++c) {
                m(r, c) = (m(k, k) * m(r, c) - m(r, k) * m(k, c)) / prev;
            }
            m(r, k) = Scalar(0);
        }
        prev = m(k, k);
    }
    return minors;
}

std::optional<std::vector<Scalar>> solve(Matrix a, std::vector<Scalar> b) {
    if (int(b.size()) != a.rows()) {
        throw std::invalid_argument("solve: right-hand side dimension mismatch");
    }
    int rows = a.rows();
    int cols = a.cols();
    std::vector<int> pivot_col_of_row;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int pivot = -1;
        for (int r = row; r < rows; ++r) {
            if (!a(r, col).is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != row) {
            for (int c = 0; c < cols; ++c) std::swap(a(pivot, c), a(row, c));
            std::swap(b[pivot], b[row]);
        }
        Scalar inv = Scalar(1) / a(row, col);
        for (int c = col; c < cols; ++c) a(row, c) *= inv;
        b[row] *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == row || a(r, col).is_zero()) continue;
            Scalar f = a(r, col);
            for (int c = col; c < cols; ++c) a(r, c) -= f * a(row, c);
            b[r] -= f * b[row];
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }
    for (int r = row; r < rows; ++r) {
        if (!b[r].is_zero()) return std::nullopt;  // inconsistent
    }
    std::vector<Scalar> x(cols, Scalar(0));
    for (size_t r = 0; r < pivot_col_of_row.size(); ++r) {
        x[pivot_col_of_row[r]] = b[r];
    }
    return x;
}

}  // namespace stratquant
