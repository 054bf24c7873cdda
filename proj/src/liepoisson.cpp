#include "stratquant/liepoisson.hpp"

#include <stdexcept>

namespace stratquant {

namespace {

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

void fill_structure_constants(LieBasis& basis) {
    const int n = basis.dim();
    basis.c.assign(n, std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n, Scalar(0))));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            Matrix com = commutator(basis.mats[i], basis.mats[j]);
            std::vector<Scalar> coords = basis.coordinates(com);
            for (int k = 0; k < n; ++k) {
                basis.c[i][j][k] = coords[k];
                basis.c[j][i][k] = -coords[k];
            }
        }
    }
}

}  // namespace

std::vector<Scalar> LieBasis::coordinates(const Matrix& m) const {
    const int n = dim();
    const int rows = mats.front().rows();
    const int cols = mats.front().cols();
    Matrix system(rows * cols, n);
    std::vector<Scalar> rhs(size_t(rows) * cols);
    for (int k = 0; k < n; ++k) {
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) system(r * cols + c, k) = mats[k](r, c);
    }
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) rhs[size_t(r) * cols + c] = m(r, c);
    auto x = solve(system, rhs);
    if (!x) {
        throw std::invalid_argument("matrix does not lie in the span of the basis");
    }
    return *x;
}

Scalar LieBasis::killing(int i, int j) const {
    Scalar acc(0);
    const int n = dim();
    for (int k = 0; k < n; ++k)
        for (int m = 0; m < n; ++m) acc += c[i][k][m] * c[j][m][k];
    return acc;
}

Scalar LieBasis::killing(const Matrix& a, const Matrix& b) const {
    std::vector<Scalar> ca = coordinates(a);
    std::vector<Scalar> cb = coordinates(b);
    Scalar acc(0);
    for (int i = 0; i < dim(); ++i) {
        if (ca[i].is_zero()) continue;
        for (int j = 0; j < dim(); ++j) {
            if (cb[j].is_zero()) continue;
            acc += ca[i] * cb[j] * killing(i, j);
        }
    }
    return acc;
}

Matrix symplectic_form(int ell) {
    Matrix j(2 * ell, 2 * ell);
    for (int k = 0; k < ell; ++k) {
        j(k, ell + k) = Scalar(1);
        j(ell + k, k) = Scalar(-1);
    }
    return j;
}

bool in_sp(const Matrix& a, int ell) {
    if (a.rows() != 2 * ell || a.cols() != 2 * ell) return false;
    Matrix j = symplectic_form(ell);
    return (a.transpose() * j + j * a).is_zero();
}

LieBasis sp_basis(int ell) {
    if (ell < 1) throw std::invalid_argument("sp_basis needs ell >= 1");
    LieBasis basis;
    const int n = 2 * ell;
    auto add = [&](const std::string& name, const Matrix& m) {
        basis.names.push_back(name);
        basis.mats.push_back(m);
    };
    // gl(l) block: E_pq top-left, -E_qp bottom-right
    for (int p = 0; p < ell; ++p) {
        for (int q = 0; q < ell; ++q) {
            Matrix m(n, n);
            m(p, q) = Scalar(1);
            m(ell + q, ell + p) = Scalar(-1);
            add("a" + std::to_string(p + 1) + std::to_string(q + 1), m);
        }
    }
    // symmetric top-right block
    for (int p = 0; p < ell; ++p) {
        for (int q = p; q < ell; ++q) {
            Matrix m(n, n);
            m(p, ell + q) = Scalar(1);
            m(q, ell + p) = Scalar(1);
            add("b" + std::to_string(p + 1) + std::to_string(q + 1), m);
        }
    }
    // symmetric bottom-left block
    for (int p = 0; p < ell; ++p) {
        for (int q = p; q < ell; ++q) {
            Matrix m(n, n);
            m(ell + p, q) = Scalar(1);
            m(ell + q, p) = Scalar(1);
            add("c" + std::to_string(p + 1) + std::to_string(q + 1), m);
        }
    }
    for (const Matrix& m : basis.mats) {
        if (!in_sp(m, ell)) {
            throw std::logic_error("sp basis element fails a^T J + J a = 0");
        }
    }
    fill_structure_constants(basis);
    return basis;
}

LieBasis so_basis(int s) {
    LieBasis basis;
    for (int p = 0; p < s; ++p) {
        for (int q = p + 1; q < s; ++q) {
            Matrix m(s, s);
            m(p, q) = Scalar(1);
            m(q, p) = Scalar(-1);
            basis.names.push_back("r" + std::to_string(p + 1) + std::to_string(q + 1));
            basis.mats.push_back(m);
        }
    }
    fill_structure_constants(basis);
    return basis;
}

LiePoissonSpace::LiePoissonSpace(int ell)
    : ell_(ell),
      basis_(sp_basis(ell)),
      algebra_([this] {
          const int n = basis_.dim();
          std::map<std::pair<std::string, std::string>, Poly> table;
          for (int i = 0; i < n; ++i) {
              for (int j = i + 1; j < n; ++j) {
                  Poly entry(basis_.names);
                  for (int k = 0; k < n; ++k) {
                      if (basis_.c[i][j][k].is_zero()) continue;
                      entry += basis_.c[i][j][k] *
                               Poly::variable(basis_.names, basis_.names[k]);
                  }
                  if (!entry.is_zero()) {
                      table[{basis_.names[i], basis_.names[j]}] = std::move(entry);
                  }
              }
          }
          return PresentedPoissonAlgebra(basis_.names, std::move(table),
                                         RewriteSystem(basis_.names));
      }()) {}

std::vector<Scalar> LiePoissonSpace::coordinate_values(const Matrix& x) const {
    if (x.rows() != 2 * ell_ || x.cols() != 2 * ell_) {
        throw std::invalid_argument("coordinate_values: matrix size mismatch");
    }
    Scalar half(mpq_class(1, 2));
    std::vector<Scalar> values;
    values.reserve(basis_.dim());
    for (const Matrix& b : basis_.mats) {
        values.push_back(half * (b * x).trace());
    }
    return values;
}

Poly LiePoissonSpace::linear_function(const Matrix& a) const {
    std::vector<Scalar> coords = basis_.coordinates(a);
    Poly f(coordinates());
    for (int k = 0; k < basis_.dim(); ++k) {
        if (coords[k].is_zero()) continue;
        f += coords[k] * coordinate(k);
    }
    return f;
}

Poly LiePoissonSpace::bracket(const Poly& f, const Poly& g) const {
    if (f.vars() != coordinates() || g.vars() != coordinates()) {
        throw std::invalid_argument(
            "Lie-Poisson bracket arguments must use the space's coordinate functions");
    }
    return algebra_.bracket(f, g);
}

}  // namespace stratquant
