#include "stratquant/fock.hpp"

#include <map>
#include <stdexcept>

namespace stratquant {

std::vector<std::string> z_vars(int s, int ell) {
    std::vector<std::string> vars;
    vars.reserve(size_t(s) * ell);
    for (int j = 1; j <= ell; ++j) {
        for (int a = 1; a <= s; ++a) {
            vars.push_back("z" + std::to_string(j) + "_" + std::to_string(a));
        }
    }
    return vars;
}

std::vector<std::string> w_vars(int ell) {
    std::vector<std::string> vars;
    for (int j = 1; j <= ell; ++j) {
        for (int k = j; k <= ell; ++k) {
            vars.push_back("w" + std::to_string(j) + "_" + std::to_string(k));
        }
    }
    return vars;
}

namespace {

void monomials_rec(const std::vector<std::string>& vars, int pos, int remaining,
                   Exponents& current, std::vector<Poly>& out) {
    if (pos == static_cast<int>(vars.size()) - 1) {
        current[pos] = remaining;
        Poly m(vars);
        m.add_term(current, Scalar(1));
        out.push_back(std::move(m));
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        current[pos] = e;
        monomials_rec(vars, pos + 1, remaining - e, current, out);
    }
    current[pos] = 0;
}

}  // namespace

std::vector<Poly> w_monomials(int ell, int k) {
    const auto vars = w_vars(ell);
    std::vector<Poly> out;
    Exponents current(vars.size(), 0);
    monomials_rec(vars, 0, k, current, out);
    return out;
}

Poly w_substitution(const Poly& w_poly, int s, int ell) {
    const auto zs = z_vars(s, ell);
    std::map<std::string, Poly> images;
    for (int j = 1; j <= ell; ++j) {
        for (int k = j; k <= ell; ++k) {
            Poly dotprod(zs);
            for (int a = 1; a <= s; ++a) {
                dotprod += Poly::variable(zs, "z" + std::to_string(j) + "_" + std::to_string(a)) *
                           Poly::variable(zs, "z" + std::to_string(k) + "_" + std::to_string(a));
            }
            images["w" + std::to_string(j) + "_" + std::to_string(k)] = std::move(dotprod);
        }
    }
    return w_poly.substitute(images, zs);
}

namespace {

mpz_class monomial_norm2_int(const Exponents& e) {
    // 2^|A| * A!
    unsigned long total = 0;
    mpz_class acc(1);
    for (int k : e) {
        total += static_cast<unsigned long>(k);
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
        acc *= f;
    }
    mpz_class shifted;
    mpz_mul_2exp(shifted.get_mpz_t(), acc.get_mpz_t(), total);
    return shifted;
}

}  // namespace

Scalar bargmann_inner(const Poly& f, const Poly& g) {
    if (f.vars() != g.vars()) {
        throw std::invalid_argument("bargmann_inner: variable mismatch");
    }
    Scalar acc(0);
    for (const auto& [e, cf] : f.terms()) {
        Scalar cg = g.coeff(e);
        if (cg.is_zero()) continue;
        acc += cf * cg.conj() * Scalar(mpq_class(monomial_norm2_int(e)));
    }
    return acc;
}

InvariantBasis invariant_basis(int s, int ell, int k, const DeskBounds& bounds) {
    if (s < 1 || ell < 1 || k < 0) {
        throw std::invalid_argument("invariant_basis needs s, ell >= 1 and k >= 0");
    }
    if (!bounds.unsafe && (s > bounds.max_s || ell > bounds.max_ell || k > bounds.max_k)) {
        throw std::domain_error("invariant_basis bounds exceeded (cost guard)");
    }
    InvariantBasis basis;
    basis.s = s;
    basis.ell = ell;
    basis.k = k;

    // incremental row reduction over the z-monomial coefficient vectors:
    // a candidate is kept iff it enlarges the row space
    std::map<Exponents, int, GradedLexDesc> column_of;
    std::vector<std::vector<Scalar>> echelon;  // reduced rows
    std::vector<int> pivot_col;

    auto vector_of = [&](const Poly& p) {
        std::vector<Scalar> v(column_of.size(), Scalar(0));
        for (const auto& [e, c] : p.terms()) {
            auto [it, inserted] = column_of.emplace(e, static_cast<int>(column_of.size()));
            if (inserted) {
                v.resize(column_of.size(), Scalar(0));
                for (auto& row : echelon) row.resize(column_of.size(), Scalar(0));
            }
            v[size_t(it->second)] = c;
        }
        return v;
    };

    for (Poly& mono : w_monomials(ell, k)) {
        Poly candidate = w_substitution(mono, s, ell);
        std::vector<Scalar> v = vector_of(candidate);
        for (size_t r = 0; r < echelon.size(); ++r) {
            const Scalar& x = v[size_t(pivot_col[r])];
            if (x.is_zero()) continue;
            Scalar factor = x / echelon[r][size_t(pivot_col[r])];
            for (size_t c = 0; c < v.size(); ++c) {
                if (!echelon[r][c].is_zero()) v[c] -= factor * echelon[r][c];
            }
        }
        int pivot = -1;
        for (size_t c = 0; c < v.size(); ++c) {
            if (!v[c].is_zero()) {
                pivot = static_cast<int>(c);
                break;
            }
        }
        if (pivot < 0) continue;  // dependent on earlier monomials
        echelon.push_back(std::move(v));
        pivot_col.push_back(pivot);
        basis.elements.push_back(std::move(candidate));
        basis.w_representation.push_back(std::move(mono));
    }
    return basis;
}

Poly quantize_u(const Matrix& a, const Poly& f, int s, int ell) {
    if (a.rows() != ell || a.cols() != ell) {
        throw std::invalid_argument("quantize_u: matrix must be ell x ell");
    }
    for (int j = 0; j < ell; ++j) {
        for (int k = 0; k < ell; ++k) {
            if (a(j, k) != -a(k, j).conj()) {
                throw std::invalid_argument("quantize_u: matrix must be anti-Hermitian");
            }
        }
    }
    const auto zs = z_vars(s, ell);
    Poly result(zs);
    Scalar minus_i = -Scalar::i();
    for (int j = 1; j <= ell; ++j) {
        for (int aa = 1; aa <= s; ++aa) {
            Poly df = f.derivative("z" + std::to_string(j) + "_" + std::to_string(aa));
            if (df.is_zero()) continue;
            for (int k = 1; k <= ell; ++k) {
                const Scalar& coeff = a(k - 1, j - 1);
                if (coeff.is_zero()) continue;
                result += (minus_i * coeff) *
                          (Poly::variable(zs, "z" + std::to_string(k) + "_" +
                                                  std::to_string(aa)) *
                           df);
            }
        }
    }
    return result;
}

Poly euler_operator(const Poly& f, int s, int ell) {
    Matrix a(ell, ell);
    for (int j = 0; j < ell; ++j) a(j, j) = Scalar::i();
    return quantize_u(a, f, s, ell);
}

Poly costratified_restrict(const Poly& w_poly, int s, int s_prime, int ell) {
    if (s_prime < 1) {
        throw std::invalid_argument("costratified_restrict needs s' >= 1");
    }
    if (s_prime >= s) {
        throw std::invalid_argument("costratified_restrict needs s' < s");
    }
    return w_substitution(w_poly, s_prime, ell);
}

Matrix gram(const InvariantBasis& basis) {
    const int n = basis.dim();
    Matrix g(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            Scalar v = bargmann_inner(basis.elements[size_t(i)], basis.elements[size_t(j)]);
            g(i, j) = v;
            if (j != i) g(j, i) = v.conj();
        }
    }
    return g;
}

bool positive_definite(const Matrix& g) {
    if (g.rows() != g.cols()) return false;
    for (const Scalar& minor : leading_principal_minors(g)) {
        if (!minor.is_real() || sgn(minor.re) <= 0) return false;
    }
    return true;
}

std::optional<Poly> express_in_w(const Poly& fock_poly, int s, int ell, int k) {
    std::vector<Poly> monomials = w_monomials(ell, k);
    std::vector<Poly> images;
    images.reserve(monomials.size());
    std::map<Exponents, int, GradedLexDesc> column_of;
    for (const Poly& m : monomials) {
        images.push_back(w_substitution(m, s, ell));
        for (const auto& [e, c] : images.back().terms()) {
            column_of.emplace(e, static_cast<int>(column_of.size()));
        }
    }
    for (const auto& [e, c] : fock_poly.terms()) {
        auto it = column_of.find(e);
        if (it == column_of.end()) return std::nullopt;  // monomial outside the span
    }
    Matrix system(static_cast<int>(column_of.size()), static_cast<int>(monomials.size()));
    std::vector<Scalar> rhs(column_of.size(), Scalar(0));
    for (size_t col = 0; col < images.size(); ++col) {
        for (const auto& [e, c] : images[col].terms()) {
            system(column_of.at(e), static_cast<int>(col)) = c;
        }
    }
    for (const auto& [e, c] : fock_poly.terms()) rhs[size_t(column_of.at(e))] = c;
    auto x = solve(system, rhs);
    if (!x) return std::nullopt;
    Poly out(w_vars(ell));
    for (size_t col = 0; col < monomials.size(); ++col) {
        if (!(*x)[col].is_zero()) out += (*x)[col] * monomials[col];
    }
    return out;
}

std::vector<Matrix> orthogonal_generators(int s) {
    std::vector<Matrix> gens;
    // sign flip on the first coordinate
    Matrix flip = Matrix::identity(s);
    flip(0, 0) = Scalar(-1);
    gens.push_back(flip);
    if (s >= 2) {
        Matrix swap01(s, s);
        for (int i = 2; i < s; ++i) swap01(i, i) = Scalar(1);
        swap01(0, 1) = Scalar(1);
        swap01(1, 0) = Scalar(1);
        gens.push_back(swap01);

        Matrix rot = Matrix::identity(s);
        rot(0, 0) = Scalar(mpq_class(3, 5));
        rot(0, 1) = Scalar(mpq_class(4, 5));
        rot(1, 0) = Scalar(mpq_class(-4, 5));
        rot(1, 1) = Scalar(mpq_class(3, 5));
        gens.push_back(rot);
    }
    if (s >= 3) {
        Matrix cycle(s, s);
        for (int i = 0; i < s; ++i) cycle((i + 1) % s, i) = Scalar(1);
        gens.push_back(cycle);
    }
    return gens;
}

Poly apply_orthogonal(const Matrix& g, const Poly& f, int s, int ell) {
    if (g.rows() != s || g.cols() != s) {
        throw std::invalid_argument("apply_orthogonal: matrix must be s x s");
    }
    const auto zs = z_vars(s, ell);
    std::map<std::string, Poly> images;
    for (int j = 1; j <= ell; ++j) {
        for (int a = 1; a <= s; ++a) {
            Poly image(zs);
            for (int b = 1; b <= s; ++b) {
                const Scalar& c = g(a - 1, b - 1);
                if (c.is_zero()) continue;
                image += c * Poly::variable(zs, "z" + std::to_string(j) + "_" +
                                                    std::to_string(b));
            }
            images["z" + std::to_string(j) + "_" + std::to_string(a)] = std::move(image);
        }
    }
    return f.substitute(images, zs);
}

}  // namespace stratquant
