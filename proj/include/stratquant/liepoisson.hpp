#ifndef STRATQUANT_LIEPOISSON_HPP
#define STRATQUANT_LIEPOISSON_HPP

#include <string>
#include <vector>

#include "stratquant/linalg.hpp"
#include "stratquant/poisson.hpp"

namespace stratquant {

/// Matrix Lie algebra given by an explicit basis, with exact structure
/// constants [b_i, b_j] = sum_k c[i][j][k] b_k obtained by solving in the
/// basis, and the Killing form computed from them.
struct LieBasis {
    std::vector<std::string> names;
    std::vector<Matrix> mats;
    // structure constants, dense: c[i][j][k]
    std::vector<std::vector<std::vector<Scalar>>> c;

    int dim() const { return static_cast<int>(mats.size()); }
    /// beta(b_i, b_j) = tr(ad_i ad_j) via structure constants.
    Scalar killing(int i, int j) const;
    /// Killing form of two matrices expanded in this basis.
    Scalar killing(const Matrix& a, const Matrix& b) const;
    /// Coordinates of a matrix in this basis (throws if not in the span).
    std::vector<Scalar> coordinates(const Matrix& m) const;
};

/// Standard symplectic form matrix [[0, I], [-I, 0]] of size 2l.
Matrix symplectic_form(int ell);
/// a^T J + J a == 0, membership in sp(l, R).
bool in_sp(const Matrix& a, int ell);

/// Block basis of sp(l,R): gl(l) part a_pq, symmetric-upper part b_pq
/// (p <= q), symmetric-lower part c_pq (p <= q). For l = 1 this is the
/// familiar H, E, F of sl(2,R) as a11, b11, c11.
LieBasis sp_basis(int ell);
/// Basis r_pq = E_pq - E_qp (p < q) of so(s,R).
LieBasis so_basis(int s);

/// The Lie-Poisson structure on sp(l,R), identified with its dual by the
/// pairing (1/2) tr(a x). Coordinate functions are the linear functions of
/// the basis elements, so brackets of coordinates are read off the
/// structure constants; polynomials extend by bi-derivation.
class LiePoissonSpace {
public:
    explicit LiePoissonSpace(int ell);

    int ell() const { return ell_; }
    const LieBasis& basis() const { return basis_; }
    const PresentedPoissonAlgebra& algebra() const { return algebra_; }
    const std::vector<std::string>& coordinates() const { return algebra_.generators(); }

    /// The linear function x -> (1/2) tr(a x) expressed in coordinates.
    Poly linear_function(const Matrix& a) const;
    Poly coordinate(int k) const { return Poly::variable(coordinates(), coordinates()[k]); }
    /// Values of the coordinate functions at a matrix point, i.e.
    /// (1/2) tr(b_k x) for each basis element b_k.
    std::vector<Scalar> coordinate_values(const Matrix& x) const;

    /// Lie-Poisson bracket; throws on a variable/dimension mismatch.
    Poly bracket(const Poly& f, const Poly& g) const;

private:
    int ell_;
    LieBasis basis_;
    PresentedPoissonAlgebra algebra_;
};

}  // namespace stratquant

#endif
