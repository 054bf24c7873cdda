#ifndef STRATQUANT_FOCK_HPP
#define STRATQUANT_FOCK_HPP

#include <optional>
#include <string>
#include <vector>

#include "stratquant/linalg.hpp"
#include "stratquant/poly.hpp"

namespace stratquant {

/// Variable names of the Bargmann model for l particles in R^s:
/// z1_1..z1_s, z2_1, ..., zl_s (m = s*l holomorphic coordinates).
std::vector<std::string> z_vars(int s, int ell);

/// Coordinates w_jk (j <= k) of complex symmetric l x l matrices.
std::vector<std::string> w_vars(int ell);

/// All degree-k monomials in the w coordinates, descending graded-lex.
std::vector<Poly> w_monomials(int ell, int k);

/// Substitute w_jk -> z_j . z_k = sum_a zj_a zk_a into a w-polynomial,
/// landing in the level-s Bargmann model.
Poly w_substitution(const Poly& w_poly, int s, int ell);

/// Bargmann inner product via monomial orthogonality
/// <z^A, z^B> = delta_AB 2^|A| A!; sesquilinear in the second slot.
/// Throws on a variable mismatch.
Scalar bargmann_inner(const Poly& f, const Poly& g);

/// Cost guard for basis construction; lift with unsafe = true.
struct DeskBounds {
    int max_s = 3;
    int max_ell = 3;
    int max_k = 4;
    bool unsafe = false;
};

/// Basis of the degree-2k part of the O(s)-invariant subalgebra: a maximal
/// linearly independent subset of the substituted degree-k w-monomials,
/// selected in graded-lex order by exact rank.
struct InvariantBasis {
    int s = 0;
    int ell = 0;
    int k = 0;
    std::vector<Poly> elements;          // polynomials in the z variables
    std::vector<Poly> w_representation;  // the defining w-monomials

    int dim() const { return static_cast<int>(elements.size()); }
};

InvariantBasis invariant_basis(int s, int ell, int k, const DeskBounds& bounds = {});

/// Quantized u(l) observable: the first-order operator
///   f -> -i * sum_{j,k,a} a_kj z_k,a d f / d z_j,a
/// (no ordering constant). For a = i*Id this is the Euler operator. Throws
/// unless a is anti-Hermitian.
Poly quantize_u(const Matrix& a, const Poly& f, int s, int ell);

/// The Euler (degree) operator, the quantized oscillator energy.
Poly euler_operator(const Poly& f, int s, int ell);

/// Restriction to a lower level of the costratified structure: substitute
/// the rank <= s' parametrization w_jk = t_j . t_k. Requires 1 <= s' < s.
Poly costratified_restrict(const Poly& w_poly, int s, int s_prime, int ell);

/// Exact Gram matrix of a basis under the Bargmann inner product.
Matrix gram(const InvariantBasis& basis);

/// Positive definiteness by exact leading principal minors.
bool positive_definite(const Matrix& g);

/// Re-express an O(s)-invariant of degree 2k as a degree-k w-polynomial
/// (a solution; unique only modulo the level-s relations). nullopt if the
/// polynomial is not in the span.
std::optional<Poly> express_in_w(const Poly& fock_poly, int s, int ell, int k);

/// Generating set of O(s, Q) used by invariance tests: coordinate swap,
/// cyclic shift, a sign flip, and the rational rotation
/// (3/5, 4/5; -4/5, 3/5) in the first two coordinates.
std::vector<Matrix> orthogonal_generators(int s);

/// Action on the Bargmann model: substitute z_j,a -> sum_b g_ab z_j,b.
Poly apply_orthogonal(const Matrix& g, const Poly& f, int s, int ell);

}  // namespace stratquant

#endif
