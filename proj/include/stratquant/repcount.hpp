#ifndef STRATQUANT_REPCOUNT_HPP
#define STRATQUANT_REPCOUNT_HPP

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace stratquant {

/// Exponent tuple (alpha, beta, ..., gamma) of a monomial in the
/// determinant invariants delta_1..delta_s, constrained to weighted degree
/// alpha + 2 beta + ... + s gamma = k.
struct DeltaMonomial {
    std::vector<int> exponents;  // length s
    int level() const;           // the weighted degree k
};

/// All delta-monomials of weighted degree k, in a fixed deterministic
/// order (larger delta_1 exponent first).
std::vector<DeltaMonomial> enumerate_monomials(int s, int k);

/// Nonincreasing nonnegative U(l) highest weight.
using WeightTuple = std::vector<int>;

/// Weight of delta_1^a ... delta_s^g as a U(l) weight: delta_j contributes
/// (2,...,2,0,...) with j twos, so entry i is twice the number of delta_j
/// with j >= i+1, counted with exponents.
WeightTuple delta_weight(const DeltaMonomial& mono, int ell);

/// Weyl dimension formula prod_{i<j} (l_i - l_j + j - i)/(j - i); exact.
/// Throws on a non-monotone tuple.
mpz_class weyl_dim(const WeightTuple& lambda, int ell);

/// Dimension of the level-(s,k) quantum space: sum of weyl_dim over the
/// delta-monomials of weighted degree k. Requires s <= l.
mpz_class section_dim(int s, int ell, int k);

/// Independent brute-force dimension: exact rank of the evaluation matrix
/// of all degree-k monomials in the symmetric-matrix coordinates w_jk at
/// random rational rank <= s points T T^t. Deterministic per seed.
mpz_class oracle_dim(int s, int ell, int k, uint64_t seed);

/// Dimension of the kernel of the restriction to level s-1: the span of
/// the representations whose monomial involves delta_s. Requires
/// 2 <= s <= l.
mpz_class kernel_dim(int s, int ell, int k);

mpz_class binomial(long n, long k);

}  // namespace stratquant

#endif
