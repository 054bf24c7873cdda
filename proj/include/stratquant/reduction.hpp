#ifndef STRATQUANT_REDUCTION_HPP
#define STRATQUANT_REDUCTION_HPP

#include <cstdint>
#include <vector>

#include "stratquant/linalg.hpp"

namespace stratquant {

/// Exact point of the unreduced phase space (R^{2s})^l: l position and l
/// momentum vectors in Q^s.
struct PhasePoint {
    int s = 0;
    int ell = 0;
    std::vector<std::vector<mpq_class>> q;  // ell vectors of length s
    std::vector<std::vector<mpq_class>> p;

    PhasePoint(int s_, int ell_)
        : s(s_),
          ell(ell_),
          q(ell_, std::vector<mpq_class>(s_, 0)),
          p(ell_, std::vector<mpq_class>(s_, 0)) {}
};

/// Angular momentum q_1 p_1^T - p_1 q_1^T + ... (antisymmetric s x s).
Matrix mu_O(const PhasePoint& pt);

/// Block matrix [[q.p, -q.q], [p.p, -p.q]] of pairwise inner products;
/// lands in sp(l, R).
Matrix mu_Sp(const PhasePoint& pt);

/// Deterministic exact samples of the zero angular momentum level: random
/// rational q_j (nonzero vectors) with p_j a rational multiple of q_j,
/// which forces mu_O = 0. Covers the parallel-pairs stratum only, not the
/// whole level.
std::vector<PhasePoint> sample_zero_level(int s, int ell, int count, uint64_t seed);

/// Complex symmetric l x l matrix.
struct SymMatrixC {
    int n = 0;
    Matrix entries;
};

/// W_jk = z_j . z_k (complex bilinear) for z = q + i p; defined on the zero
/// level only, where it identifies the reduced point with a symmetric
/// matrix of rank <= min(s, l). Throws off the zero level.
SymMatrixC orbit_image(const PhasePoint& pt);

/// Point of the SL(2,C) adjoint quotient obtained from z in C*: the
/// holomorphic coordinate z + 1/z splits as X + iY, and X, Y, tau satisfy
/// Y^2 = (X^2 + Y^2 + 4(tau-1)) tau exactly.
struct AdjointPoint {
    Scalar z;
    Scalar x, y, r2;
    Scalar X, Y, tau;

    /// Y^2 - (X^2 + Y^2 + 4(tau-1))*tau, identically zero.
    Scalar relation_residual() const;
};

/// Throws on z = 0.
AdjointPoint adjoint_point(const Scalar& z);

/// Elementary symmetric functions sigma_1..sigma_{n-1} of n nonzero
/// scalars with product exactly 1 (the torus slice of the Steinberg map).
std::vector<Scalar> steinberg_general(const std::vector<Scalar>& zs);

}  // namespace stratquant

#endif
