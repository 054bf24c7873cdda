#include "stratquant/reduction.hpp"

#include <stdexcept>

#include "stratquant/rng.hpp"

namespace stratquant {

Matrix mu_O(const PhasePoint& pt) {
    Matrix m(pt.s, pt.s);
    for (int j = 0; j < pt.ell; ++j) {
        for (int a = 0; a < pt.s; ++a) {
            for (int b = 0; b < pt.s; ++b) {
                mpq_class v = pt.q[j][a] * pt.p[j][b] - pt.p[j][a] * pt.q[j][b];
                if (sgn(v) != 0) m(a, b) += Scalar(std::move(v));
            }
        }
    }
    return m;
}

namespace {

mpq_class dot(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) {
    mpq_class acc(0);
    for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

}  // namespace

Matrix mu_Sp(const PhasePoint& pt) {
    const int l = pt.ell;
    Matrix m(2 * l, 2 * l);
    for (int j = 0; j < l; ++j) {
        for (int k = 0; k < l; ++k) {
            m(j, k) = Scalar(dot(pt.q[j], pt.p[k]));            // [q_j p_k]
            m(j, l + k) = Scalar(-dot(pt.q[j], pt.q[k]));       // -[q_j q_k]
            m(l + j, k) = Scalar(dot(pt.p[j], pt.p[k]));        // [p_j p_k]
            m(l + j, l + k) = Scalar(-dot(pt.p[j], pt.q[k]));   // -[p_j q_k]
        }
    }
    return m;
}

std::vector<PhasePoint> sample_zero_level(int s, int ell, int count, uint64_t seed) {
    if (s < 1 || ell < 1) {
        throw std::invalid_argument("sample_zero_level needs s, ell >= 1");
    }
    SplitMix64 rng(seed);
    std::vector<PhasePoint> points;
    points.reserve(size_t(count));
    for (int n = 0; n < count; ++n) {
        PhasePoint pt(s, ell);
        for (int j = 0; j < ell; ++j) {
            mpq_class c = rng.rational(9, 9);
            bool degenerate = true;
            while (degenerate) {  // redraw the all-zero position vector
                for (int a = 0; a < s; ++a) {
                    pt.q[j][a] = rng.rational(9, 9);
                    if (sgn(pt.q[j][a]) != 0) degenerate = false;
                }
            }
            for (int a = 0; a < s; ++a) pt.p[j][a] = c * pt.q[j][a];
        }
        points.push_back(std::move(pt));
    }
    return points;
}

SymMatrixC orbit_image(const PhasePoint& pt) {
    if (!mu_O(pt).is_zero()) {
        throw std::invalid_argument("orbit_image is only defined on the zero level of mu_O");
    }
    SymMatrixC w;
    w.n = pt.ell;
    w.entries = Matrix(pt.ell, pt.ell);
    for (int j = 0; j < pt.ell; ++j) {
        for (int k = j; k < pt.ell; ++k) {
            // z_j . z_k with z = q + i p (complex bilinear dot product)
            mpq_class re = dot(pt.q[j], pt.q[k]) - dot(pt.p[j], pt.p[k]);
            mpq_class im = dot(pt.q[j], pt.p[k]) + dot(pt.p[j], pt.q[k]);
            Scalar v{std::move(re), std::move(im)};
            w.entries(j, k) = v;
            if (k != j) w.entries(k, j) = v;
        }
    }
    return w;
}

Scalar AdjointPoint::relation_residual() const {
    Scalar four(4);
    return Y * Y - (X * X + Y * Y + four * (tau - Scalar(1))) * tau;
}

AdjointPoint adjoint_point(const Scalar& z) {
    if (z.is_zero()) {
        throw std::invalid_argument("adjoint_point needs z != 0");
    }
    AdjointPoint pt;
    pt.z = z;
    pt.x = Scalar(z.re);
    pt.y = Scalar(z.im);
    pt.r2 = Scalar(z.norm());
    pt.X = pt.x + pt.x / pt.r2;
    pt.Y = pt.y - pt.y / pt.r2;
    pt.tau = (pt.y * pt.y) / pt.r2;
    return pt;
}

std::vector<Scalar> steinberg_general(const std::vector<Scalar>& zs) {
    const size_t n = zs.size();
    if (n < 2) {
        throw std::invalid_argument("steinberg_general needs at least two coordinates");
    }
    Scalar product(1);
    for (const Scalar& z : zs) {
        if (z.is_zero()) {
            throw std::invalid_argument("steinberg_general: coordinates must be nonzero");
        }
        product *= z;
    }
    if (product != Scalar(1)) {
        throw std::invalid_argument("steinberg_general: product of coordinates must be 1");
    }
    // coefficients of prod (t + z_i): e[k] = sigma_k after the loop
    std::vector<Scalar> e(n + 1, Scalar(0));
    e[0] = Scalar(1);
    for (const Scalar& z : zs) {
        for (size_t k = std::min(e.size() - 1, n); k >= 1; --k) {
            e[k] += z * e[k - 1];
        }
    }
    return std::vector<Scalar>(e.begin() + 1, e.begin() + static_cast<long>(n));
}

}  // namespace stratquant
