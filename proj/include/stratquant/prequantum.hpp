#ifndef STRATQUANT_PREQUANTUM_HPP
#define STRATQUANT_PREQUANTUM_HPP

#include <map>
#include <string>

#include "stratquant/lierinehart.hpp"

namespace stratquant {

/// Prequantum module over the flat Poisson algebra on R^{2n} with
/// generators q1..qn, p1..pn and {q_i, p_j} = delta_ij. The carrier is the
/// polynomial algebra itself (complex coefficients); the action is
///
///   chi(a, sum c_i dg_i)(x) = i*a*x + sum c_i ({g_i, x} + i*eps*theta_i*x)
///
/// with theta = sum p_i dq_i evaluated on Hamiltonian fields, so
/// theta_i = theta(X_{g_i}). The sign eps is selected at construction as
/// the unique one in {+1, -1} for which chi turns extension brackets into
/// operator commutators, then frozen.
class PrequantumModule {
public:
    /// Validated module on R^{2n}; throws std::logic_error if sign
    /// selection fails.
    static PrequantumModule flat(int n);
    /// Broken variant with the theta correction deleted from chi; skips
    /// validation. Exists so tests can watch the Dirac condition fail.
    static PrequantumModule flat_without_theta(int n);

    int n_pairs() const { return n_; }
    int sign() const { return eps_; }
    bool theta_stripped() const { return stripped_; }
    const LieRinehart& lie_rinehart() const { return lr_; }
    const PresentedPoissonAlgebra& algebra() const { return lr_.algebra(); }
    const std::map<std::string, Poly>& potential() const { return theta_; }

    Poly parse(const std::string& text) const { return algebra().parse(text); }

    /// chi(a, alpha) applied to x.
    Poly chi(const ExtElement& e, const Poly& x) const;

    /// a-hat(x) = (1/i) chi(0, da)(x) + a*x.
    Poly prequantize(const Poly& a, const Poly& x) const;

    /// ({a,b})-hat(probe) - i*[a-hat, b-hat](probe); zero when the module
    /// is valid.
    Poly dirac_residual(const Poly& a, const Poly& b, const Poly& probe) const;

private:
    PrequantumModule(int n, int eps, bool stripped);

    bool representation_property_holds() const;

    int n_;
    int eps_;
    bool stripped_;
    LieRinehart lr_;
    std::map<std::string, Poly> theta_;
};

/// Flat Poisson algebra on R^{2n}: q1..qn, p1..pn, {q_i, p_j} = delta_ij,
/// no relations.
PresentedPoissonAlgebra flat_phase_space(int n);

}  // namespace stratquant

#endif
