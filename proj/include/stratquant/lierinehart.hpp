#ifndef STRATQUANT_LIERINEHART_HPP
#define STRATQUANT_LIERINEHART_HPP

#include <map>
#include <string>
#include <vector>

#include "stratquant/poisson.hpp"

namespace stratquant {

/// Element of the module of formal differentials of a presented Poisson
/// algebra: an A-linear combination sum_i a_i dg_i over the generators.
/// Coefficients are kept in ring normal form.
struct DiffElement {
    std::map<std::string, Poly> coeffs;

    bool is_zero() const;
    friend bool operator==(const DiffElement& a, const DiffElement& b) {
        return a.coeffs == b.coeffs;
    }
    friend bool operator!=(const DiffElement& a, const DiffElement& b) { return !(a == b); }
    std::string str() const;
};

/// Element of the central extension: an A summand plus a differential.
struct ExtElement {
    Poly scalar_part;
    DiffElement diff_part;

    friend bool operator==(const ExtElement& a, const ExtElement& b) {
        return a.scalar_part == b.scalar_part && a.diff_part == b.diff_part;
    }
    friend bool operator!=(const ExtElement& a, const ExtElement& b) { return !(a == b); }
};

/// The Lie-Rinehart algebra (A, D_A) of a presented Poisson algebra:
/// formal differentials, their Lie bracket, the anchor map into
/// derivations, and the central extension A (+) D_A.
class LieRinehart {
public:
    explicit LieRinehart(PresentedPoissonAlgebra algebra);

    const PresentedPoissonAlgebra& algebra() const { return algebra_; }

    DiffElement zero_diff() const { return DiffElement{}; }
    DiffElement make_diff(std::map<std::string, Poly> coeffs) const;

    /// d(u) = sum_i (du/dg_i) dg_i, reduced.
    DiffElement d(const Poly& u) const;

    DiffElement add(const DiffElement& a, const DiffElement& b) const;
    DiffElement scale(const Poly& a, const DiffElement& alpha) const;
    DiffElement scale(const Scalar& c, const DiffElement& alpha) const;

    /// Bilinear extension of [a du, b dv] = a{u,b} dv + b{a,v} du + ab d{u,v}
    /// over generator differentials.
    DiffElement lr_bracket(const DiffElement& alpha, const DiffElement& beta) const;

    /// Anchor: for alpha = sum a_i dg_i returns sum a_i {g_i, f}.
    Poly pi_sharp(const DiffElement& alpha, const Poly& f) const;

    /// Poisson 2-form pi(alpha, beta) = sum a_i b_j {g_i, g_j}.
    Poly pi(const DiffElement& alpha, const DiffElement& beta) const;

    ExtElement make_ext(Poly scalar_part, DiffElement diff_part) const;
    /// Bracket of the central extension:
    /// [(f, alpha), (g, beta)] = (pi#(alpha)(g) - pi#(beta)(f) - pi(alpha, beta),
    ///                            [alpha, beta]).
    /// On generating pairs (a, du), (b, dv) this is
    /// ({u,b} + {a,v} - {u,v}, d{u,v}); the kernel A is central.
    ExtElement ext_bracket(const ExtElement& a, const ExtElement& b) const;

    /// Ring normal form on all coefficients, then reduction modulo the
    /// differentials of the relations (the pivot coefficient is rewritten
    /// downwards by polynomial division against dR). Applied when a
    /// differential is formed (d, make_diff); the bilinear operations keep
    /// representatives untouched apart from ring normal forms, so algebraic
    /// identities stay exact coefficient-wise.
    DiffElement reduce(DiffElement delta) const;

    /// Ring normal form on the coefficients only.
    DiffElement ring_reduce(DiffElement delta) const;

private:
    struct ModuleRule {
        std::string pivot;     // generator whose coefficient is rewritten
        Poly pivot_coeff;      // its coefficient in the rule element
        DiffElement element;   // the full rule element (reduces to zero)
    };

    PresentedPoissonAlgebra algebra_;
    std::vector<ModuleRule> module_rules_;
};

}  // namespace stratquant

#endif
