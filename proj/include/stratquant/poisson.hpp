#ifndef STRATQUANT_POISSON_HPP
#define STRATQUANT_POISSON_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "stratquant/poly.hpp"
#include "stratquant/rewrite.hpp"

#include "json.hpp"

namespace stratquant {

/// Finitely presented Poisson algebra: generators, an antisymmetric bracket
/// table on generator pairs, and a relation rewrite system. The bracket of
/// arbitrary polynomials is the bi-derivation extension of the table,
/// reduced to normal form.
///
/// Construction does not verify the Jacobi identity or the Poisson-ideal
/// property; those are checkable facts (jacobiator, poisson_ideal_verdict)
/// so that deliberately broken tables can be exercised.
class PresentedPoissonAlgebra {
public:
    PresentedPoissonAlgebra(std::vector<std::string> generators,
                            std::map<std::pair<std::string, std::string>, Poly> table,
                            RewriteSystem relations);

    static PresentedPoissonAlgebra from_json(const nlohmann::json& descriptor);
    static PresentedPoissonAlgebra from_json_text(const std::string& descriptor);
    nlohmann::json to_json() const;

    const std::string& name() const { return name_; }
    const std::vector<std::string>& generators() const { return gens_; }
    const RewriteSystem& relations() const { return relations_; }

    /// Bracket of two generators by name (antisymmetric lookup).
    const Poly& table_entry(int i, int j, bool& negate) const;
    Poly generator_bracket(const std::string& a, const std::string& b) const;

    /// Copy with one table entry replaced; used for perturbation tests.
    PresentedPoissonAlgebra with_table_entry(const std::string& a, const std::string& b,
                                             Poly value) const;

    Poly reduce(const Poly& p) const { return relations_.normal_form(p); }
    Poly parse(const std::string& text) const { return Poly::parse(text, gens_); }

    /// Bi-derivation extension of the bracket table, reduced.
    Poly bracket(const Poly& f, const Poly& g) const;
    /// normal form of {f,{g,h}} + {g,{h,f}} + {h,{f,g}}.
    Poly jacobiator(const Poly& f, const Poly& g, const Poly& h) const;

    struct IdealVerdict {
        bool pass = true;
        std::string generator;  // first failing generator, if any
        int relation_index = -1;
        Poly witness;           // the nonzero reduced bracket {g, R}
    };
    /// Checks {g, R} == 0 mod relations for every generator g and relation R.
    IdealVerdict poisson_ideal_verdict() const;

private:
    std::string name_;
    std::vector<std::string> gens_;
    // upper-triangle storage, key (i, j) with i < j in generator order
    std::map<std::pair<int, int>, Poly> table_;
    RewriteSystem relations_;
    Poly zero_;
};

/// The exotic plane with one vertex (x, y, r with x^2 + y^2 = r^2).
PresentedPoissonAlgebra builtin_semicone();
/// The SL(2,C) adjoint quotient presentation in X, Y, tau.
PresentedPoissonAlgebra builtin_adjoint_quotient();

}  // namespace stratquant

#endif
