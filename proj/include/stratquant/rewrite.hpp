#ifndef STRATQUANT_REWRITE_HPP
#define STRATQUANT_REWRITE_HPP

#include <string>
#include <vector>

#include "stratquant/poly.hpp"

namespace stratquant {

/// A rewrite rule lhs -> replacement with a monic monomial left-hand side.
struct RewriteRule {
    Exponents lhs;
    Poly replacement;
};

/// Terminating monomial rewrite system. Construction validates that every
/// replacement term is strictly below the rule's left-hand side in the
/// graded-lex order, so rewriting strictly descends and cannot loop.
class RewriteSystem {
public:
    RewriteSystem() = default;
    explicit RewriteSystem(std::vector<std::string> vars) : vars_(std::move(vars)) {}
    RewriteSystem(std::vector<std::string> vars, std::vector<RewriteRule> rules);

    /// Orient each relation by its leading term: lc*m + rest = 0 becomes
    /// m -> -rest/lc.
    static RewriteSystem from_relations(std::vector<std::string> vars,
                                        const std::vector<Poly>& relations);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<RewriteRule>& rules() const { return rules_; }
    /// The relation polynomials lhs - replacement, one per rule.
    std::vector<Poly> relation_polys() const;
    bool empty() const { return rules_.empty(); }

    /// Unique rewrite-irreducible representative. Requires the variables of
    /// p to be known to the system.
    Poly normal_form(const Poly& p) const;

private:
    std::vector<std::string> vars_;
    std::vector<RewriteRule> rules_;
};

}  // namespace stratquant

#endif
