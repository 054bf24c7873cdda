#include "stratquant/rewrite.hpp"

#include <numeric>
#include <stdexcept>

namespace stratquant {

namespace {

void validate_rule(const std::vector<std::string>& vars, const RewriteRule& rule) {
    if (rule.lhs.size() != vars.size()) {
        throw std::invalid_argument("rewrite rule lhs length mismatch");
    }
    if (std::accumulate(rule.lhs.begin(), rule.lhs.end(), 0) == 0) {
        throw std::invalid_argument("rewrite rule lhs must be a nonconstant monomial");
    }
    if (rule.replacement.vars() != vars) {
        throw std::invalid_argument("rewrite rule replacement has wrong variable list");
    }
    for (const auto& [e, c] : rule.replacement.terms()) {
        if (!grlex_greater(rule.lhs, e)) {
            throw std::invalid_argument(
                "non-terminating rewrite rule: replacement term not below lhs");
        }
    }
}

}  // namespace

RewriteSystem::RewriteSystem(std::vector<std::string> vars, std::vector<RewriteRule> rules)
    : vars_(std::move(vars)), rules_(std::move(rules)) {
    for (const auto& r : rules_) validate_rule(vars_, r);
}

RewriteSystem RewriteSystem::from_relations(std::vector<std::string> vars,
                                            const std::vector<Poly>& relations) {
    std::vector<RewriteRule> rules;
    for (const Poly& rel : relations) {
        if (rel.vars() != vars) {
            throw std::invalid_argument("relation has wrong variable list");
        }
        if (rel.is_zero()) continue;
        auto lead = rel.terms().begin();
        Exponents lhs = lead->first;
        Scalar lc = lead->second;
        Poly rest(vars);
        for (auto it = std::next(rel.terms().begin()); it != rel.terms().end(); ++it) {
            rest.add_term(it->first, it->second);
        }
        // lc*lhs + rest = 0  =>  lhs -> -rest/lc
        Poly replacement = (Scalar(-1) / lc) * rest;
        rules.push_back({std::move(lhs), std::move(replacement)});
    }
    return RewriteSystem(std::move(vars), std::move(rules));
}

std::vector<Poly> RewriteSystem::relation_polys() const {
    std::vector<Poly> rels;
    rels.reserve(rules_.size());
    for (const auto& r : rules_) {
        Poly rel(vars_);
        rel.add_term(r.lhs, Scalar(1));
        rel -= r.replacement;
        rels.push_back(std::move(rel));
    }
    return rels;
}

Poly RewriteSystem::normal_form(const Poly& p) const {
    if (p.vars() != vars_) {
        if (rules_.empty() && vars_.empty()) return p;  // default-constructed: identity
        throw std::invalid_argument("polynomial variables unknown to rewrite system");
    }
    Poly cur = p;
    bool reduced = true;
    while (reduced) {
        reduced = false;
        // scan from the leading term; rewrite the largest reducible one
        for (const auto& [e, c] : cur.terms()) {
            for (const auto& rule : rules_) {
                if (!divides(rule.lhs, e)) continue;
                Exponents quot(e.size());
                for (size_t i = 0; i < e.size(); ++i) quot[i] = e[i] - rule.lhs[i];
                // subtract c * x^quot * (x^lhs - replacement)
                Poly shift(vars_);
                shift.add_term(quot, c);
                Poly repl_part = shift * rule.replacement;
                Poly lead_part(vars_);
                lead_part.add_term(e, c);
                cur -= lead_part;
                cur += repl_part;
                reduced = true;
                break;
            }
            if (reduced) break;
        }
    }
    return cur;
}

}  // namespace stratquant
