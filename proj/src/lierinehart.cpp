#include "stratquant/lierinehart.hpp"

#include <sstream>
#include <stdexcept>

namespace stratquant {

bool DiffElement::is_zero() const {
    for (const auto& [g, c] : coeffs) {
        if (!c.is_zero()) return false;
    }
    return true;
}

std::string DiffElement::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, c] : coeffs) {
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << c.str() << ")*d" << g;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

namespace {

// Quotient of the multivariate division of p by the single divisor c:
// repeatedly strip the largest term of the running remainder divisible by
// the leading term of c. The remainder is what p reduces to.
Poly division_quotient(const Poly& p, const Poly& c) {
    if (c.is_zero()) return Poly(p.vars());
    const auto& lead = *c.terms().begin();
    Poly quotient(p.vars());
    Poly rem = p;
    bool progress = true;
    while (progress && !rem.is_zero()) {
        progress = false;
        for (const auto& [e, coef] : rem.terms()) {
            if (!divides(lead.first, e)) continue;
            Exponents q(e.size());
            for (size_t k = 0; k < e.size(); ++k) q[k] = e[k] - lead.first[k];
            Poly qterm(p.vars());
            qterm.add_term(q, coef / lead.second);
            quotient += qterm;
            rem -= qterm * c;
            progress = true;
            break;
        }
    }
    return quotient;
}

}  // namespace

LieRinehart::LieRinehart(PresentedPoissonAlgebra algebra) : algebra_(std::move(algebra)) {
    // one module rewrite element per relation: dR = sum_i (dR/dg_i) dg_i
    for (const Poly& rel : algebra_.relations().relation_polys()) {
        ModuleRule rule;
        for (const std::string& g : algebra_.generators()) {
            Poly c = algebra_.reduce(rel.derivative(g));
            if (!c.is_zero()) {
                if (rule.pivot.empty()) {
                    rule.pivot = g;
                    rule.pivot_coeff = c;
                }
                rule.element.coeffs[g] = std::move(c);
            }
        }
        if (!rule.pivot.empty()) module_rules_.push_back(std::move(rule));
    }
}

DiffElement LieRinehart::make_diff(std::map<std::string, Poly> coeffs) const {
    DiffElement delta;
    Poly probe(algebra_.generators());
    for (auto& [g, c] : coeffs) {
        if (probe.var_index(g) < 0) {
            throw std::invalid_argument("differential on unknown generator '" + g + "'");
        }
        delta.coeffs[g] = c.vars() == algebra_.generators()
                              ? c
                              : c.in_vars(algebra_.generators());
    }
    return reduce(std::move(delta));
}

DiffElement LieRinehart::d(const Poly& u) const {
    DiffElement delta;
    for (const std::string& g : algebra_.generators()) {
        Poly c = u.derivative(g);
        if (!c.is_zero()) delta.coeffs[g] = std::move(c);
    }
    return reduce(std::move(delta));
}

DiffElement LieRinehart::add(const DiffElement& a, const DiffElement& b) const {
    DiffElement out = a;
    for (const auto& [g, c] : b.coeffs) {
        auto it = out.coeffs.find(g);
        if (it == out.coeffs.end()) {
            out.coeffs[g] = c;
        } else {
            it->second += c;
        }
    }
    return ring_reduce(std::move(out));
}

DiffElement LieRinehart::scale(const Poly& a, const DiffElement& alpha) const {
    DiffElement out;
    for (const auto& [g, c] : alpha.coeffs) out.coeffs[g] = a * c;
    return ring_reduce(std::move(out));
}

DiffElement LieRinehart::scale(const Scalar& c, const DiffElement& alpha) const {
    DiffElement out;
    for (const auto& [g, coef] : alpha.coeffs) out.coeffs[g] = c * coef;
    return ring_reduce(std::move(out));
}

DiffElement LieRinehart::lr_bracket(const DiffElement& alpha, const DiffElement& beta) const {
    const auto& gens = algebra_.generators();
    DiffElement out;
    auto add_to = [&](const std::string& g, const Poly& p) {
        if (p.is_zero()) return;
        auto it = out.coeffs.find(g);
        if (it == out.coeffs.end()) {
            out.coeffs[g] = p;
        } else {
            it->second += p;
        }
    };
    for (const auto& [gu, a] : alpha.coeffs) {
        Poly u = Poly::variable(gens, gu);
        for (const auto& [gv, b] : beta.coeffs) {
            Poly v = Poly::variable(gens, gv);
            // [a du, b dv] = a{u,b} dv + b{a,v} du + ab d{u,v}
            add_to(gv, a * algebra_.bracket(u, b));
            add_to(gu, b * algebra_.bracket(a, v));
            Poly uv = algebra_.bracket(u, v);
            if (!uv.is_zero()) {
                Poly ab = a * b;
                for (const std::string& g : gens) {
                    add_to(g, ab * uv.derivative(g));
                }
            }
        }
    }
    return ring_reduce(std::move(out));
}

Poly LieRinehart::pi_sharp(const DiffElement& alpha, const Poly& f) const {
    const auto& gens = algebra_.generators();
    Poly acc(gens);
    for (const auto& [g, a] : alpha.coeffs) {
        acc += a * algebra_.bracket(Poly::variable(gens, g), f);
    }
    return algebra_.reduce(acc);
}

Poly LieRinehart::pi(const DiffElement& alpha, const DiffElement& beta) const {
    const auto& gens = algebra_.generators();
    Poly acc(gens);
    for (const auto& [gu, a] : alpha.coeffs) {
        Poly u = Poly::variable(gens, gu);
        for (const auto& [gv, b] : beta.coeffs) {
            acc += a * b * algebra_.bracket(u, Poly::variable(gens, gv));
        }
    }
    return algebra_.reduce(acc);
}

ExtElement LieRinehart::make_ext(Poly scalar_part, DiffElement diff_part) const {
    return ExtElement{algebra_.reduce(scalar_part), ring_reduce(std::move(diff_part))};
}

ExtElement LieRinehart::ext_bracket(const ExtElement& a, const ExtElement& b) const {
    Poly scalar = pi_sharp(a.diff_part, b.scalar_part);
    scalar -= pi_sharp(b.diff_part, a.scalar_part);
    scalar -= pi(a.diff_part, b.diff_part);
    return ExtElement{algebra_.reduce(scalar), lr_bracket(a.diff_part, b.diff_part)};
}

DiffElement LieRinehart::ring_reduce(DiffElement delta) const {
    for (auto it = delta.coeffs.begin(); it != delta.coeffs.end();) {
        if (algebra_.generators() !=
            (it->second.vars())) {  // realign foreign coefficient lists
            it->second = it->second.in_vars(algebra_.generators());
        }
        it->second = algebra_.reduce(it->second);
        if (it->second.is_zero()) {
            it = delta.coeffs.erase(it);
        } else {
            ++it;
        }
    }
    return delta;
}

DiffElement LieRinehart::reduce(DiffElement delta) const {
    delta = ring_reduce(std::move(delta));
    if (module_rules_.empty()) return delta;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const ModuleRule& rule : module_rules_) {
            auto it = delta.coeffs.find(rule.pivot);
            if (it == delta.coeffs.end()) continue;
            Poly q = division_quotient(it->second, rule.pivot_coeff);
            if (q.is_zero()) continue;
            for (const auto& [g, c] : rule.element.coeffs) {
                auto jt = delta.coeffs.find(g);
                if (jt == delta.coeffs.end()) {
                    Poly nc = algebra_.reduce(-(q * c));
                    if (!nc.is_zero()) delta.coeffs[g] = std::move(nc);
                } else {
                    jt->second = algebra_.reduce(jt->second - q * c);
                    if (jt->second.is_zero()) delta.coeffs.erase(jt);
                }
            }
            changed = true;
        }
    }
    return delta;
}

}  // namespace stratquant
