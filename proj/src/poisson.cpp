#include "stratquant/poisson.hpp"

#include <stdexcept>

#include "stratquant/embedded_descriptors.hpp"

namespace stratquant {

PresentedPoissonAlgebra::PresentedPoissonAlgebra(
    std::vector<std::string> generators,
    std::map<std::pair<std::string, std::string>, Poly> table, RewriteSystem relations)
    : gens_(std::move(generators)), relations_(std::move(relations)), zero_(gens_) {
    if (relations_.empty() && relations_.vars().empty()) {
        relations_ = RewriteSystem(gens_);
    }
    if (relations_.vars() != gens_) {
        throw std::invalid_argument("relation variable list must equal the generator list");
    }
    auto index_of = [&](const std::string& g) {
        for (size_t i = 0; i < gens_.size(); ++i)
            if (gens_[i] == g) return static_cast<int>(i);
        throw std::invalid_argument("bracket table mentions unknown generator '" + g + "'");
    };
    for (auto& [key, value] : table) {
        int i = index_of(key.first);
        int j = index_of(key.second);
        if (i == j) {
            if (!value.is_zero()) {
                throw std::invalid_argument("bracket table diagonal must vanish");
            }
            continue;
        }
        Poly v = value.vars() == gens_ ? value : value.in_vars(gens_);
        if (j < i) {
            std::swap(i, j);
            v = -v;
        }
        auto [it, inserted] = table_.emplace(std::make_pair(i, j), relations_.normal_form(v));
        if (!inserted) {
            throw std::invalid_argument("duplicate bracket table entry");
        }
    }
}

const Poly& PresentedPoissonAlgebra::table_entry(int i, int j, bool& negate) const {
    negate = false;
    if (i == j) return zero_;
    if (j < i) {
        std::swap(i, j);
        negate = true;
    }
    auto it = table_.find(std::make_pair(i, j));
    return it == table_.end() ? zero_ : it->second;
}

Poly PresentedPoissonAlgebra::generator_bracket(const std::string& a,
                                                const std::string& b) const {
    return bracket(Poly::variable(gens_, a), Poly::variable(gens_, b));
}

PresentedPoissonAlgebra PresentedPoissonAlgebra::with_table_entry(const std::string& a,
                                                                  const std::string& b,
                                                                  Poly value) const {
    std::map<std::pair<std::string, std::string>, Poly> table;
    for (const auto& [key, v] : table_) {
        table[{gens_[key.first], gens_[key.second]}] = v;
    }
    table[{a, b}] = std::move(value);
    // keep (a,b) authoritative if the reversed pair was stored
    table.erase(std::make_pair(b, a));
    PresentedPoissonAlgebra out(gens_, std::move(table), relations_);
    out.name_ = name_;
    return out;
}

Poly PresentedPoissonAlgebra::bracket(const Poly& f, const Poly& g) const {
    if (f.vars() != gens_ || g.vars() != gens_) {
        throw std::invalid_argument("bracket arguments must live in the algebra's variables");
    }
    Poly acc(gens_);
    const int n = static_cast<int>(gens_.size());
    std::vector<Poly> df(n), dg(n);
    for (int i = 0; i < n; ++i) {
        df[i] = f.derivative(gens_[i]);
        dg[i] = g.derivative(gens_[i]);
    }
    for (const auto& [key, entry] : table_) {
        auto [i, j] = key;
        // {g_i, g_j} * (df_i dg_j - df_j dg_i)
        Poly mixed = df[i] * dg[j] - df[j] * dg[i];
        if (mixed.is_zero()) continue;
        acc += entry * mixed;
    }
    return relations_.normal_form(acc);
}

Poly PresentedPoissonAlgebra::jacobiator(const Poly& f, const Poly& g, const Poly& h) const {
    Poly acc = bracket(f, bracket(g, h));
    acc += bracket(g, bracket(h, f));
    acc += bracket(h, bracket(f, g));
    return relations_.normal_form(acc);
}

PresentedPoissonAlgebra::IdealVerdict PresentedPoissonAlgebra::poisson_ideal_verdict() const {
    IdealVerdict verdict;
    std::vector<Poly> rels = relations_.relation_polys();
    for (size_t r = 0; r < rels.size(); ++r) {
        for (const std::string& g : gens_) {
            Poly witness = bracket(Poly::variable(gens_, g), rels[r]);
            if (!witness.is_zero()) {
                verdict.pass = false;
                verdict.generator = g;
                verdict.relation_index = static_cast<int>(r);
                verdict.witness = std::move(witness);
                return verdict;
            }
        }
    }
    return verdict;
}

PresentedPoissonAlgebra PresentedPoissonAlgebra::from_json(const nlohmann::json& descriptor) {
    auto gens = descriptor.at("generators").get<std::vector<std::string>>();
    std::map<std::pair<std::string, std::string>, Poly> table;
    for (const auto& entry : descriptor.at("brackets")) {
        auto a = entry.at("a").get<std::string>();
        auto b = entry.at("b").get<std::string>();
        table[{a, b}] = Poly::parse(entry.at("value").get<std::string>(), gens);
    }
    std::vector<Poly> rels;
    if (descriptor.contains("relations")) {
        for (const auto& rel : descriptor.at("relations")) {
            rels.push_back(Poly::parse(rel.get<std::string>(), gens));
        }
    }
    PresentedPoissonAlgebra algebra(gens, std::move(table),
                                    RewriteSystem::from_relations(gens, rels));
    if (descriptor.contains("name")) {
        algebra.name_ = descriptor.at("name").get<std::string>();
    }
    return algebra;
}

PresentedPoissonAlgebra PresentedPoissonAlgebra::from_json_text(const std::string& text) {
    return from_json(nlohmann::json::parse(text));
}

nlohmann::json PresentedPoissonAlgebra::to_json() const {
    nlohmann::json j;
    j["name"] = name_;
    j["generators"] = gens_;
    nlohmann::json brackets = nlohmann::json::array();
    for (const auto& [key, value] : table_) {
        brackets.push_back({{"a", gens_[key.first]},
                            {"b", gens_[key.second]},
                            {"value", value.str()}});
    }
    j["brackets"] = std::move(brackets);
    nlohmann::json rels = nlohmann::json::array();
    for (const Poly& rel : relations_.relation_polys()) rels.push_back(rel.str());
    j["relations"] = std::move(rels);
    return j;
}

PresentedPoissonAlgebra builtin_semicone() {
    return PresentedPoissonAlgebra::from_json_text(descriptors::kSemiconeJson);
}

PresentedPoissonAlgebra builtin_adjoint_quotient() {
    return PresentedPoissonAlgebra::from_json_text(descriptors::kAdjointQuotientJson);
}

}  // namespace stratquant
