#include "stratquant/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace stratquant {

bool grlex_greater(const Exponents& a, const Exponents& b) {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    return a > b;  // lexicographic on exponent vectors
}

bool GradedLexDesc::operator()(const Exponents& a, const Exponents& b) const {
    return grlex_greater(a, b);
}

bool divides(const Exponents& divisor, const Exponents& dividend) {
    if (divisor.size() != dividend.size()) return false;
    for (size_t i = 0; i < divisor.size(); ++i) {
        if (dividend[i] < divisor[i]) return false;
    }
    return true;
}

Poly Poly::constant(std::vector<std::string> vars, Scalar c) {
    Poly p(std::move(vars));
    p.add_term(Exponents(p.vars_.size(), 0), c);
    return p;
}

Poly Poly::variable(std::vector<std::string> vars, const std::string& name) {
    Poly p(std::move(vars));
    int idx = p.var_index(name);
    if (idx < 0) {
        throw std::invalid_argument("unknown variable '" + name + "'");
    }
    Exponents e(p.vars_.size(), 0);
    e[static_cast<size_t>(idx)] = 1;
    p.add_term(e, Scalar(1));
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && total_degree() == 0;
}

Scalar Poly::constant_term() const {
    return coeff(Exponents(vars_.size(), 0));
}

int Poly::total_degree() const {
    if (terms_.empty()) return -1;
    const Exponents& lead = terms_.begin()->first;
    return std::accumulate(lead.begin(), lead.end(), 0);
}

Scalar Poly::coeff(const Exponents& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Scalar() : it->second;
}

int Poly::var_index(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) return -1;
    return static_cast<int>(it - vars_.begin());
}

void Poly::add_term(const Exponents& exp, const Scalar& c) {
    if (exp.size() != vars_.size()) {
        throw std::invalid_argument("exponent vector length mismatch");
    }
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Poly::check_same_vars(const Poly& o) const {
    if (vars_ != o.vars_) {
        throw std::invalid_argument("polynomial variable lists differ");
    }
}

Poly Poly::operator-() const {
    Poly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    check_same_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check_same_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.check_same_vars(b);
    Poly r(a.vars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Poly operator*(const Scalar& c, Poly p) {
    if (c.is_zero()) return Poly(p.vars());
    Poly r(p.vars());
    for (const auto& [e, coef] : p.terms()) r.add_term(e, c * coef);
    return r;
}

Poly Poly::pow(unsigned n) const {
    Poly r = Poly::constant(vars_, Scalar(1));
    for (unsigned k = 0; k < n; ++k) r = r * *this;
    return r;
}

Poly Poly::derivative(const std::string& var) const {
    int idx = var_index(var);
    if (idx < 0) {
        throw std::invalid_argument("derivative w.r.t. unknown variable '" + var + "'");
    }
    Poly r(vars_);
    for (const auto& [e, c] : terms_) {
        int k = e[static_cast<size_t>(idx)];
        if (k == 0) continue;
        Exponents d = e;
        d[static_cast<size_t>(idx)] = k - 1;
        r.add_term(d, Scalar(long(k)) * c);
    }
    return r;
}

Scalar Poly::eval(const std::vector<Scalar>& point) const {
    if (point.size() != vars_.size()) {
        throw std::invalid_argument("evaluation point dimension mismatch");
    }
    Scalar acc(0);
    for (const auto& [e, c] : terms_) {
        Scalar term = c;
        for (size_t i = 0; i < e.size(); ++i) {
            for (int k = 0; k < e[i]; ++k) term *= point[i];
        }
        acc += term;
    }
    return acc;
}

Poly Poly::substitute(const std::map<std::string, Poly>& images,
                      const std::vector<std::string>& out_vars) const {
    std::vector<Poly> image_of(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) {
        auto it = images.find(vars_[i]);
        if (it != images.end()) {
            image_of[i] = it->second.vars() == out_vars ? it->second : it->second.in_vars(out_vars);
        } else {
            image_of[i] = Poly::variable(out_vars, vars_[i]);
        }
    }
    Poly r(out_vars);
    for (const auto& [e, c] : terms_) {
        Poly term = Poly::constant(out_vars, c);
        for (size_t i = 0; i < e.size(); ++i) {
            for (int k = 0; k < e[i]; ++k) term = term * image_of[i];
        }
        r += term;
    }
    return r;
}

Poly Poly::in_vars(std::vector<std::string> new_vars) const {
    Poly r(std::move(new_vars));
    std::vector<int> where(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) where[i] = r.var_index(vars_[i]);
    for (const auto& [e, c] : terms_) {
        Exponents out(r.vars_.size(), 0);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (where[i] < 0) {
                throw std::invalid_argument("variable '" + vars_[i] +
                                            "' missing from target variable list");
            }
            out[static_cast<size_t>(where[i])] = e[i];
        }
        r.add_term(out, c);
    }
    return r;
}

namespace {

// --- canonical printing ------------------------------------------------

// Renders one term without any leading sign adjustment; callers split the
// sign off purely-real/imaginary coefficients for "a - b" style joining.
std::string term_string(const std::vector<std::string>& vars, const Exponents& e,
                        const Scalar& c) {
    std::string mono;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += vars[i];
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) return c.str();
    if (c.is_one()) return mono;
    if (c == Scalar(-1)) return "-" + mono;
    return c.str() + "*" + mono;
}

// --- parsing ------------------------------------------------------------

struct Lexer {
    std::string text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) {
            throw std::invalid_argument(std::string("expected '") + c + "' at position " +
                                        std::to_string(pos) + " in polynomial text");
        }
    }
    std::string number() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) {
            ++pos;
        }
        return text.substr(start, pos - start);
    }
    std::string name() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                     text[pos] == '_')) {
            ++pos;
        }
        return text.substr(start, pos - start);
    }
};

class PolyParser {
public:
    PolyParser(const std::string& text, std::vector<std::string> vars)
        : lex_{text, 0}, vars_(std::move(vars)) {}

    Poly parse() {
        Poly p = sum();
        if (!lex_.eof()) {
            throw std::invalid_argument("trailing characters in polynomial text at position " +
                                        std::to_string(lex_.pos));
        }
        return p;
    }

private:
    Poly sum() {
        Poly acc(vars_);
        bool negative = false;
        if (lex_.accept('-')) negative = true;
        else lex_.accept('+');
        acc += signed_product(negative);
        while (!lex_.eof()) {
            char c = lex_.peek();
            if (c == '+') {
                lex_.expect('+');
                acc += signed_product(false);
            } else if (c == '-') {
                lex_.expect('-');
                acc += signed_product(true);
            } else {
                break;
            }
        }
        return acc;
    }

    Poly signed_product(bool negative) {
        Poly p = product();
        return negative ? -p : p;
    }

    Poly product() {
        Poly acc = factor();
        while (lex_.peek() == '*') {
            lex_.expect('*');
            acc = acc * factor();
        }
        return acc;
    }

    Poly factor() {
        char c = lex_.peek();
        if (c == '(') {
            lex_.expect('(');
            Poly inner = sum();
            lex_.expect(')');
            return maybe_power(inner);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpq_class q = rational_from_string(lex_.number());
            // "2i" / "3/4i": an adjacent 'i' binds to the number
            if (lex_.pos < lex_.text.size() && lex_.text[lex_.pos] == 'i' &&
                !is_name_char_after(lex_.pos + 1)) {
                ++lex_.pos;
                return Poly::constant(vars_, Scalar(mpq_class(0), q));
            }
            return maybe_power(Poly::constant(vars_, Scalar(q)));
        }
        std::string n = lex_.name();
        if (n.empty()) {
            throw std::invalid_argument("unexpected character in polynomial text at position " +
                                        std::to_string(lex_.pos));
        }
        if (n == "i") return Poly::constant(vars_, Scalar::i());
        return maybe_power(Poly::variable(vars_, n));
    }

    bool is_name_char_after(size_t p) {
        return p < lex_.text.size() && (std::isalnum(static_cast<unsigned char>(lex_.text[p])) ||
                                        lex_.text[p] == '_');
    }

    Poly maybe_power(Poly base) {
        if (lex_.peek() == '^') {
            lex_.expect('^');
            std::string n = lex_.number();
            if (n.empty() || n.find('/') != std::string::npos) {
                throw std::invalid_argument("exponent must be a nonnegative integer");
            }
            return base.pow(static_cast<unsigned>(std::stoul(n)));
        }
        return base;
    }

    Lexer lex_;
    std::vector<std::string> vars_;
};

}  // namespace

Poly Poly::parse(const std::string& text, std::vector<std::string> vars) {
    return PolyParser(text, std::move(vars)).parse();
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string t = term_string(vars_, e, c);
        if (first) {
            out = t;
            first = false;
        } else if (!t.empty() && t[0] == '-') {
            out += " - " + t.substr(1);
        } else {
            out += " + " + t;
        }
    }
    return out;
}

nlohmann::json Poly::to_json() const {
    nlohmann::json j;
    j["vars"] = vars_;
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : terms_) {
        terms.push_back({{"exp", e},
                         {"re", rational_to_string(c.re)},
                         {"im", rational_to_string(c.im)}});
    }
    j["terms"] = std::move(terms);
    return j;
}

Poly Poly::from_json(const nlohmann::json& j) {
    Poly p(j.at("vars").get<std::vector<std::string>>());
    for (const auto& t : j.at("terms")) {
        Exponents e = t.at("exp").get<Exponents>();
        Scalar c(rational_from_string(t.at("re").get<std::string>()),
                 rational_from_string(t.at("im").get<std::string>()));
        p.add_term(e, c);
    }
    return p;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
    return os << p.str();
}

}  // namespace stratquant
