#ifndef STRATQUANT_POLY_HPP
#define STRATQUANT_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "stratquant/rational.hpp"

#include "json.hpp"

namespace stratquant {

using Exponents = std::vector<int>;

/// Graded lexicographic order, descending: higher total degree first, ties
/// broken lexicographically on the exponent vector. Used as the map
/// comparator so iteration starts at the leading term.
struct GradedLexDesc {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// true iff a > b in graded lex.
bool grlex_greater(const Exponents& a, const Exponents& b);
/// componentwise a >= b (monomial divisibility of x^a by x^b).
bool divides(const Exponents& divisor, const Exponents& dividend);

/// Multivariate polynomial over Gaussian rationals with a fixed, ordered
/// variable list. Zero coefficients are never stored, so equality is
/// structural. Arithmetic between polynomials requires identical variable
/// lists; use in_vars() to realign first.
class Poly {
public:
    using TermMap = std::map<Exponents, Scalar, GradedLexDesc>;

    Poly() = default;
    explicit Poly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static Poly constant(std::vector<std::string> vars, Scalar c);
    static Poly variable(std::vector<std::string> vars, const std::string& name);
    /// Parse the canonical text form, e.g. "2*x^2*y - 1/2*r + (1+2i)".
    /// The name "i" is reserved for the imaginary unit.
    static Poly parse(const std::string& text, std::vector<std::string> vars);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (zero if absent).
    Scalar constant_term() const;
    /// Total degree; -1 for the zero polynomial.
    int total_degree() const;
    Scalar coeff(const Exponents& exp) const;
    int var_index(const std::string& name) const;  // -1 if absent

    void add_term(const Exponents& exp, const Scalar& c);

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Scalar& c, Poly p);
    Poly pow(unsigned n) const;

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Formal partial derivative; throws if the variable is unknown.
    Poly derivative(const std::string& var) const;
    /// Evaluate at a point, one Scalar per variable.
    Scalar eval(const std::vector<Scalar>& point) const;
    /// Substitute variables by polynomials. Every image must share one
    /// variable list; variables missing from the map are substituted by
    /// themselves and must exist in the image variable list.
    Poly substitute(const std::map<std::string, Poly>& images,
                    const std::vector<std::string>& out_vars) const;
    /// Re-express in another variable list (throws if a used variable is
    /// missing from the new list).
    Poly in_vars(std::vector<std::string> new_vars) const;

    /// Canonical text form, terms in descending graded-lex order.
    std::string str() const;
    /// JSON form {vars:[...], terms:[{exp:[...], re:"p/q", im:"p/q"}]}.
    nlohmann::json to_json() const;
    static Poly from_json(const nlohmann::json& j);

private:
    void check_same_vars(const Poly& o) const;

    std::vector<std::string> vars_;
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace stratquant

#endif
