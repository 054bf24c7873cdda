#include "stratquant/prequantum.hpp"

#include <stdexcept>

namespace stratquant {

PresentedPoissonAlgebra flat_phase_space(int n) {
    if (n < 1) throw std::invalid_argument("flat_phase_space needs n >= 1");
    std::vector<std::string> gens;
    for (int i = 1; i <= n; ++i) gens.push_back("q" + std::to_string(i));
    for (int i = 1; i <= n; ++i) gens.push_back("p" + std::to_string(i));
    std::map<std::pair<std::string, std::string>, Poly> table;
    for (int i = 1; i <= n; ++i) {
        table[{"q" + std::to_string(i), "p" + std::to_string(i)}] =
            Poly::constant(gens, Scalar(1));
    }
    return PresentedPoissonAlgebra(gens, std::move(table), RewriteSystem(gens));
}

PrequantumModule::PrequantumModule(int n, int eps, bool stripped)
    : n_(n), eps_(eps), stripped_(stripped), lr_(flat_phase_space(n)) {
    const auto& gens = algebra().generators();
    // theta = sum p_i dq_i, so theta(X_u) = sum_i p_i {u, q_i}:
    // zero on X_{q_j}, and -p_j on X_{p_j}.
    for (int i = 1; i <= n_; ++i) {
        theta_["q" + std::to_string(i)] = Poly(gens);
        theta_["p" + std::to_string(i)] = -Poly::variable(gens, "p" + std::to_string(i));
    }
}

PrequantumModule PrequantumModule::flat(int n) {
    PrequantumModule plus(n, +1, false);
    PrequantumModule minus(n, -1, false);
    bool plus_ok = plus.representation_property_holds();
    bool minus_ok = minus.representation_property_holds();
    if (plus_ok == minus_ok) {
        throw std::logic_error("prequantum sign selection failed to single out one sign");
    }
    return plus_ok ? plus : minus;
}

PrequantumModule PrequantumModule::flat_without_theta(int n) {
    return PrequantumModule(n, +1, true);
}

Poly PrequantumModule::chi(const ExtElement& e, const Poly& x) const {
    const auto& gens = algebra().generators();
    Scalar I = Scalar::i();
    Poly out = I * (e.scalar_part * x);
    for (const auto& [g, c] : e.diff_part.coeffs) {
        out += c * algebra().bracket(Poly::variable(gens, g), x);
        if (!stripped_) {
            out += (I * Scalar(long(eps_))) * (c * (theta_.at(g) * x));
        }
    }
    return algebra().reduce(out);
}

Poly PrequantumModule::prequantize(const Poly& a, const Poly& x) const {
    ExtElement hamiltonian{Poly(algebra().generators()), lr_.d(a)};
    Poly out = (-Scalar::i()) * chi(hamiltonian, x);
    out += a * x;
    return algebra().reduce(out);
}

Poly PrequantumModule::dirac_residual(const Poly& a, const Poly& b, const Poly& probe) const {
    Poly lhs = prequantize(algebra().bracket(a, b), probe);
    Poly comm = prequantize(a, prequantize(b, probe));
    comm -= prequantize(b, prequantize(a, probe));
    return algebra().reduce(lhs - Scalar::i() * comm);
}

bool PrequantumModule::representation_property_holds() const {
    const auto& gens = algebra().generators();
    std::vector<ExtElement> generating;
    Poly one = Poly::constant(gens, Scalar(1));
    Poly zero(gens);
    // pairs (a, du) spanning enough of the extension to pin the sign
    std::vector<Poly> coeffs = {one, Poly::variable(gens, "q1"), Poly::variable(gens, "p1")};
    for (const std::string& g : gens) {
        for (const Poly& a : coeffs) {
            generating.push_back(
                lr_.make_ext(zero, lr_.scale(a, lr_.d(Poly::variable(gens, g)))));
        }
    }
    generating.push_back(lr_.make_ext(one, lr_.zero_diff()));
    generating.push_back(lr_.make_ext(Poly::variable(gens, "q1"), lr_.zero_diff()));

    std::vector<Poly> probes = {one, Poly::variable(gens, "q1"), Poly::variable(gens, "p1"),
                                Poly::variable(gens, "q1") * Poly::variable(gens, "p1")};
    for (const ExtElement& alpha : generating) {
        for (const ExtElement& beta : generating) {
            ExtElement br = lr_.ext_bracket(alpha, beta);
            for (const Poly& x : probes) {
                Poly lhs = chi(br, x);
                Poly rhs = chi(alpha, chi(beta, x)) - chi(beta, chi(alpha, x));
                if (algebra().reduce(lhs - rhs) != Poly(gens)) return false;
            }
        }
    }
    return true;
}

}  // namespace stratquant
