// Python bindings for the main operations. Exact values cross the boundary
// as strings ("p/q" rationals, canonical polynomial text) or native ints so
// nothing is ever rounded.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "stratquant/checks.hpp"
#include "stratquant/fock.hpp"
#include "stratquant/lierinehart.hpp"
#include "stratquant/prequantum.hpp"
#include "stratquant/reduction.hpp"
#include "stratquant/repcount.hpp"
#include "stratquant/rewrite.hpp"
#include "stratquant/rng.hpp"

namespace py = pybind11;
using namespace stratquant;

namespace {

PresentedPoissonAlgebra algebra_by_name(const std::string& name) {
    if (name == "semicone") return builtin_semicone();
    if (name == "adjoint_quotient" || name == "adjoint") return builtin_adjoint_quotient();
    throw std::invalid_argument("unknown algebra '" + name +
                                "' (expected 'semicone' or 'adjoint_quotient')");
}

Scalar scalar_from(const std::string& re, const std::string& im) {
    return Scalar(rational_from_string(re), rational_from_string(im));
}

PhasePoint point_from(const std::vector<std::vector<std::string>>& q,
                      const std::vector<std::vector<std::string>>& p) {
    if (q.empty() || q.size() != p.size()) {
        throw std::invalid_argument("q and p must be nonempty and the same shape");
    }
    PhasePoint pt(int(q.front().size()), int(q.size()));
    for (size_t j = 0; j < q.size(); ++j) {
        if (q[j].size() != size_t(pt.s) || p[j].size() != size_t(pt.s)) {
            throw std::invalid_argument("ragged q/p vectors");
        }
        for (size_t a = 0; a < q[j].size(); ++a) {
            pt.q[j][a] = rational_from_string(q[j][a]);
            pt.p[j][a] = rational_from_string(p[j][a]);
        }
    }
    return pt;
}

std::vector<std::vector<std::string>> matrix_re_strings(const Matrix& m) {
    std::vector<std::vector<std::string>> out(size_t(m.rows()));
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
            out[size_t(r)].push_back(rational_to_string(m(r, c).re));
        }
    }
    return out;
}

py::list matrix_complex_strings(const Matrix& m) {
    py::list rows;
    for (int r = 0; r < m.rows(); ++r) {
        py::list row;
        for (int c = 0; c < m.cols(); ++c) {
            row.append(py::make_tuple(rational_to_string(m(r, c).re),
                                      rational_to_string(m(r, c).im)));
        }
        rows.append(std::move(row));
    }
    return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact-arithmetic toolkit for singular symplectic reduction and "
              "costratified Fock-space quantization.";

    m.def(
        "normal_form",
        [](const std::string& poly, const std::vector<std::string>& relations,
           const std::vector<std::string>& vars) {
            std::vector<Poly> rels;
            for (const auto& r : relations) rels.push_back(Poly::parse(r, vars));
            RewriteSystem rules = RewriteSystem::from_relations(vars, rels);
            return rules.normal_form(Poly::parse(poly, vars)).str();
        },
        py::arg("poly"), py::arg("relations"), py::arg("vars"),
        "Rewrite-irreducible representative of a polynomial modulo oriented "
        "relations.");

    m.def(
        "bracket",
        [](const std::string& algebra, const std::string& f, const std::string& g) {
            auto a = algebra_by_name(algebra);
            return a.bracket(a.parse(f), a.parse(g)).str();
        },
        py::arg("algebra"), py::arg("f"), py::arg("g"),
        "Poisson bracket in a built-in presented algebra.");

    m.def(
        "jacobiator",
        [](const std::string& algebra, const std::string& f, const std::string& g,
           const std::string& h) {
            auto a = algebra_by_name(algebra);
            return a.jacobiator(a.parse(f), a.parse(g), a.parse(h)).str();
        },
        py::arg("algebra"), py::arg("f"), py::arg("g"), py::arg("h"));

    m.def(
        "poisson_ideal_ok",
        [](const std::string& algebra) {
            auto verdict = algebra_by_name(algebra).poisson_ideal_verdict();
            return py::make_tuple(verdict.pass,
                                  verdict.pass ? std::string() : verdict.witness.str());
        },
        py::arg("algebra"),
        "Poisson-ideal verdict: (passed, witness polynomial when failing).");

    m.def(
        "mu_o",
        [](const std::vector<std::vector<std::string>>& q,
           const std::vector<std::vector<std::string>>& p) {
            return matrix_re_strings(mu_O(point_from(q, p)));
        },
        py::arg("q"), py::arg("p"), "Exact angular momentum matrix.");

    m.def(
        "mu_sp",
        [](const std::vector<std::vector<std::string>>& q,
           const std::vector<std::vector<std::string>>& p) {
            return matrix_re_strings(mu_Sp(point_from(q, p)));
        },
        py::arg("q"), py::arg("p"), "Exact sp(l,R) momentum matrix.");

    m.def(
        "orbit_image",
        [](const std::vector<std::vector<std::string>>& q,
           const std::vector<std::vector<std::string>>& p) {
            SymMatrixC w = orbit_image(point_from(q, p));
            int rank = exact_rank(w.entries);
            py::dict out;
            out["W"] = matrix_complex_strings(w.entries);
            out["rank"] = rank;
            return out;
        },
        py::arg("q"), py::arg("p"),
        "Complex symmetric image W_jk = z_j . z_k of a zero-level point, with "
        "its exact rank.");

    m.def(
        "adjoint_point",
        [](const std::string& z_re, const std::string& z_im) {
            AdjointPoint pt = adjoint_point(scalar_from(z_re, z_im));
            py::dict out;
            out["X"] = pt.X.str();
            out["Y"] = pt.Y.str();
            out["tau"] = pt.tau.str();
            out["residual"] = pt.relation_residual().str();
            return out;
        },
        py::arg("z_re"), py::arg("z_im") = "0",
        "Exact (X, Y, tau) coordinates on the SL(2,C) adjoint quotient.");

    m.def(
        "steinberg",
        [](const std::vector<std::pair<std::string, std::string>>& zs) {
            std::vector<Scalar> inputs;
            for (const auto& [re, im] : zs) inputs.push_back(scalar_from(re, im));
            std::vector<std::pair<std::string, std::string>> out;
            for (const Scalar& s : steinberg_general(inputs)) {
                out.emplace_back(rational_to_string(s.re), rational_to_string(s.im));
            }
            return out;
        },
        py::arg("zs"),
        "Elementary symmetric functions of torus coordinates with product 1.");

    m.def("enumerate_monomials", [](int s, int k) {
        std::vector<std::vector<int>> out;
        for (const auto& mono : enumerate_monomials(s, k)) out.push_back(mono.exponents);
        return out;
    });
    m.def("weyl_dim", [](const std::vector<int>& lam, int ell) {
        return weyl_dim(lam, ell).get_si();
    });
    m.def("section_dim",
          [](int s, int ell, int k) { return section_dim(s, ell, k).get_si(); });
    m.def(
        "oracle_dim",
        [](int s, int ell, int k, uint64_t seed) {
            return oracle_dim(s, ell, k, seed).get_si();
        },
        py::arg("s"), py::arg("ell"), py::arg("k"), py::arg("seed") = kDefaultSeed);
    m.def("kernel_dim",
          [](int s, int ell, int k) { return kernel_dim(s, ell, k).get_si(); });

    m.def(
        "bargmann_inner",
        [](const std::string& f, const std::string& g,
           const std::vector<std::string>& vars) {
            Scalar v = bargmann_inner(Poly::parse(f, vars), Poly::parse(g, vars));
            return py::make_tuple(rational_to_string(v.re), rational_to_string(v.im));
        },
        py::arg("f"), py::arg("g"), py::arg("vars"),
        "Exact Bargmann inner product of holomorphic polynomials.");

    m.def(
        "invariant_basis",
        [](int s, int ell, int k) {
            InvariantBasis basis = invariant_basis(s, ell, k);
            py::dict out;
            out["dim"] = basis.dim();
            py::list wreps, elements;
            for (const Poly& w : basis.w_representation) wreps.append(w.str());
            for (const Poly& e : basis.elements) elements.append(e.str());
            out["w_monomials"] = std::move(wreps);
            out["elements"] = std::move(elements);
            return out;
        },
        py::arg("s"), py::arg("ell"), py::arg("k"));

    m.def(
        "gram",
        [](int s, int ell, int k) {
            InvariantBasis basis = invariant_basis(s, ell, k);
            Matrix g = gram(basis);
            py::dict out;
            out["gram"] = matrix_re_strings(g);
            out["positive_definite"] = positive_definite(g);
            return out;
        },
        py::arg("s"), py::arg("ell"), py::arg("k"),
        "Exact Gram matrix of the invariant basis under the Bargmann product.");

    m.def(
        "euler_apply",
        [](const std::string& f, int s, int ell) {
            return euler_operator(Poly::parse(f, z_vars(s, ell)), s, ell).str();
        },
        py::arg("f"), py::arg("s"), py::arg("ell"),
        "Apply the quantized oscillator energy (Euler operator).");

    m.def(
        "costratified_restrict",
        [](const std::string& w_poly, int s, int s_prime, int ell) {
            return costratified_restrict(Poly::parse(w_poly, w_vars(ell)), s, s_prime, ell)
                .str();
        },
        py::arg("w_poly"), py::arg("s"), py::arg("s_prime"), py::arg("ell"));

    m.def(
        "dirac_max_residual",
        [](int n, int max_degree, bool strip_theta) {
            PrequantumModule module = strip_theta ? PrequantumModule::flat_without_theta(n)
                                                  : PrequantumModule::flat(n);
            const auto& gens = module.algebra().generators();
            Poly q = Poly::variable(gens, "q1");
            Poly p = Poly::variable(gens, "p1");
            std::string worst = "0";
            for (int dq = 0; dq <= max_degree; ++dq) {
                for (int dp = 0; dq + dp <= max_degree; ++dp) {
                    Poly a = q.pow(unsigned(dq)) * p.pow(unsigned(dp));
                    Poly residual =
                        module.dirac_residual(a, q * p, Poly::constant(gens, Scalar(1)));
                    if (!residual.is_zero()) worst = residual.str();
                }
            }
            return worst;
        },
        py::arg("n") = 1, py::arg("max_degree") = 3, py::arg("strip_theta") = false,
        "Worst Dirac residual over a monomial sweep ('0' when the condition "
        "holds).");

    m.def(
        "run_checks",
        [](const std::string& suite, uint64_t seed) {
            CheckOptions opt;
            opt.seed = seed;
            auto reports = run_checks(suite, opt);
            if (!reports) throw std::invalid_argument("unknown suite '" + suite + "'");
            py::list out;
            for (const auto& r : *reports) {
                for (const auto& p : r.properties) {
                    py::dict row;
                    row["suite"] = r.suite;
                    row["property"] = p.name;
                    row["passed"] = p.passed;
                    row["instances"] = p.instances;
                    row["counterexample"] = p.counterexample;
                    out.append(std::move(row));
                }
            }
            return out;
        },
        py::arg("suite") = "all", py::arg("seed") = kDefaultSeed,
        "Run a property suite and return one record per property.");

    m.attr("DEFAULT_SEED") = kDefaultSeed;
    m.attr("__version__") = "0.1.0";
}
