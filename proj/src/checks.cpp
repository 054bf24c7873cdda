#include "stratquant/checks.hpp"

#include <sstream>

#include "stratquant/fock.hpp"
#include "stratquant/liepoisson.hpp"
#include "stratquant/lierinehart.hpp"
#include "stratquant/prequantum.hpp"
#include "stratquant/reduction.hpp"
#include "stratquant/repcount.hpp"

namespace stratquant {

namespace {

Poly random_poly(SplitMix64& rng, const std::vector<std::string>& vars, int max_degree,
                 int terms, bool complex_coeffs = false) {
    Poly p(vars);
    for (int t = 0; t < terms; ++t) {
        Exponents e(vars.size(), 0);
        int degree = static_cast<int>(rng.below(uint64_t(max_degree) + 1));
        for (int d = 0; d < degree; ++d) {
            e[size_t(rng.below(vars.size()))] += 1;
        }
        Scalar c = complex_coeffs ? rng.gaussian_rational(5, 3) : Scalar(rng.rational(5, 3));
        p.add_term(e, c);
    }
    return p;
}

struct PropertyRunner {
    SuiteReport report;

    void record(const std::string& name, bool passed, long instances,
                const std::string& counterexample = "") {
        report.properties.push_back({name, passed, instances, passed ? "" : counterexample});
    }
};

std::string poly_pair(const Poly& f, const Poly& g) {
    return "f = " + f.str() + ", g = " + g.str();
}

// ---------------------------------------------------------------- poisson

void bracket_antisymmetry_leibniz(PropertyRunner& run, const PresentedPoissonAlgebra& algebra,
                                  uint64_t seed) {
    SplitMix64 rng(seed);
    const auto& gens = algebra.generators();
    long count = 500;
    for (long n = 0; n < count; ++n) {
        Poly f = random_poly(rng, gens, 3, 3);
        Poly g = random_poly(rng, gens, 3, 3);
        Poly h = random_poly(rng, gens, 2, 2);
        Poly anti = algebra.reduce(algebra.bracket(f, g) + algebra.bracket(g, f));
        if (!anti.is_zero()) {
            run.record(algebra.name() + ".bracket.antisymmetry", false, n + 1, poly_pair(f, g));
            run.record(algebra.name() + ".bracket.leibniz", false, 0, "skipped");
            return;
        }
        Poly leibniz = algebra.bracket(f, g * h) - g * algebra.bracket(f, h) -
                       h * algebra.bracket(f, g);
        if (!algebra.reduce(leibniz).is_zero()) {
            run.record(algebra.name() + ".bracket.antisymmetry", true, n + 1);
            run.record(algebra.name() + ".bracket.leibniz", false, n + 1,
                       poly_pair(f, g) + ", h = " + h.str());
            return;
        }
    }
    run.record(algebra.name() + ".bracket.antisymmetry", true, count);
    run.record(algebra.name() + ".bracket.leibniz", true, count);
}

void generator_jacobi(PropertyRunner& run, const std::string& label,
                      const PresentedPoissonAlgebra& algebra) {
    const auto& gens = algebra.generators();
    long instances = 0;
    for (size_t i = 0; i < gens.size(); ++i) {
        for (size_t j = i + 1; j < gens.size(); ++j) {
            for (size_t k = j + 1; k < gens.size(); ++k) {
                Poly jac = algebra.jacobiator(Poly::variable(gens, gens[i]),
                                              Poly::variable(gens, gens[j]),
                                              Poly::variable(gens, gens[k]));
                ++instances;
                if (!jac.is_zero()) {
                    run.record(label, false, instances,
                               "(" + gens[i] + ", " + gens[j] + ", " + gens[k] +
                                   ") -> " + jac.str());
                    return;
                }
            }
        }
    }
    run.record(label, true, instances);
}

void poisson_ideal_properties(PropertyRunner& run, const PresentedPoissonAlgebra& algebra,
                              uint64_t seed) {
    auto verdict = algebra.poisson_ideal_verdict();
    run.record(algebra.name() + ".poisson_ideal", verdict.pass, long(algebra.generators().size()),
               verdict.pass ? "" : "witness {" + verdict.generator + ", R} = " +
                                       verdict.witness.str());
    if (algebra.relations().empty()) return;

    SplitMix64 rng(seed);
    const auto& gens = algebra.generators();
    long trials = 20;
    for (long n = 0; n < trials; ++n) {
        size_t i = size_t(rng.below(gens.size()));
        size_t j = size_t(rng.below(gens.size() - 1));
        if (j >= i) ++j;
        Scalar c(rng.range(1, 9) * (rng.below(2) ? 1 : -1));
        Poly perturbed = algebra.generator_bracket(gens[i], gens[j]) +
                         Poly::constant(gens, c);
        auto mutant = algebra.with_table_entry(gens[i], gens[j], perturbed);
        auto v = mutant.poisson_ideal_verdict();
        if (v.pass || v.witness.is_zero()) {
            run.record(algebra.name() + ".poisson_ideal.perturbations_fail", false, n + 1,
                       "perturbing {" + gens[i] + ", " + gens[j] + "} by " + c.str() +
                           " kept the ideal");
            return;
        }
    }
    run.record(algebra.name() + ".poisson_ideal.perturbations_fail", true, trials);
}

void lie_poisson_linear(PropertyRunner& run) {
    for (int ell = 1; ell <= 3; ++ell) {
        LiePoissonSpace space(ell);
        const auto& basis = space.basis();
        long instances = 0;
        for (int i = 0; i < basis.dim(); ++i) {
            for (int j = 0; j < basis.dim(); ++j) {
                Matrix com = basis.mats[i] * basis.mats[j] - basis.mats[j] * basis.mats[i];
                Poly expected = space.linear_function(com);
                Poly actual = space.bracket(space.coordinate(i), space.coordinate(j));
                ++instances;
                if (actual != expected) {
                    run.record("sp" + std::to_string(ell) + ".lie_poisson.linear_commutator",
                               false, instances,
                               basis.names[i] + ", " + basis.names[j]);
                    return;
                }
            }
        }
        run.record("sp" + std::to_string(ell) + ".lie_poisson.linear_commutator", true,
                   instances);
    }
}

}  // namespace

SuiteReport check_poisson(const CheckOptions& opt) {
    PropertyRunner run;
    run.report.suite = "poisson";
    PresentedPoissonAlgebra semicone = opt.semicone ? *opt.semicone : builtin_semicone();
    PresentedPoissonAlgebra adjoint =
        opt.adjoint_quotient ? *opt.adjoint_quotient : builtin_adjoint_quotient();

    bracket_antisymmetry_leibniz(run, semicone, opt.seed + 11);
    bracket_antisymmetry_leibniz(run, adjoint, opt.seed + 12);
    generator_jacobi(run, "semicone.jacobi.generators", semicone);
    generator_jacobi(run, "adjoint_quotient.jacobi.generators", adjoint);
    for (int ell = 1; ell <= 3; ++ell) {
        generator_jacobi(run, "sp" + std::to_string(ell) + ".jacobi.generators",
                         LiePoissonSpace(ell).algebra());
    }
    poisson_ideal_properties(run, semicone, opt.seed + 21);
    poisson_ideal_properties(run, adjoint, opt.seed + 22);
    lie_poisson_linear(run);
    return run.report;
}

// ------------------------------------------------------------ lierinehart

namespace {

DiffElement random_diff(SplitMix64& rng, const LieRinehart& lr, int max_degree, int terms) {
    const auto& gens = lr.algebra().generators();
    std::map<std::string, Poly> coeffs;
    for (const std::string& g : gens) {
        if (rng.below(3) == 0) continue;  // leave some coefficients empty
        coeffs[g] = random_poly(rng, gens, max_degree, terms);
    }
    return lr.make_diff(std::move(coeffs));
}

void lr_axioms(PropertyRunner& run, const std::string& label, const LieRinehart& lr,
               long count, uint64_t seed) {
    SplitMix64 rng(seed);
    const auto& gens = lr.algebra().generators();
    for (long n = 0; n < count; ++n) {
        DiffElement alpha = random_diff(rng, lr, 2, 2);
        DiffElement beta = random_diff(rng, lr, 2, 2);
        Poly a = random_poly(rng, gens, 2, 2);
        Poly b = random_poly(rng, gens, 2, 2);
        // [alpha, a beta] = pi#(alpha)(a) beta + a [alpha, beta]
        DiffElement lhs = lr.lr_bracket(alpha, lr.scale(a, beta));
        DiffElement rhs = lr.add(lr.scale(lr.pi_sharp(alpha, a), beta),
                                 lr.scale(a, lr.lr_bracket(alpha, beta)));
        if (lhs != rhs) {
            run.record(label + ".leibniz_module", false, n + 1,
                       "alpha = " + alpha.str() + ", a = " + a.str());
            run.record(label + ".anchor_linear", false, 0, "skipped");
            return;
        }
        // (a alpha)(b) = a (alpha(b))
        Poly lhs2 = lr.pi_sharp(lr.scale(a, alpha), b);
        Poly rhs2 = lr.algebra().reduce(a * lr.pi_sharp(alpha, b));
        if (lhs2 != rhs2) {
            run.record(label + ".leibniz_module", true, n + 1);
            run.record(label + ".anchor_linear", false, n + 1,
                       "alpha = " + alpha.str() + ", a = " + a.str() + ", b = " + b.str());
            return;
        }
    }
    run.record(label + ".leibniz_module", true, count);
    run.record(label + ".anchor_linear", true, count);
}

void ext_jacobi(PropertyRunner& run, const std::string& label, const LieRinehart& lr,
                long count, uint64_t seed) {
    SplitMix64 rng(seed);
    const auto& gens = lr.algebra().generators();
    for (long n = 0; n < count; ++n) {
        // triples of generating pairs (a, du)
        auto generating_pair = [&] {
            Poly a = random_poly(rng, gens, 2, 2);
            Poly u = Poly::variable(gens, gens[size_t(rng.below(gens.size()))]);
            return lr.make_ext(a, lr.d(u * random_poly(rng, gens, 1, 1)));
        };
        ExtElement x = generating_pair();
        ExtElement y = generating_pair();
        ExtElement z = generating_pair();
        ExtElement jac = lr.ext_bracket(lr.ext_bracket(x, y), z);
        ExtElement jac2 = lr.ext_bracket(lr.ext_bracket(y, z), x);
        ExtElement jac3 = lr.ext_bracket(lr.ext_bracket(z, x), y);
        Poly scalar = lr.algebra().reduce(jac.scalar_part + jac2.scalar_part + jac3.scalar_part);
        DiffElement diff =
            lr.add(jac.diff_part, lr.add(jac2.diff_part, jac3.diff_part));
        if (!scalar.is_zero() || !diff.is_zero()) {
            run.record(label + ".ext_jacobi", false, n + 1,
                       "scalar = " + scalar.str() + ", diff = " + diff.str());
            return;
        }
    }
    run.record(label + ".ext_jacobi", true, count);
}

void d_relation_zero(PropertyRunner& run, const PresentedPoissonAlgebra& algebra) {
    LieRinehart lr(algebra);
    long instances = 0;
    for (const Poly& rel : algebra.relations().relation_polys()) {
        ++instances;
        DiffElement dr = lr.d(rel);
        if (!dr.is_zero()) {
            run.record(algebra.name() + ".d_relation_zero", false, instances, dr.str());
            return;
        }
    }
    run.record(algebra.name() + ".d_relation_zero", true, instances);
}

void chi_representation(PropertyRunner& run, int n, uint64_t seed) {
    PrequantumModule module = PrequantumModule::flat(n);
    const LieRinehart& lr = module.lie_rinehart();
    const auto& gens = module.algebra().generators();
    SplitMix64 rng(seed);
    long count = 60;
    for (long t = 0; t < count; ++t) {
        Poly a = random_poly(rng, gens, 1, 2);
        Poly b = random_poly(rng, gens, 1, 2);
        Poly u = Poly::variable(gens, gens[size_t(rng.below(gens.size()))]);
        Poly v = Poly::variable(gens, gens[size_t(rng.below(gens.size()))]);
        ExtElement alpha = lr.make_ext(a, lr.scale(random_poly(rng, gens, 1, 1), lr.d(u)));
        ExtElement beta = lr.make_ext(b, lr.scale(random_poly(rng, gens, 1, 1), lr.d(v)));
        Poly probe = random_poly(rng, gens, 3, 3, /*complex=*/true);
        Poly lhs = module.chi(lr.ext_bracket(alpha, beta), probe);
        Poly rhs = module.chi(alpha, module.chi(beta, probe)) -
                   module.chi(beta, module.chi(alpha, probe));
        if (module.algebra().reduce(lhs - rhs) != Poly(gens)) {
            run.record("flat" + std::to_string(2 * n) + ".chi_representation", false, t + 1,
                       "u = " + u.str() + ", v = " + v.str() + ", probe = " + probe.str());
            return;
        }
    }
    run.record("flat" + std::to_string(2 * n) + ".chi_representation", true, count);
}

std::vector<Poly> monomials_up_to_degree(const std::vector<std::string>& vars, int max_degree) {
    std::vector<Poly> out;
    Exponents e(vars.size(), 0);
    // graded enumeration by recursion over the variable positions
    auto rec = [&](auto&& self, size_t pos, int remaining) -> void {
        if (pos == vars.size() - 1) {
            for (int k = 0; k <= remaining; ++k) {
                e[pos] = k;
                Poly m(vars);
                m.add_term(e, Scalar(1));
                out.push_back(std::move(m));
            }
            e[pos] = 0;
            return;
        }
        for (int k = 0; k <= remaining; ++k) {
            e[pos] = k;
            self(self, pos + 1, remaining - k);
        }
        e[pos] = 0;
    };
    rec(rec, 0, max_degree);
    return out;
}

void dirac_suite(PropertyRunner& run, int n, int max_degree) {
    PrequantumModule module = PrequantumModule::flat(n);
    const auto& gens = module.algebra().generators();
    std::vector<Poly> monomials = monomials_up_to_degree(gens, max_degree);
    std::vector<Poly> probes = {Poly::constant(gens, Scalar(1))};
    for (const std::string& g : gens) probes.push_back(Poly::variable(gens, g));
    probes.push_back(Poly::variable(gens, "q1") * Poly::variable(gens, "p1"));

    long instances = 0;
    for (size_t i = 0; i < monomials.size(); ++i) {
        for (size_t j = i; j < monomials.size(); ++j) {
            for (const Poly& probe : probes) {
                Poly residual = module.dirac_residual(monomials[i], monomials[j], probe);
                ++instances;
                if (!residual.is_zero()) {
                    run.record("flat" + std::to_string(2 * n) + ".dirac_residual", false,
                               instances,
                               "a = " + monomials[i].str() + ", b = " + monomials[j].str() +
                                   ", probe = " + probe.str() + " -> " + residual.str());
                    return;
                }
            }
        }
    }
    run.record("flat" + std::to_string(2 * n) + ".dirac_residual", true, instances);
}

void dirac_mutant(PropertyRunner& run) {
    PrequantumModule stripped = PrequantumModule::flat_without_theta(1);
    const auto& gens = stripped.algebra().generators();
    Poly q = Poly::variable(gens, "q1");
    Poly p = Poly::variable(gens, "p1");
    Poly residual = stripped.dirac_residual(q, p, Poly::constant(gens, Scalar(1)));
    run.record("flat2.dirac_residual.sign_stripped_fails", !residual.is_zero(), 1,
               "stripped residual unexpectedly zero");
}

}  // namespace

SuiteReport check_lierinehart(const CheckOptions& opt) {
    PropertyRunner run;
    run.report.suite = "lierinehart";
    PresentedPoissonAlgebra semicone = opt.semicone ? *opt.semicone : builtin_semicone();
    PresentedPoissonAlgebra adjoint =
        opt.adjoint_quotient ? *opt.adjoint_quotient : builtin_adjoint_quotient();

    LieRinehart flat2(flat_phase_space(1));
    LieRinehart flat4(flat_phase_space(2));
    LieRinehart cone(semicone);

    lr_axioms(run, "flat2", flat2, 200, opt.seed + 31);
    lr_axioms(run, "flat4", flat4, 200, opt.seed + 32);
    lr_axioms(run, "semicone", cone, 200, opt.seed + 33);
    ext_jacobi(run, "flat2", flat2, 200, opt.seed + 34);
    ext_jacobi(run, "flat4", flat4, 200, opt.seed + 35);
    ext_jacobi(run, "semicone", cone, 200, opt.seed + 36);
    d_relation_zero(run, semicone);
    d_relation_zero(run, adjoint);
    chi_representation(run, 1, opt.seed + 37);
    chi_representation(run, 2, opt.seed + 38);
    dirac_suite(run, 1, 3);
    dirac_suite(run, 2, 3);
    dirac_mutant(run);
    return run.report;
}

// -------------------------------------------------------------- reduction

namespace {

Matrix random_signed_permutation(SplitMix64& rng, int s) {
    std::vector<int> perm(static_cast<size_t>(s), 0);
    for (int i = 0; i < s; ++i) perm[size_t(i)] = i;
    for (int i = s - 1; i > 0; --i) {
        std::swap(perm[size_t(i)], perm[rng.below(uint64_t(i) + 1)]);
    }
    Matrix g(s, s);
    for (int i = 0; i < s; ++i) {
        g(perm[size_t(i)], i) = Scalar(rng.below(2) ? 1 : -1);
    }
    return g;
}

PhasePoint random_point(SplitMix64& rng, int s, int ell) {
    PhasePoint pt(s, ell);
    for (int j = 0; j < ell; ++j) {
        for (int a = 0; a < s; ++a) {
            pt.q[j][a] = rng.rational(9, 9);
            pt.p[j][a] = rng.rational(9, 9);
        }
    }
    return pt;
}

PhasePoint transform(const Matrix& g, const PhasePoint& pt) {
    PhasePoint out(pt.s, pt.ell);
    for (int j = 0; j < pt.ell; ++j) {
        for (int a = 0; a < pt.s; ++a) {
            mpq_class accq(0), accp(0);
            for (int b = 0; b < pt.s; ++b) {
                if (g(a, b).is_zero()) continue;
                accq += g(a, b).re * pt.q[j][b];
                accp += g(a, b).re * pt.p[j][b];
            }
            out.q[j][a] = accq;
            out.p[j][a] = accp;
        }
    }
    return out;
}

void mu_o_equivariance(PropertyRunner& run, uint64_t seed) {
    SplitMix64 rng(seed);
    long count = 100;
    for (long n = 0; n < count; ++n) {
        int s = int(rng.range(2, 4));
        int ell = int(rng.range(1, 3));
        PhasePoint pt = random_point(rng, s, ell);
        Matrix g = random_signed_permutation(rng, s);
        Matrix lhs = mu_O(transform(g, pt));
        Matrix rhs = g * mu_O(pt) * g.transpose();
        if (lhs != rhs) {
            run.record("mu_o.equivariance", false, n + 1,
                       "s = " + std::to_string(s) + ", ell = " + std::to_string(ell));
            return;
        }
    }
    run.record("mu_o.equivariance", true, count);
}

Matrix random_combination(SplitMix64& rng, const LieBasis& basis) {
    Matrix acc = Matrix(basis.mats.front().rows(), basis.mats.front().cols());
    for (const Matrix& b : basis.mats) {
        Scalar c(rng.rational(5, 3));
        if (!c.is_zero()) acc = acc + c * b;
    }
    return acc;
}

void killing_identities(PropertyRunner& run, uint64_t seed) {
    SplitMix64 rng(seed);
    for (int s = 3; s <= 4; ++s) {
        LieBasis basis = so_basis(s);
        long count = 100;
        for (long n = 0; n < count; ++n) {
            Matrix a = random_combination(rng, basis);
            Matrix b = random_combination(rng, basis);
            Scalar lhs = Scalar(long(s - 2)) * (a.transpose() * b).trace();
            Scalar rhs = -basis.killing(a, b);
            if (lhs != rhs) {
                run.record("so" + std::to_string(s) + ".killing_identity", false, n + 1,
                           "trace identity failed");
                return;
            }
        }
        run.record("so" + std::to_string(s) + ".killing_identity", true, count);
    }
    for (int ell = 1; ell <= 3; ++ell) {
        LieBasis basis = sp_basis(ell);
        long count = 100;
        for (long n = 0; n < count; ++n) {
            Matrix a = random_combination(rng, basis);
            Matrix b = random_combination(rng, basis);
            Scalar lhs = basis.killing(a, b);
            Scalar rhs = Scalar(2L * (ell + 1)) * (a * b).trace();
            if (lhs != rhs) {
                run.record("sp" + std::to_string(ell) + ".killing_identity", false, n + 1,
                           "2(l+1)tr identity failed");
                return;
            }
        }
        run.record("sp" + std::to_string(ell) + ".killing_identity", true, count);
    }
}

void zero_level_geometry(PropertyRunner& run, uint64_t seed, int samples_per_cell) {
    for (int s = 1; s <= 3; ++s) {
        for (int ell = 1; ell <= 3; ++ell) {
            std::string cell = "s" + std::to_string(s) + "l" + std::to_string(ell);
            auto points = sample_zero_level(s, ell, samples_per_cell,
                                            seed + uint64_t(16 * s + ell));
            long full_rank = 0;
            for (const PhasePoint& pt : points) {
                if (!mu_O(pt).is_zero()) {
                    run.record("zero_level." + cell, false, long(points.size()),
                               "sampled point off the zero level");
                    return;
                }
                SymMatrixC w = orbit_image(pt);
                int rank = exact_rank(w.entries);
                int bound = std::min(s, ell);
                if (rank > bound) {
                    run.record("zero_level." + cell, false, long(points.size()),
                               "rank(W) exceeds min(s, ell)");
                    return;
                }
                if (rank == bound) ++full_rank;
                Matrix msp = mu_Sp(pt);
                if (!in_sp(msp, ell)) {
                    run.record("zero_level." + cell, false, long(points.size()),
                               "mu_Sp not in sp(l, R)");
                    return;
                }
                if (ell == 1) {
                    // semicone identity x^2 + y^2 = r^2 on the image point,
                    // with r = q.q + p.p >= 0
                    const Scalar& w11 = w.entries(0, 0);
                    mpq_class r(0);
                    for (int a = 0; a < s; ++a) {
                        r += pt.q[0][a] * pt.q[0][a] + pt.p[0][a] * pt.p[0][a];
                    }
                    if (sgn(r) < 0 || w11.norm() != r * r) {
                        run.record("zero_level." + cell, false, long(points.size()),
                                   "semicone identity x^2 + y^2 = r^2 failed");
                        return;
                    }
                    if (!msp.trace().is_zero() || !determinant(msp).is_zero()) {
                        run.record("zero_level." + cell, false, long(points.size()),
                                   "mu_Sp not nilpotent for ell = 1");
                        return;
                    }
                }
            }
            // generic maximal rank on at least 95% of the samples
            if (full_rank * 100 < long(points.size()) * 95) {
                run.record("zero_level." + cell, false, long(points.size()),
                           "maximal W rank on fewer than 95% of samples");
                return;
            }
            run.record("zero_level." + cell, true, long(points.size()));
        }
    }
}

void adjoint_samples(PropertyRunner& run, uint64_t seed, long count) {
    SplitMix64 rng(seed);
    for (long n = 0; n < count; ++n) {
        Scalar z = rng.nonzero_gaussian_rational(9, 9);
        AdjointPoint pt = adjoint_point(z);
        if (!pt.relation_residual().is_zero()) {
            run.record("adjoint.relation_residual", false, n + 1, "z = " + z.str());
            run.record("adjoint.weyl_symmetry", false, 0, "skipped");
            return;
        }
        AdjointPoint inv = adjoint_point(Scalar(1) / z);
        if (inv.X != pt.X || inv.Y != pt.Y || inv.tau != pt.tau) {
            run.record("adjoint.relation_residual", true, n + 1);
            run.record("adjoint.weyl_symmetry", false, n + 1, "z = " + z.str());
            return;
        }
    }
    run.record("adjoint.relation_residual", true, count);
    run.record("adjoint.weyl_symmetry", true, count);
}

void steinberg_properties(PropertyRunner& run, uint64_t seed) {
    SplitMix64 rng(seed);
    long count = 100;
    for (long n = 0; n < count; ++n) {
        Scalar z = rng.nonzero_gaussian_rational(9, 9);
        auto sigma = steinberg_general({z, Scalar(1) / z});
        AdjointPoint pt = adjoint_point(z);
        if (sigma.size() != 1 || sigma[0] != pt.X + Scalar::i() * pt.Y) {
            run.record("steinberg.matches_adjoint", false, n + 1, "z = " + z.str());
            return;
        }
    }
    run.record("steinberg.matches_adjoint", true, count);

    for (long n = 0; n < 50; ++n) {
        size_t len = size_t(rng.range(3, 4));
        std::vector<Scalar> zs;
        Scalar prod(1);
        for (size_t i = 0; i + 1 < len; ++i) {
            Scalar z = rng.nonzero_gaussian_rational(5, 3);
            zs.push_back(z);
            prod *= z;
        }
        zs.push_back(Scalar(1) / prod);
        auto sigma = steinberg_general(zs);
        // a couple of deterministic permutations
        std::vector<Scalar> rotated(zs.begin() + 1, zs.end());
        rotated.push_back(zs.front());
        std::vector<Scalar> swapped = zs;
        std::swap(swapped[0], swapped[1]);
        if (steinberg_general(rotated) != sigma || steinberg_general(swapped) != sigma) {
            run.record("steinberg.permutation_invariance", false, n + 1, "n = " +
                       std::to_string(len));
            return;
        }
    }
    run.record("steinberg.permutation_invariance", true, 50);
}

}  // namespace

SuiteReport check_reduction(const CheckOptions& opt) {
    PropertyRunner run;
    run.report.suite = "reduction";
    mu_o_equivariance(run, opt.seed + 41);
    killing_identities(run, opt.seed + 42);
    zero_level_geometry(run, opt.seed + 43, 1000);
    adjoint_samples(run, opt.seed + 44, 1000);
    steinberg_properties(run, opt.seed + 45);
    return run.report;
}

// ------------------------------------------------------------------- fock

namespace {

// Independent Gaussian-moment oracle: the radial integral obeys
// I_a = 2a * I_{a-1} with I_0 = 1 (integration by parts), the measure
// factorizes over coordinates, and distinct monomials are orthogonal by
// the angular integral. No factorials, no powers of two.
mpz_class radial_moment(int a) {
    mpz_class acc(1);
    for (int k = 1; k <= a; ++k) acc *= 2 * k;
    return acc;
}

Scalar bargmann_oracle(const Exponents& alpha, const Exponents& beta) {
    if (alpha != beta) return Scalar(0);
    mpz_class acc(1);
    for (int a : alpha) acc *= radial_moment(a);
    return Scalar(mpq_class(acc));
}

void bargmann_vs_oracle(PropertyRunner& run) {
    long instances = 0;
    for (int m = 1; m <= 3; ++m) {
        std::vector<std::string> vars;
        for (int i = 1; i <= m; ++i) vars.push_back("z" + std::to_string(i));
        std::vector<Poly> monomials = monomials_up_to_degree(vars, 4);
        for (const Poly& f : monomials) {
            for (const Poly& g : monomials) {
                Scalar closed = bargmann_inner(f, g);
                Scalar oracle = bargmann_oracle(f.terms().begin()->first,
                                                g.terms().begin()->first);
                ++instances;
                if (closed != oracle) {
                    run.record("bargmann.closed_form_vs_moment_oracle", false, instances,
                               "f = " + f.str() + ", g = " + g.str());
                    return;
                }
            }
        }
    }
    run.record("bargmann.closed_form_vs_moment_oracle", true, instances);
}

void bargmann_positivity(PropertyRunner& run, uint64_t seed) {
    SplitMix64 rng(seed);
    long count = 200;
    for (long n = 0; n < count; ++n) {
        int m = int(rng.range(1, 3));
        std::vector<std::string> vars;
        for (int i = 1; i <= m; ++i) vars.push_back("z" + std::to_string(i));
        Poly f = random_poly(rng, vars, 4, 4, /*complex=*/true);
        if (f.is_zero()) continue;
        Scalar norm2 = bargmann_inner(f, f);
        if (!norm2.is_real() || sgn(norm2.re) <= 0) {
            run.record("bargmann.positive_definite", false, n + 1, "f = " + f.str());
            return;
        }
    }
    run.record("bargmann.positive_definite", true, count);
}

void euler_self_adjoint(PropertyRunner& run, uint64_t seed) {
    SplitMix64 rng(seed);
    long count = 100;
    int s = 2, ell = 2;
    const auto vars = z_vars(s, ell);
    for (long n = 0; n < count; ++n) {
        Poly f = random_poly(rng, vars, 3, 3, /*complex=*/true);
        Poly g = random_poly(rng, vars, 3, 3, /*complex=*/true);
        Scalar lhs = bargmann_inner(euler_operator(f, s, ell), g);
        Scalar rhs = bargmann_inner(f, euler_operator(g, s, ell));
        if (lhs != rhs) {
            run.record("euler.self_adjoint", false, n + 1, poly_pair(f, g));
            return;
        }
    }
    run.record("euler.self_adjoint", true, count);
}

void invariant_basis_properties(PropertyRunner& run) {
    long dim_instances = 0;
    long invariance_instances = 0;
    for (int ell = 1; ell <= 3; ++ell) {
        for (int s = 1; s <= ell; ++s) {
            auto generators = orthogonal_generators(s);
            for (int k = 0; k <= 4; ++k) {
                InvariantBasis basis = invariant_basis(s, ell, k);
                ++dim_instances;
                if (mpz_class(basis.dim()) != section_dim(s, ell, k)) {
                    run.record("invariant_basis.dim_equals_section_dim", false, dim_instances,
                               "(s, l, k) = (" + std::to_string(s) + ", " +
                                   std::to_string(ell) + ", " + std::to_string(k) + ")");
                    run.record("invariant_basis.o_s_invariance", false, 0, "skipped");
                    return;
                }
                for (const Poly& element : basis.elements) {
                    for (const Matrix& g : generators) {
                        ++invariance_instances;
                        if (apply_orthogonal(g, element, s, ell) != element) {
                            run.record("invariant_basis.dim_equals_section_dim", true,
                                       dim_instances);
                            run.record("invariant_basis.o_s_invariance", false,
                                       invariance_instances,
                                       "element " + element.str() + " moved");
                            return;
                        }
                    }
                }
            }
        }
    }
    run.record("invariant_basis.dim_equals_section_dim", true, dim_instances);
    run.record("invariant_basis.o_s_invariance", true, invariance_instances);
}

void gram_positive_definite(PropertyRunner& run) {
    long instances = 0;
    for (int s = 1; s <= 2; ++s) {
        for (int ell = 1; ell <= 2; ++ell) {
            for (int k = 0; k <= 3; ++k) {
                InvariantBasis basis = invariant_basis(s, ell, k);
                Matrix g = gram(basis);
                ++instances;
                if (!positive_definite(g)) {
                    run.record("gram.positive_definite", false, instances,
                               "(s, l, k) = (" + std::to_string(s) + ", " +
                                   std::to_string(ell) + ", " + std::to_string(k) + ")");
                    return;
                }
            }
        }
    }
    run.record("gram.positive_definite", true, instances);
}

int image_rank(const std::vector<Poly>& images) {
    std::map<Exponents, int, GradedLexDesc> column_of;
    for (const Poly& p : images) {
        for (const auto& [e, c] : p.terms()) {
            column_of.emplace(e, int(column_of.size()));
        }
    }
    if (column_of.empty()) return 0;
    Matrix m(int(images.size()), int(column_of.size()));
    for (size_t r = 0; r < images.size(); ++r) {
        for (const auto& [e, c] : images[r].terms()) {
            m(int(r), column_of.at(e)) = c;
        }
    }
    return exact_rank(std::move(m));
}

void costratified_properties(PropertyRunner& run) {
    const auto wv2 = w_vars(2);
    // det w vanishes on the rank-1 stratum
    Poly det2 = Poly::parse("w1_1*w2_2 - w1_2^2", wv2);
    bool det_zero = costratified_restrict(det2, 2, 1, 2).is_zero();
    run.record("costratified.det_restricts_to_zero", det_zero, 1,
               "det w did not vanish at s' = 1");

    // kernel of the restriction = rank drop, per cell
    long drop_instances = 0;
    bool ok = true;
    std::string detail;
    auto check_cell = [&](int s, int ell, int k) {
        InvariantBasis basis = invariant_basis(s, ell, k);
        std::vector<Poly> images;
        images.reserve(size_t(basis.dim()));
        for (const Poly& w : basis.w_representation) {
            images.push_back(costratified_restrict(w, s, s - 1, ell));
        }
        int rank = image_rank(images);
        mpz_class drop = mpz_class(basis.dim()) - rank;
        ++drop_instances;
        if (drop != kernel_dim(s, ell, k) || mpz_class(rank) != section_dim(s - 1, ell, k)) {
            ok = false;
            detail = "(s, l, k) = (" + std::to_string(s) + ", " + std::to_string(ell) +
                     ", " + std::to_string(k) + ")";
        }
    };
    for (int k = 0; k <= 3 && ok; ++k) check_cell(2, 2, k);
    for (int k = 0; k <= 2 && ok; ++k) check_cell(2, 3, k);
    run.record("costratified.kernel_matches_rank_drop", ok, drop_instances, detail);

    // composing restrictions agrees with restricting directly, after
    // re-expressing the intermediate image in w coordinates
    long comp_instances = 0;
    bool coherent = true;
    std::string comp_detail;
    for (int k = 1; k <= 3 && coherent; ++k) {
        InvariantBasis basis = invariant_basis(3, 3, k);
        for (const Poly& w : basis.w_representation) {
            Poly direct = costratified_restrict(w, 3, 1, 3);
            Poly step = costratified_restrict(w, 3, 2, 3);
            auto step_w = express_in_w(step, 2, 3, k);
            if (!step_w) {
                coherent = false;
                comp_detail = "intermediate image not expressible at s' = 2";
                break;
            }
            Poly composed = costratified_restrict(*step_w, 2, 1, 3);
            ++comp_instances;
            if (composed != direct) {
                coherent = false;
                comp_detail = "w-monomial " + w.str();
                break;
            }
        }
    }
    run.record("costratified.functoriality", coherent, comp_instances, comp_detail);
}

void quantize_u_properties(PropertyRunner& run, uint64_t seed) {
    SplitMix64 rng(seed);
    int s = 2, ell = 2;
    const auto vars = z_vars(s, ell);
    auto random_anti_hermitian = [&] {
        Matrix a(ell, ell);
        for (int j = 0; j < ell; ++j) {
            a(j, j) = Scalar(mpq_class(0), rng.rational(5, 3));
            for (int k = j + 1; k < ell; ++k) {
                Scalar v = rng.gaussian_rational(5, 3);
                a(j, k) = v;
                a(k, j) = -v.conj();
            }
        }
        return a;
    };
    long count = 60;
    for (long n = 0; n < count; ++n) {
        Matrix a = random_anti_hermitian();
        Matrix b = random_anti_hermitian();
        Matrix com = a * b - b * a;
        Poly f = random_poly(rng, vars, 4, 3, /*complex=*/true);
        Poly lhs = quantize_u(com, f, s, ell);
        Poly rhs_inner = quantize_u(a, quantize_u(b, f, s, ell), s, ell) -
                         quantize_u(b, quantize_u(a, f, s, ell), s, ell);
        Poly rhs = Scalar::i() * rhs_inner;
        if (lhs != rhs) {
            run.record("quantize_u.dirac_convention", false, n + 1, "f = " + f.str());
            return;
        }
    }
    run.record("quantize_u.dirac_convention", true, count);

    // quantized observables preserve the invariant subspace
    InvariantBasis basis = invariant_basis(2, 2, 2);
    auto generators = orthogonal_generators(2);
    long preserved = 0;
    for (const Poly& element : basis.elements) {
        Poly image = euler_operator(element, 2, 2);
        for (const Matrix& g : generators) {
            ++preserved;
            if (apply_orthogonal(g, image, 2, 2) != image) {
                run.record("quantize_u.preserves_invariants", false, preserved,
                           "Euler image of " + element.str() + " moved");
                return;
            }
        }
    }
    run.record("quantize_u.preserves_invariants", true, preserved);
}

}  // namespace

SuiteReport check_fock(const CheckOptions& opt) {
    PropertyRunner run;
    run.report.suite = "fock";
    bargmann_vs_oracle(run);
    bargmann_positivity(run, opt.seed + 51);
    euler_self_adjoint(run, opt.seed + 52);
    invariant_basis_properties(run);
    gram_positive_definite(run);
    costratified_properties(run);
    quantize_u_properties(run, opt.seed + 53);
    return run.report;
}

// --------------------------------------------------------------- repcount

namespace {

void dims_section_vs_oracle(PropertyRunner& run, uint64_t seed) {
    long instances = 0;
    for (int ell = 1; ell <= 3; ++ell) {
        for (int s = 1; s <= ell; ++s) {
            for (int k = 0; k <= 4; ++k) {
                mpz_class expected = section_dim(s, ell, k);
                mpz_class first = oracle_dim(s, ell, k, seed);
                mpz_class second = oracle_dim(s, ell, k, seed ^ 0x9e3779b97f4a7c15ULL);
                ++instances;
                if (expected != first || first != second) {
                    run.record("dims.section_equals_oracle", false, instances,
                               "(s, l, k) = (" + std::to_string(s) + ", " +
                                   std::to_string(ell) + ", " + std::to_string(k) +
                                   "): section = " + expected.get_str() +
                                   ", oracle = " + first.get_str() + "/" + second.get_str());
                    return;
                }
            }
        }
    }
    run.record("dims.section_equals_oracle", true, instances);
}

void dims_closed_form(PropertyRunner& run) {
    long instances = 0;
    for (int ell = 1; ell <= 3; ++ell) {
        for (int k = 0; k <= 4; ++k) {
            long d = long(ell) * (ell + 1) / 2 - 1;
            ++instances;
            if (section_dim(ell, ell, k) != binomial(k + d, k)) {
                run.record("dims.top_level_closed_form", false, instances,
                           "(l, k) = (" + std::to_string(ell) + ", " + std::to_string(k) + ")");
                return;
            }
        }
    }
    run.record("dims.top_level_closed_form", true, instances);
}

void dims_kernel_telescoping(PropertyRunner& run) {
    long instances = 0;
    for (int ell = 2; ell <= 3; ++ell) {
        for (int s = 2; s <= ell; ++s) {
            for (int k = 0; k <= 4; ++k) {
                mpz_class sum(0);
                for (int sp = 2; sp <= s; ++sp) sum += kernel_dim(sp, ell, k);
                ++instances;
                if (sum != section_dim(s, ell, k) - section_dim(1, ell, k)) {
                    run.record("dims.kernel_telescoping", false, instances,
                               "(s, l, k) = (" + std::to_string(s) + ", " +
                                   std::to_string(ell) + ", " + std::to_string(k) + ")");
                    return;
                }
            }
        }
    }
    run.record("dims.kernel_telescoping", true, instances);
}

void weyl_positivity(PropertyRunner& run, uint64_t seed) {
    SplitMix64 rng(seed);
    long count = 1000;
    for (long n = 0; n < count; ++n) {
        int ell = int(rng.range(1, 5));
        WeightTuple lambda(static_cast<size_t>(ell), 0);
        int current = int(rng.range(0, 12));
        for (int i = 0; i < ell; ++i) {
            lambda[size_t(i)] = current;
            current -= int(rng.range(0, 4));
            if (current < 0) current = 0;
        }
        mpz_class dim = weyl_dim(lambda, ell);
        if (dim <= 0) {
            std::ostringstream os;
            os << "lambda = (";
            for (int v : lambda) os << v << ",";
            os << ")";
            run.record("weyl.positive_integer", false, n + 1, os.str());
            return;
        }
    }
    run.record("weyl.positive_integer", true, count);
}

}  // namespace

SuiteReport check_repcount(const CheckOptions& opt) {
    PropertyRunner run;
    run.report.suite = "repcount";
    dims_section_vs_oracle(run, opt.seed + 61);
    dims_closed_form(run);
    dims_kernel_telescoping(run);
    weyl_positivity(run, opt.seed + 62);
    return run.report;
}

const std::vector<std::string>& check_suite_names() {
    static const std::vector<std::string> names = {"poisson", "lierinehart", "reduction",
                                                   "fock", "repcount", "all"};
    return names;
}

std::optional<std::vector<SuiteReport>> run_checks(const std::string& suite,
                                                   const CheckOptions& opt) {
    if (suite == "poisson") return std::vector<SuiteReport>{check_poisson(opt)};
    if (suite == "lierinehart") return std::vector<SuiteReport>{check_lierinehart(opt)};
    if (suite == "reduction") return std::vector<SuiteReport>{check_reduction(opt)};
    if (suite == "fock") return std::vector<SuiteReport>{check_fock(opt)};
    if (suite == "repcount") return std::vector<SuiteReport>{check_repcount(opt)};
    if (suite == "all") {
        return std::vector<SuiteReport>{check_poisson(opt), check_lierinehart(opt),
                                        check_reduction(opt), check_fock(opt),
                                        check_repcount(opt)};
    }
    return std::nullopt;
}

}  // namespace stratquant
