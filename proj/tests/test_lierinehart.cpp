#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "stratquant/checks.hpp"
#include "stratquant/lierinehart.hpp"
#include "stratquant/prequantum.hpp"
#include "stratquant/rng.hpp"

using namespace stratquant;

namespace {

const LieRinehart& flat2() {
    static LieRinehart lr(flat_phase_space(1));
    return lr;
}

Poly fp(const std::string& text) { return flat2().algebra().parse(text); }

}  // namespace

TEST_CASE("d is linear, Leibniz, and kills constants") {
    const auto& lr = flat2();
    DiffElement d_qp = lr.d(fp("q1*p1"));
    DiffElement expected = lr.make_diff({{"q1", fp("p1")}, {"p1", fp("q1")}});
    CHECK(d_qp == expected);
    CHECK(lr.d(fp("7")).is_zero());

    SplitMix64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        Poly u(fp("0").vars()), v(fp("0").vars());
        for (Poly* p : {&u, &v}) {
            for (int t = 0; t < 3; ++t) {
                Exponents e(2, 0);
                for (int d = 0; d < 3; ++d) e[size_t(rng.below(2))] += int(rng.below(2));
                p->add_term(e, Scalar(rng.rational(5, 3)));
            }
        }
        DiffElement lhs = lr.d(u * v);
        DiffElement rhs = lr.add(lr.scale(u, lr.d(v)), lr.scale(v, lr.d(u)));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("the relation differential is quotiented out") {
    LieRinehart cone(builtin_semicone());
    Poly rel = cone.algebra().parse("x^2 + y^2 - r^2");
    CHECK(cone.d(rel).is_zero());

    LieRinehart adjoint(builtin_adjoint_quotient());
    Poly rel2 = adjoint.algebra().parse("Y^2 - (X^2 + Y^2 + 4*tau - 4)*tau");
    CHECK(adjoint.d(rel2).is_zero());
}

TEST_CASE("lr_bracket on generator differentials gives d of the bracket") {
    const auto& lr = flat2();
    // [dq, dp] = d{q,p} = d(1) = 0
    CHECK(lr.lr_bracket(lr.d(fp("q1")), lr.d(fp("p1"))).is_zero());

    LieRinehart cone(builtin_semicone());
    auto cp = [&](const std::string& t) { return cone.algebra().parse(t); };
    // [dx, dy] = d{x,y} = d(2r) = 2 dr
    DiffElement lhs = cone.lr_bracket(cone.d(cp("x")), cone.d(cp("y")));
    CHECK(lhs == cone.make_diff({{"r", cp("2")}}));
}

TEST_CASE("lr_bracket hand example [q dq, dp] = dq") {
    const auto& lr = flat2();
    DiffElement alpha = lr.make_diff({{"q1", fp("q1")}});  // q dq
    DiffElement beta = lr.make_diff({{"p1", fp("1")}});    // dp
    CHECK(lr.lr_bracket(alpha, beta) == lr.make_diff({{"q1", fp("1")}}));
}

TEST_CASE("lr_bracket is antisymmetric on random elements") {
    const auto& lr = flat2();
    SplitMix64 rng(17);
    const auto& gens = lr.algebra().generators();
    for (int trial = 0; trial < 50; ++trial) {
        std::map<std::string, Poly> coeffs;
        for (const auto& g : gens) {
            Poly c(gens);
            for (int t = 0; t < 2; ++t) {
                Exponents e(2, 0);
                for (int d = 0; d < 2; ++d) e[size_t(rng.below(2))] += int(rng.below(2));
                c.add_term(e, Scalar(rng.rational(5, 3)));
            }
            coeffs[g] = c;
        }
        DiffElement alpha = lr.make_diff(coeffs);
        CHECK(lr.lr_bracket(alpha, alpha).is_zero());
    }
}

TEST_CASE("pi_sharp anchors differentials as derivations") {
    const auto& lr = flat2();
    CHECK(lr.pi_sharp(lr.d(fp("q1")), fp("p1")) == fp("1"));

    LieRinehart cone(builtin_semicone());
    auto cp = [&](const std::string& t) { return cone.algebra().parse(t); };
    CHECK(cone.pi_sharp(cone.d(cp("x")), cp("y")) == cp("2*r"));

    SplitMix64 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        Poly f(fp("0").vars()), g(fp("0").vars());
        for (Poly* p : {&f, &g}) {
            for (int t = 0; t < 2; ++t) {
                Exponents e(2, 0);
                for (int d = 0; d < 3; ++d) e[size_t(rng.below(2))] += int(rng.below(2));
                p->add_term(e, Scalar(rng.rational(5, 3)));
            }
        }
        DiffElement alpha = lr.make_diff({{"q1", fp("p1")}, {"p1", fp("q1^2")}});
        Poly lhs = lr.pi_sharp(alpha, f * g);
        Poly rhs = f * lr.pi_sharp(alpha, g) + g * lr.pi_sharp(alpha, f);
        CHECK(lr.algebra().reduce(lhs - rhs).is_zero());
    }
}

TEST_CASE("ext_bracket matches the central extension formula") {
    const auto& lr = flat2();
    Poly zero = fp("0");
    // [(0,dq),(0,dp)] = (-{q,p}, d{q,p}) = (-1, 0)
    ExtElement a = lr.make_ext(zero, lr.d(fp("q1")));
    ExtElement b = lr.make_ext(zero, lr.d(fp("p1")));
    ExtElement br = lr.ext_bracket(a, b);
    CHECK(br.scalar_part == fp("-1"));
    CHECK(br.diff_part.is_zero());

    // the kernel A is central
    ExtElement fa = lr.make_ext(fp("q1^2 + 3*p1"), lr.zero_diff());
    ExtElement fb = lr.make_ext(fp("p1^3 - q1"), lr.zero_diff());
    ExtElement central = lr.ext_bracket(fa, fb);
    CHECK(central.scalar_part.is_zero());
    CHECK(central.diff_part.is_zero());

    // [(u,du),(v,dv)] with u = v vanishes
    Poly u = fp("q1*p1");
    ExtElement uu = lr.make_ext(u, lr.d(u));
    ExtElement self = lr.ext_bracket(uu, uu);
    CHECK(self.scalar_part.is_zero());
    CHECK(self.diff_part.is_zero());
}

TEST_CASE("prequantization selects the +1 sign and fixes the constants") {
    PrequantumModule module = PrequantumModule::flat(1);
    CHECK(module.sign() == 1);

    Poly x = module.parse("q1^2 - p1");
    CHECK(module.prequantize(module.parse("5"), x) == Scalar(5) * x);
    CHECK(module.prequantize(module.parse("q1"), module.parse("1")) == module.parse("q1"));
    // with the validated sign, theta(X_p) = -p cancels the multiplication
    CHECK(module.prequantize(module.parse("p1"), module.parse("1")).is_zero());
}

TEST_CASE("dirac residual vanishes and detects the stripped mutant") {
    PrequantumModule module = PrequantumModule::flat(1);
    Poly q = module.parse("q1"), p = module.parse("p1");
    for (const char* probe : {"1", "q1", "p1", "q1*p1", "q1^3", "p1^2*q1"}) {
        CHECK(module.dirac_residual(q, p, module.parse(probe)).is_zero());
    }
    CHECK(module.dirac_residual(module.parse("q1^2"), module.parse("p1^2"), q).is_zero());

    PrequantumModule stripped = PrequantumModule::flat_without_theta(1);
    // the naive Hamiltonian action misses the central term: the residual is
    // -{a,b} * probe
    CHECK(stripped.dirac_residual(q, p, module.parse("1")) == module.parse("-1"));
    CHECK(stripped.dirac_residual(q, p, q) == module.parse("-q1"));
}

TEST_CASE("chi satisfies the prequantum module conditions") {
    PrequantumModule module = PrequantumModule::flat(2);
    const auto& lr = module.lie_rinehart();
    Poly a = module.parse("q1*p2 - 3");
    Poly x = module.parse("q2^2 + p1");
    // chi(a, 0) = i a Id
    ExtElement central = lr.make_ext(a, lr.zero_diff());
    CHECK(module.chi(central, x) == Scalar::i() * (a * x));
}

TEST_CASE("lierinehart property suite passes") {
    auto report = check_lierinehart();
    for (const auto& p : report.properties) {
        INFO(p.name, ": ", p.counterexample);
        CHECK(p.passed);
    }
}
