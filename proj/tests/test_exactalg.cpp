#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "stratquant/linalg.hpp"
#include "stratquant/poly.hpp"
#include "stratquant/rewrite.hpp"
#include "stratquant/rng.hpp"

using namespace stratquant;

namespace {

const std::vector<std::string> kConeVars = {"r", "x", "y"};

RewriteSystem semicone_rules() {
    return RewriteSystem::from_relations(
        kConeVars, {Poly::parse("r^2 - x^2 - y^2", kConeVars)});
}

Poly rp(const std::string& text) { return Poly::parse(text, kConeVars); }

}  // namespace

TEST_CASE("scalar arithmetic is exact Gaussian-rational arithmetic") {
    Scalar a(mpq_class(1, 3), mpq_class(2));
    Scalar b(mpq_class(-1, 2), mpq_class(1, 6));
    CHECK((a + b) - b == a);
    CHECK(a * b == b * a);
    CHECK((a / b) * b == a);
    CHECK(a * a.conj() == Scalar(a.norm()));
    CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
    CHECK_THROWS_AS(a / Scalar(0), std::domain_error);
}

TEST_CASE("scalar strings round-trip through the polynomial parser") {
    std::vector<std::string> forms = {"3/4", "-2", "i", "-i", "2i", "-1/3i", "(1+2i)",
                                      "(1/2-3/5i)"};
    for (const auto& text : forms) {
        Poly p = Poly::parse(text, kConeVars);
        CHECK(p.is_constant());
        CHECK(Poly::parse(p.str(), kConeVars) == p);
    }
}

TEST_CASE("canonical text form round-trips bit-exactly") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        Poly p(kConeVars);
        for (int t = 0; t < 5; ++t) {
            Exponents e(3, 0);
            for (int d = 0; d < 4; ++d) e[size_t(rng.below(3))] += int(rng.below(2));
            p.add_term(e, rng.gaussian_rational(9, 9));
        }
        std::string text = p.str();
        Poly back = Poly::parse(text, kConeVars);
        CHECK(back == p);
        CHECK(back.str() == text);
    }
}

TEST_CASE("json form round-trips bit-exactly") {
    SplitMix64 rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        Poly p(kConeVars);
        for (int t = 0; t < 4; ++t) {
            Exponents e(3, 0);
            for (int d = 0; d < 3; ++d) e[size_t(rng.below(3))] += int(rng.below(3));
            p.add_term(e, rng.gaussian_rational(9, 9));
        }
        nlohmann::json j = p.to_json();
        Poly back = Poly::from_json(j);
        CHECK(back == p);
        CHECK(back.to_json() == j);
    }
}

TEST_CASE("ring axioms hold exactly on random triples") {
    SplitMix64 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        Poly f(kConeVars), g(kConeVars), h(kConeVars);
        for (Poly* p : {&f, &g, &h}) {
            for (int t = 0; t < 3; ++t) {
                Exponents e(3, 0);
                for (int d = 0; d < 3; ++d) e[size_t(rng.below(3))] += int(rng.below(2));
                p->add_term(e, rng.gaussian_rational(5, 4));
            }
        }
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        CHECK(f * g == g * f);
    }
}

TEST_CASE("normal_form applies the semicone relation") {
    RewriteSystem rules = semicone_rules();
    CHECK(rules.normal_form(rp("r^2")) == rp("x^2 + y^2"));
    CHECK(rules.normal_form(rp("x + y")) == rp("x + y"));
    // (x^2 + y^2 - r^2) * (x + 3*y) reduces to zero
    Poly product = rp("x^2 + y^2 - r^2") * rp("x + 3*y");
    CHECK(rules.normal_form(product).is_zero());
}

TEST_CASE("normal_form is idempotent and an algebra map modulo each test ideal") {
    const std::vector<std::string> adj_vars = {"Y", "X", "tau"};
    struct Ideal {
        std::vector<std::string> vars;
        RewriteSystem rules;
    };
    std::vector<Ideal> ideals;
    ideals.push_back({kConeVars, semicone_rules()});
    ideals.push_back({adj_vars,
                      RewriteSystem::from_relations(
                          adj_vars, {Poly::parse("Y^2*tau - Y^2 + X^2*tau + 4*tau^2 - 4*tau",
                                                 adj_vars)})});
    SplitMix64 rng(99);
    for (const Ideal& ideal : ideals) {
        for (int trial = 0; trial < 500; ++trial) {
            Poly f(ideal.vars), g(ideal.vars);
            for (Poly* p : {&f, &g}) {
                for (int t = 0; t < 3; ++t) {
                    Exponents e(3, 0);
                    for (int d = 0; d < 4; ++d) e[size_t(rng.below(3))] += int(rng.below(2));
                    p->add_term(e, Scalar(rng.rational(5, 3)));
                }
            }
            Poly nf = ideal.rules.normal_form(f);
            CHECK(ideal.rules.normal_form(nf) == nf);
            CHECK(ideal.rules.normal_form(f * g) ==
                  ideal.rules.normal_form(ideal.rules.normal_form(f) *
                                          ideal.rules.normal_form(g)));
        }
    }
}

TEST_CASE("non-terminating rule orientations are rejected at construction") {
    // x^2 -> r^2 ascends in graded lex over (r, x, y)
    Poly bad = Poly::parse("r^2", kConeVars);
    Exponents lhs = {0, 2, 0};
    CHECK_THROWS_AS(RewriteSystem(kConeVars, {{lhs, bad}}), std::invalid_argument);
}

TEST_CASE("normal_form rejects polynomials over foreign variables") {
    RewriteSystem rules = semicone_rules();
    Poly foreign = Poly::parse("u", {"u"});
    CHECK_THROWS_AS(rules.normal_form(foreign), std::invalid_argument);
}

TEST_CASE("differentiate computes formal partials") {
    CHECK(rp("x^2*y").derivative("x") == rp("2*x*y"));
    CHECK(rp("5").derivative("x").is_zero());
    std::vector<std::string> adj = {"Y", "X", "tau"};
    CHECK(Poly::parse("Y^2*tau", adj).derivative("tau") == Poly::parse("Y^2", adj));
    CHECK_THROWS_AS(rp("x").derivative("zz"), std::invalid_argument);
}

TEST_CASE("differentiate satisfies the Leibniz rule on random pairs") {
    SplitMix64 rng(5150);
    for (int trial = 0; trial < 200; ++trial) {
        Poly f(kConeVars), g(kConeVars);
        for (Poly* p : {&f, &g}) {
            for (int t = 0; t < 3; ++t) {
                Exponents e(3, 0);
                for (int d = 0; d < 3; ++d) e[size_t(rng.below(3))] += int(rng.below(3));
                p->add_term(e, Scalar(rng.rational(7, 4)));
            }
        }
        const std::string v = kConeVars[size_t(rng.below(3))];
        CHECK((f * g).derivative(v) == f.derivative(v) * g + f * g.derivative(v));
    }
}

TEST_CASE("exact_rank on small explicit matrices") {
    Matrix id = Matrix::identity(3);
    CHECK(exact_rank(id) == 3);

    Matrix proportional(2, 2);
    proportional(0, 0) = Scalar(1);
    proportional(0, 1) = Scalar(2);
    proportional(1, 0) = Scalar(2);
    proportional(1, 1) = Scalar(4);
    CHECK(exact_rank(proportional) == 1);

    CHECK(exact_rank(Matrix()) == 0);
}

TEST_CASE("exact_rank sees the rank-1 relation w11*w22 = w12^2") {
    // evaluate both monomials at rank-1 symmetric samples v v^T
    SplitMix64 rng(321);
    Matrix evaluation(3, 2);
    for (int row = 0; row < 3; ++row) {
        mpq_class v1 = rng.nonzero_rational(5, 3);
        mpq_class v2 = rng.nonzero_rational(5, 3);
        mpq_class w11 = v1 * v1, w12 = v1 * v2, w22 = v2 * v2;
        evaluation(row, 0) = Scalar(w11 * w22);
        evaluation(row, 1) = Scalar(w12 * w12);
    }
    CHECK(exact_rank(evaluation) == 1);
}

TEST_CASE("exact_rank is transpose-invariant on random matrices") {
    SplitMix64 rng(77);
    for (int trial = 0; trial < 60; ++trial) {
        int rows = int(rng.range(1, 12));
        int cols = int(rng.range(1, 12));
        Matrix m(rows, cols);
        for (int r = 0; r < rows; ++r) {
            for (int c = 0; c < cols; ++c) {
                if (rng.below(3) == 0) continue;
                m(r, c) = rng.gaussian_rational(5, 3);
            }
        }
        Matrix t = m.transpose();
        CHECK(exact_rank(m) == exact_rank(t));
    }
}

TEST_CASE("determinant and principal minors agree with elimination") {
    Matrix m(3, 3);
    long vals[3][3] = {{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) m(r, c) = Scalar(vals[r][c]);
    auto minors = leading_principal_minors(m);
    CHECK(minors[0] == Scalar(2));
    CHECK(minors[1] == Scalar(5));   // det [[2,1],[1,3]]
    CHECK(minors[2] == Scalar(18));  // full determinant
    CHECK(determinant(m) == Scalar(18));
}

TEST_CASE("solve returns an exact solution or reports inconsistency") {
    Matrix a(2, 2);
    a(0, 0) = Scalar(1);
    a(0, 1) = Scalar(2);
    a(1, 0) = Scalar(3);
    a(1, 1) = Scalar(4);
    auto x = solve(a, {Scalar(5), Scalar(11)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Scalar(1));
    CHECK((*x)[1] == Scalar(2));

    Matrix singular(2, 2);
    singular(0, 0) = Scalar(1);
    singular(0, 1) = Scalar(1);
    singular(1, 0) = Scalar(1);
    singular(1, 1) = Scalar(1);
    CHECK_FALSE(solve(singular, {Scalar(0), Scalar(1)}).has_value());
}
