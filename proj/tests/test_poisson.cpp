#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "stratquant/checks.hpp"
#include "stratquant/liepoisson.hpp"
#include "stratquant/poisson.hpp"
#include "stratquant/rng.hpp"

#include <fstream>
#include <sstream>

using namespace stratquant;

TEST_CASE("semicone brackets match the table and extend by bi-derivation") {
    auto cone = builtin_semicone();
    CHECK(cone.generator_bracket("x", "y") == cone.parse("2*r"));
    CHECK(cone.generator_bracket("x", "r") == cone.parse("2*y"));
    CHECK(cone.generator_bracket("y", "r") == cone.parse("-2*x"));
    CHECK(cone.generator_bracket("x", "x").is_zero());
    // the relation brackets to zero against every generator
    CHECK(cone.bracket(cone.parse("x"), cone.parse("x^2 + y^2 - r^2")).is_zero());
}

TEST_CASE("bracket rejects unknown variables") {
    auto cone = builtin_semicone();
    Poly foreign = Poly::parse("u", {"u"});
    CHECK_THROWS_AS(cone.bracket(foreign, foreign), std::invalid_argument);
}

TEST_CASE("jacobiator vanishes on the singular algebras") {
    auto cone = builtin_semicone();
    CHECK(cone.jacobiator(cone.parse("x"), cone.parse("y"), cone.parse("r")).is_zero());
    CHECK(cone.jacobiator(cone.parse("x"), cone.parse("x"), cone.parse("r")).is_zero());

    auto adjoint = builtin_adjoint_quotient();
    CHECK(adjoint
              .jacobiator(adjoint.parse("X"), adjoint.parse("Y"), adjoint.parse("tau"))
              .is_zero());
}

TEST_CASE("adjoint quotient tau brackets are the locked-in derived ones") {
    auto adjoint = builtin_adjoint_quotient();
    CHECK(adjoint.generator_bracket("X", "Y") == adjoint.parse("X^2 + Y^2 + 8*tau - 4"));
    CHECK(adjoint.generator_bracket("X", "tau") == adjoint.parse("2*Y - 2*Y*tau"));
    CHECK(adjoint.generator_bracket("Y", "tau") == adjoint.parse("2*X*tau"));
}

TEST_CASE("poisson ideal verdicts") {
    auto cone = builtin_semicone();
    CHECK(cone.poisson_ideal_verdict().pass);

    auto adjoint = builtin_adjoint_quotient();
    CHECK(adjoint.poisson_ideal_verdict().pass);

    // perturbing {x,y} to 2r + 1 breaks the ideal with witness -2y
    auto broken = cone.with_table_entry("x", "y", cone.parse("2*r + 1"));
    auto verdict = broken.poisson_ideal_verdict();
    REQUIRE_FALSE(verdict.pass);
    CHECK_FALSE(verdict.witness.is_zero());
    CHECK(verdict.generator == "x");
    CHECK(verdict.witness == cone.parse("-2*y"));
}

TEST_CASE("algebra descriptors round-trip through JSON") {
    auto cone = builtin_semicone();
    auto back = PresentedPoissonAlgebra::from_json(cone.to_json());
    CHECK(back.generators() == cone.generators());
    CHECK(back.generator_bracket("x", "y") == cone.generator_bracket("x", "y"));
    CHECK(back.reduce(back.parse("r^2")) == cone.parse("x^2 + y^2"));
}

TEST_CASE("the shipped descriptor files define the built-in algebras") {
    for (const char* name : {"semicone", "adjoint_quotient"}) {
        std::ifstream file(std::string(STRATQUANT_DATA_DIR) + "/" + name + ".json");
        REQUIRE(file.good());
        std::stringstream buffer;
        buffer << file.rdbuf();
        auto from_file = PresentedPoissonAlgebra::from_json_text(buffer.str());
        auto builtin = std::string(name) == "semicone" ? builtin_semicone()
                                                       : builtin_adjoint_quotient();
        CHECK(from_file.to_json() == builtin.to_json());
    }
}

TEST_CASE("lie-poisson bracket on sl(2,R) = sp(1,R)") {
    LiePoissonSpace space(1);
    const auto& coords = space.coordinates();
    REQUIRE(coords == std::vector<std::string>{"a11", "b11", "c11"});  // H, E, F
    Poly h = space.coordinate(0), e = space.coordinate(1), f = space.coordinate(2);
    CHECK(space.bracket(h, e) == Scalar(2) * e);   // [H,E] = 2E
    CHECK(space.bracket(e, f) == h);               // [E,F] = H
    CHECK(space.bracket(h, f) == Scalar(-2) * f);  // [H,F] = -2F
    CHECK(space.bracket(e, e).is_zero());
}

TEST_CASE("lie-poisson coordinates realize the half-trace pairing") {
    LiePoissonSpace space(2);
    SplitMix64 rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix a(4, 4), x(4, 4);
        // random elements of sp(2,R) through the basis
        for (const Matrix& b : space.basis().mats) {
            a = a + Scalar(rng.rational(3, 2)) * b;
            x = x + Scalar(rng.rational(3, 2)) * b;
        }
        Scalar direct = Scalar(mpq_class(1, 2)) * (a * x).trace();
        Scalar via_poly = space.linear_function(a).eval(space.coordinate_values(x));
        CHECK(direct == via_poly);
    }
}

TEST_CASE("lie-poisson bracket rejects mismatched variable sets") {
    LiePoissonSpace one(1);
    LiePoissonSpace two(2);
    CHECK_THROWS_AS(two.bracket(one.coordinate(0), one.coordinate(1)),
                    std::invalid_argument);
}

TEST_CASE("poisson property suite passes") {
    auto report = check_poisson();
    for (const auto& p : report.properties) {
        INFO(p.name, ": ", p.counterexample);
        CHECK(p.passed);
    }
}
