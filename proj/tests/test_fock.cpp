#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "stratquant/checks.hpp"
#include "stratquant/fock.hpp"
#include "stratquant/repcount.hpp"

using namespace stratquant;

TEST_CASE("bargmann inner product closed form") {
    std::vector<std::string> vars = {"z1", "z2"};
    Poly one = Poly::constant(vars, Scalar(1));
    CHECK(bargmann_inner(one, one) == Scalar(1));
    CHECK(bargmann_inner(Poly::variable(vars, "z1"), Poly::variable(vars, "z2")).is_zero());
    Poly z1sq = Poly::parse("z1^2", vars);
    CHECK(bargmann_inner(z1sq, z1sq) == Scalar(8));  // 2^2 * 2!
    Poly foreign = Poly::parse("u", {"u"});
    CHECK_THROWS_AS(bargmann_inner(z1sq, foreign), std::invalid_argument);

    // sesquilinearity in the second slot
    Poly f = Poly::parse("(1+2i)*z1", vars);
    CHECK(bargmann_inner(f, f) == Scalar(10));  // |1+2i|^2 * 2
}

TEST_CASE("invariant bases at the worked sizes") {
    InvariantBasis b1 = invariant_basis(1, 2, 1);
    CHECK(b1.dim() == 3);  // w11, w12, w22
    const auto wv = w_vars(2);
    REQUIRE(wv == std::vector<std::string>{"w1_1", "w1_2", "w2_2"});
    CHECK(b1.w_representation[0] == Poly::parse("w1_1", wv));
    CHECK(b1.w_representation[1] == Poly::parse("w1_2", wv));
    CHECK(b1.w_representation[2] == Poly::parse("w2_2", wv));

    CHECK(invariant_basis(1, 2, 2).dim() == 5);  // one relation: w11 w22 = w12^2
    CHECK(invariant_basis(2, 2, 2).dim() == 6);  // no rank-2 relations
    CHECK(invariant_basis(2, 2, 0).dim() == 1);
}

TEST_CASE("basis construction respects the desk bounds guard") {
    CHECK_THROWS_AS(invariant_basis(1, 4, 1), std::domain_error);
    CHECK_THROWS_AS(invariant_basis(1, 2, 5), std::domain_error);
    DeskBounds lifted;
    lifted.unsafe = true;
    CHECK(invariant_basis(1, 2, 5, lifted).dim() > 0);
}

TEST_CASE("euler operator is the degree operator with no ordering constant") {
    const auto vars = z_vars(1, 2);  // z1_1, z2_1
    Poly z1sq = Poly::parse("z1_1^2", vars);
    CHECK(euler_operator(z1sq, 1, 2) == Scalar(2) * z1sq);
    CHECK(euler_operator(Poly::constant(vars, Scalar(1)), 1, 2).is_zero());
    Poly mixed = Poly::parse("z1_1*z2_1^3", vars);
    CHECK(euler_operator(mixed, 1, 2) == Scalar(4) * mixed);
}

TEST_CASE("quantize_u rejects non-anti-Hermitian input") {
    Matrix bad(2, 2);
    bad(0, 1) = Scalar(1);  // not balanced by -conj below the diagonal
    const auto vars = z_vars(1, 2);
    CHECK_THROWS_AS(quantize_u(bad, Poly::constant(vars, Scalar(1)), 1, 2),
                    std::invalid_argument);
}

TEST_CASE("restriction kills det w and nothing below it") {
    const auto wv = w_vars(2);
    Poly det2 = Poly::parse("w1_1*w2_2 - w1_2^2", wv);
    CHECK(costratified_restrict(det2, 2, 1, 2).is_zero());

    // the span avoiding delta_2 restricts injectively
    InvariantBasis basis = invariant_basis(2, 2, 2);
    std::vector<Poly> images;
    for (const Poly& w : basis.w_representation) {
        images.push_back(costratified_restrict(w, 2, 1, 2));
    }
    std::map<Exponents, int, GradedLexDesc> columns;
    for (const Poly& p : images)
        for (const auto& [e, c] : p.terms()) columns.emplace(e, int(columns.size()));
    Matrix m(int(images.size()), int(columns.size()));
    for (size_t r = 0; r < images.size(); ++r)
        for (const auto& [e, c] : images[r].terms()) m(int(r), columns.at(e)) = c;
    int rank = exact_rank(m);
    CHECK(mpz_class(rank) == section_dim(1, 2, 2));
    CHECK(mpz_class(basis.dim()) - rank == kernel_dim(2, 2, 2));

    CHECK_THROWS_AS(costratified_restrict(det2, 2, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(costratified_restrict(det2, 2, 0, 2), std::invalid_argument);
}

TEST_CASE("gram matrices are exact and block-orthogonal across degrees") {
    InvariantBasis b = invariant_basis(1, 1, 1);
    Matrix g = gram(b);
    REQUIRE(g.rows() == 1);
    CHECK(g(0, 0) == Scalar(8));  // <z^2, z^2> with m = 1

    // different total degrees are orthogonal
    InvariantBasis b1 = invariant_basis(2, 2, 1);
    InvariantBasis b2 = invariant_basis(2, 2, 2);
    for (const Poly& lo : b1.elements) {
        for (const Poly& hi : b2.elements) {
            CHECK(bargmann_inner(lo, hi).is_zero());
        }
    }

    CHECK(positive_definite(gram(invariant_basis(2, 2, 3))));
}

TEST_CASE("express_in_w reconstructs invariants") {
    InvariantBasis basis = invariant_basis(2, 2, 2);
    for (size_t i = 0; i < basis.elements.size(); ++i) {
        auto w = express_in_w(basis.elements[i], 2, 2, 2);
        REQUIRE(w.has_value());
        CHECK(w_substitution(*w, 2, 2) == basis.elements[i]);
    }
    // a non-invariant is rejected
    const auto vars = z_vars(2, 2);
    CHECK_FALSE(express_in_w(Poly::parse("z1_1^4", vars), 2, 2, 2).has_value());
}

TEST_CASE("fock property suite passes") {
    auto report = check_fock();
    for (const auto& p : report.properties) {
        INFO(p.name, ": ", p.counterexample);
        CHECK(p.passed);
    }
}
