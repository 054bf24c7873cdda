#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "stratquant/checks.hpp"
#include "stratquant/liepoisson.hpp"
#include "stratquant/reduction.hpp"
#include "stratquant/rng.hpp"

using namespace stratquant;

namespace {

PhasePoint point2(long q1, long q2, long p1, long p2) {
    PhasePoint pt(2, 1);
    pt.q[0] = {mpq_class(q1), mpq_class(q2)};
    pt.p[0] = {mpq_class(p1), mpq_class(p2)};
    return pt;
}

}  // namespace

TEST_CASE("angular momentum of explicit points") {
    Matrix m = mu_O(point2(1, 0, 0, 1));
    CHECK(m(0, 0).is_zero());
    CHECK(m(0, 1) == Scalar(1));
    CHECK(m(1, 0) == Scalar(-1));
    CHECK(m(1, 1).is_zero());

    CHECK(mu_O(point2(1, 0, 2, 0)).is_zero());  // parallel q, p

    PhasePoint rest(3, 2);
    rest.q[0] = {mpq_class(1), mpq_class(2), mpq_class(3)};
    rest.q[1] = {mpq_class(-1), mpq_class(0), mpq_class(5)};
    CHECK(mu_O(rest).is_zero());  // all momenta zero
}

TEST_CASE("mu_Sp block formula and nilpotency on the example point") {
    Matrix m = mu_Sp(point2(1, 0, 2, 0));
    CHECK(m(0, 0) == Scalar(2));
    CHECK(m(0, 1) == Scalar(-1));
    CHECK(m(1, 0) == Scalar(4));
    CHECK(m(1, 1) == Scalar(-2));
    CHECK(m.trace().is_zero());
    CHECK(determinant(m).is_zero());
    CHECK(in_sp(m, 1));

    PhasePoint origin(2, 1);
    CHECK(mu_Sp(origin).is_zero());
}

TEST_CASE("zero-level sampler is exact and deterministic") {
    auto points = sample_zero_level(2, 2, 50, 2024);
    auto again = sample_zero_level(2, 2, 50, 2024);
    REQUIRE(points.size() == 50);
    int full_rank = 0;
    for (size_t i = 0; i < points.size(); ++i) {
        CHECK(mu_O(points[i]).is_zero());
        CHECK(points[i].q == again[i].q);
        CHECK(points[i].p == again[i].p);
        if (exact_rank(orbit_image(points[i]).entries) == 2) ++full_rank;
    }
    CHECK(full_rank >= 45);  // generically maximal

    for (const auto& pt : sample_zero_level(3, 1, 50, 7)) {
        SymMatrixC w = orbit_image(pt);
        REQUIRE(w.n == 1);
        // 1x1, nonzero unless the sampled vector degenerates
    }
}

TEST_CASE("orbit_image on the worked example") {
    SymMatrixC w = orbit_image(point2(1, 0, 2, 0));
    REQUIRE(w.n == 1);
    CHECK(w.entries(0, 0) == Scalar(mpq_class(-3), mpq_class(4)));  // (1+2i)^2
    // |W11|^2 = 25 = (q.q + p.p)^2: the semicone identity
    CHECK(w.entries(0, 0).norm() == mpq_class(25));

    PhasePoint origin(2, 1);
    CHECK(orbit_image(origin).entries.is_zero());
    CHECK(exact_rank(orbit_image(origin).entries) == 0);

    CHECK_THROWS_AS(orbit_image(point2(1, 0, 0, 1)), std::invalid_argument);
}

TEST_CASE("adjoint_point on the named points") {
    AdjointPoint vertex = adjoint_point(Scalar(1));
    CHECK(vertex.X == Scalar(2));
    CHECK(vertex.Y == Scalar(0));
    CHECK(vertex.tau == Scalar(0));
    CHECK(vertex.relation_residual().is_zero());

    AdjointPoint at_i = adjoint_point(Scalar::i());
    CHECK(at_i.X == Scalar(0));
    CHECK(at_i.Y == Scalar(0));
    CHECK(at_i.tau == Scalar(1));
    CHECK(at_i.relation_residual().is_zero());

    AdjointPoint two = adjoint_point(Scalar(2));
    CHECK(two.X == Scalar(mpq_class(5, 2)));
    CHECK(two.Y == Scalar(0));
    CHECK(two.tau == Scalar(0));

    CHECK_THROWS_AS(adjoint_point(Scalar(0)), std::invalid_argument);
}

TEST_CASE("adjoint coordinate is the Steinberg value z + 1/z") {
    SplitMix64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        Scalar z = rng.nonzero_gaussian_rational(9, 9);
        AdjointPoint pt = adjoint_point(z);
        CHECK(pt.X + Scalar::i() * pt.Y == z + Scalar(1) / z);
        CHECK(pt.relation_residual().is_zero());
    }
}

TEST_CASE("steinberg_general") {
    Scalar z(mpq_class(3, 2), mpq_class(1, 3));
    auto sigma = steinberg_general({z, Scalar(1) / z});
    REQUIRE(sigma.size() == 1);
    CHECK(sigma[0] == z + Scalar(1) / z);

    auto ones = steinberg_general({Scalar(1), Scalar(1), Scalar(1)});
    REQUIRE(ones.size() == 2);
    CHECK(ones[0] == Scalar(3));
    CHECK(ones[1] == Scalar(3));

    std::vector<Scalar> zs = {Scalar(2), Scalar(3), Scalar(1) / Scalar(6)};
    auto sigma3 = steinberg_general(zs);
    std::swap(zs[0], zs[2]);
    CHECK(steinberg_general(zs) == sigma3);

    CHECK_THROWS_AS(steinberg_general({Scalar(2), Scalar(2)}), std::invalid_argument);
    CHECK_THROWS_AS(steinberg_general({Scalar(0), Scalar(1)}), std::invalid_argument);
}

TEST_CASE("killing form identities on explicit pairs") {
    LieBasis so3 = so_basis(3);
    // beta(a,a) for a = r12: (s-2) tr(a^t a) = 1 * 2 = 2, so beta = -2
    CHECK(so3.killing(0, 0) == Scalar(-2));

    LieBasis sp1 = sp_basis(1);
    // H = a11: beta(H,H) = 2(l+1) tr(H^2) = 4 * 2 = 8
    CHECK(sp1.killing(0, 0) == Scalar(8));
}

TEST_CASE("reduction property suite passes") {
    auto report = check_reduction();
    for (const auto& p : report.properties) {
        INFO(p.name, ": ", p.counterexample);
        CHECK(p.passed);
    }
}
