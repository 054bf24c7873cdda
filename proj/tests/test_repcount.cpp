#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "stratquant/checks.hpp"
#include "stratquant/repcount.hpp"
#include "stratquant/rng.hpp"

using namespace stratquant;

namespace {

std::vector<std::vector<int>> exponents(const std::vector<DeltaMonomial>& monos) {
    std::vector<std::vector<int>> out;
    for (const auto& m : monos) out.push_back(m.exponents);
    return out;
}

}  // namespace

TEST_CASE("delta monomial enumeration in the fixed order") {
    CHECK(exponents(enumerate_monomials(2, 2)) ==
          std::vector<std::vector<int>>{{2, 0}, {0, 1}});
    CHECK(exponents(enumerate_monomials(1, 3)) == std::vector<std::vector<int>>{{3}});
    CHECK(exponents(enumerate_monomials(3, 3)) ==
          std::vector<std::vector<int>>{{3, 0, 0}, {1, 1, 0}, {0, 0, 1}});
    CHECK(exponents(enumerate_monomials(3, 0)) == std::vector<std::vector<int>>{{0, 0, 0}});
    for (const auto& m : enumerate_monomials(3, 4)) CHECK(m.level() == 4);
}

TEST_CASE("delta weights are even and nonincreasing") {
    DeltaMonomial d2{{0, 1}};
    CHECK(delta_weight(d2, 2) == WeightTuple{2, 2});
    DeltaMonomial d1sq{{2, 0}};
    CHECK(delta_weight(d1sq, 2) == WeightTuple{4, 0});
    DeltaMonomial mixed{{1, 1, 0}};
    CHECK(delta_weight(mixed, 3) == WeightTuple{4, 2, 0});
}

TEST_CASE("weyl dimension formula") {
    CHECK(weyl_dim({0, 0}, 2) == 1);
    CHECK(weyl_dim({2, 0}, 2) == 3);   // Sym^2 C^2
    CHECK(weyl_dim({2, 2}, 2) == 1);   // det^2
    CHECK(weyl_dim({2, 0, 0}, 3) == 6);
    CHECK_THROWS_AS(weyl_dim({0, 2}, 2), std::invalid_argument);
    CHECK_THROWS_AS(weyl_dim({1, 0}, 3), std::invalid_argument);
}

TEST_CASE("section dimensions on the worked examples") {
    CHECK(section_dim(1, 2, 2) == 5);
    CHECK(section_dim(2, 2, 2) == 6);
    CHECK(section_dim(2, 2, 1) == 3);
    CHECK(section_dim(1, 1, 4) == 1);
    CHECK_THROWS_AS(section_dim(3, 2, 1), std::invalid_argument);
}

TEST_CASE("oracle dimensions on the worked examples") {
    CHECK(oracle_dim(1, 2, 2, kDefaultSeed) == 5);
    CHECK(oracle_dim(2, 2, 3, kDefaultSeed) == 10);  // C(5,2), no relations
    for (int k = 0; k <= 4; ++k) CHECK(oracle_dim(1, 1, k, kDefaultSeed) == 1);
}

TEST_CASE("kernel dimensions") {
    CHECK(kernel_dim(2, 2, 2) == 1);  // only delta_2, weight (2,2)
    CHECK(kernel_dim(2, 2, 1) == 0);
    CHECK(kernel_dim(2, 3, 2) == section_dim(2, 3, 2) - section_dim(1, 3, 2));
    CHECK(kernel_dim(2, 3, 2) >= 0);
    CHECK_THROWS_AS(kernel_dim(1, 2, 2), std::invalid_argument);
}

TEST_CASE("repcount property suite passes") {
    auto report = check_repcount();
    for (const auto& p : report.properties) {
        INFO(p.name, ": ", p.counterexample);
        CHECK(p.passed);
    }
}
