#ifndef STRATQUANT_CHECKS_HPP
#define STRATQUANT_CHECKS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stratquant/poisson.hpp"
#include "stratquant/rng.hpp"

namespace stratquant {

struct PropertyResult {
    std::string name;
    bool passed = false;
    long instances = 0;
    std::string counterexample;  // empty when passed
};

struct SuiteReport {
    std::string suite;
    std::vector<PropertyResult> properties;

    bool all_passed() const {
        for (const auto& p : properties)
            if (!p.passed) return false;
        return true;
    }
};

/// Knobs for the property suites. The algebras are injectable so a
/// deliberately broken table (mutant build) flows through the whole
/// check pipeline.
struct CheckOptions {
    uint64_t seed = kDefaultSeed;
    std::optional<PresentedPoissonAlgebra> semicone;
    std::optional<PresentedPoissonAlgebra> adjoint_quotient;
};

SuiteReport check_poisson(const CheckOptions& opt = {});
SuiteReport check_lierinehart(const CheckOptions& opt = {});
SuiteReport check_reduction(const CheckOptions& opt = {});
SuiteReport check_fock(const CheckOptions& opt = {});
SuiteReport check_repcount(const CheckOptions& opt = {});

const std::vector<std::string>& check_suite_names();  // includes "all"

/// Run one suite by name (or every suite for "all"); nullopt for an
/// unknown name.
std::optional<std::vector<SuiteReport>> run_checks(const std::string& suite,
                                                   const CheckOptions& opt = {});

}  // namespace stratquant

#endif
