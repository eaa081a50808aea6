#pragma once

// Randomized property checks grouped into suites. Every check draws its
// instances from a generator seeded by (seed, check name), so a single check
// reproduces on its own.

#include "gysin/random.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gysin {

struct VerifyConfig {
    std::uint64_t seed = kDefaultSeed;
    /// Random instances per randomized check.
    int cases = 100;
};

struct CheckResult {
    std::string name;
    std::string description;
    int cases = 0;
    int failures = 0;
    /// Cases in which some compared value was nonzero.
    int nontrivial = 0;
    /// The first few failing instances.
    std::vector<std::string> counterexamples;

    bool passed() const { return failures == 0 && cases > 0; }
};

/// "all", "ring", "extraction", "lemma-ej", "oracle", "degrees", "cross-path".
const std::vector<std::string>& suite_names();

/// Check names of a suite, in run order. Throws ValidationError for an
/// unknown suite.
std::vector<std::string> checks_in_suite(const std::string& suite);

/// Throws ValidationError for an unknown check.
CheckResult run_check(const std::string& name, const VerifyConfig& config);

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyConfig& config);

} // namespace gysin
