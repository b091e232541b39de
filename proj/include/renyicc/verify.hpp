#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace renyicc {

inline constexpr std::uint64_t kDefaultSeed = 20020901;

struct PropertyCheck {
    std::string suite;
    std::string name;
    std::size_t trials = 0;
    std::size_t failures = 0;
    std::string first_failure; ///< empty when everything passed

    bool passed() const { return failures == 0; }
};

/// Suite names accepted by run_verification, besides "all".
const std::vector<std::string>& verification_suites();

/// Runs the seeded invariant checks of one suite ("all" runs every suite).
/// Throws InputError on an unknown suite name. Output is a pure function
/// of (suite, seed).
std::vector<PropertyCheck> run_verification(const std::string& suite, std::uint64_t seed);

/// One line per check plus a summary line.
std::string format_verification(const std::vector<PropertyCheck>& checks, const std::string& suite,
                                std::uint64_t seed);

} // namespace renyicc
