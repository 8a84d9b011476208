#ifndef TILTWALL_TOOLS_SELFTEST_HPP
#define TILTWALL_TOOLS_SELFTEST_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace tiltwall::cli {

struct SuiteResult {
    std::string name;
    std::size_t passed = 0;
    std::size_t total = 0;

    [[nodiscard]] bool ok() const { return passed == total; }
};

/// The randomized identity suites; deterministic for a given seed.
std::vector<SuiteResult> run_selftest(std::uint64_t seed, std::size_t samples);

}  // namespace tiltwall::cli

#endif  // TILTWALL_TOOLS_SELFTEST_HPP
