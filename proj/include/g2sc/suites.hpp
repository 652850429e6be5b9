#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace g2sc {

struct CheckResult {
    std::string name;
    bool ok = false;
    std::vector<std::string> detail;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;

    bool ok() const;
    std::size_t failures() const;
};

/** octonion, weyl, divdiff, families, ring, equivariant, impossibility, positivity, quadric. */
const std::vector<std::string>& suite_names();

/** "all" runs every suite in order. Throws std::invalid_argument for unknown names. */
std::vector<SuiteReport> run_suite(const std::string& name, std::uint64_t seed);

/** Acceptance criteria 1..12, each a conjunction of exact checks. */
CheckResult acceptance_criterion(int k, std::uint64_t seed);
constexpr int kNumCriteria = 12;

}  // namespace g2sc
