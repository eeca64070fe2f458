#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qsep {

struct CheckResult {
    std::string name;
    bool pass = false;
    double residual = 0.0;  // worst observed deviation, on the check's own scale
    std::string note;
};

struct SuiteResult {
    std::string name;
    std::vector<CheckResult> checks;
    bool passed() const;
};

/// vertices, containment, gap, appendix, convexity.
const std::vector<std::string>& verify_suite_names();

/// Runs one named suite with a fixed seed (checks are deterministic given
/// the seed). Throws DomainError for an unknown suite name.
SuiteResult run_verify_suite(const std::string& suite, std::uint64_t seed);

/// "all" runs every suite in order.
std::vector<SuiteResult> run_verify(const std::string& suite_or_all, std::uint64_t seed);

}  // namespace qsep
