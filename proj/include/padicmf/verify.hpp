#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "padicmf/context.hpp"

namespace padicmf {

struct VerifyConfig {
    PadicContext ctx;
    std::int64_t a = 2;
    int m_max = 3;
    int kummer_k = 1;
    std::uint64_t seed = 20240601;
};

struct SuiteResult {
    std::string name;
    bool passed = true;
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    std::string first_failure;
    std::vector<std::string> details;
    double seconds = 0;
};

/// Names accepted by run_suite, in the order "all" runs them.
const std::vector<std::string>& suite_names();

/// Runs one invariant suite (or "all") at the configured scale. Unknown
/// names and out-of-range Kummer sizes throw InvalidArgument; failed
/// identities are reported, not thrown.
std::vector<SuiteResult> run_suite(const std::string& name, const VerifyConfig& cfg);

} // namespace padicmf
