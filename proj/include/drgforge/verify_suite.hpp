#pragma once

#include <cstdint>

#include "drgforge/bilform.hpp"
#include "drgforge/report.hpp"

namespace drgforge {

struct VerifySuiteOptions {
    std::uint64_t seed = 0;
    int ball2_trials = 2;
    int partition_samples = 8;
    std::uint64_t vertex_cap = kDefaultEnumerationCap;
};

/// Builds Bil_q(e x d) and runs, in order: construction checks, local
/// spectrum checks, mu-graph/sigma/block checks, triangulability conditions,
/// semi-partial geometry extraction, and a ball-2 isomorphism self-test.
/// Checks that exceed their size caps are reported as skipped items.
CheckReport run_verification_suite(long long q, int e, int d,
                                   const VerifySuiteOptions& opts = {});

}  // namespace drgforge
