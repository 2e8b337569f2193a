#pragma once

#include "g2calib/kform.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace g2calib {

struct IdentityCheck {
    std::string name;
    bool pass = false;
    double worst = 0; // largest deviation seen (0 for exact checks)
    long trials = 0;
};

struct IdentitySuiteResult {
    std::vector<IdentityCheck> checks;
    bool all_pass = true;
};

/// Seeded random verification of the pointwise algebra: the associator
/// against its cross-product expression, the 4-form against the associator
/// pairing, the cross-product norm identity, comass of the 3-form on
/// orthonormal frames, the 3-form against the cross product, plus the exact
/// rational checks (Hodge dual and induced metric of the standard form).
/// phi0_override substitutes the 3-form table used by the evaluation-based
/// checks; it exists so a corrupted table demonstrably fails the suite.
IdentitySuiteResult run_identity_suite(std::uint64_t seed, long trials,
                                       const KForm<double>* phi0_override = nullptr);

} // namespace g2calib
