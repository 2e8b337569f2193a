#pragma once

#include "g2calib/json_io.hpp"

#include <cstdint>

namespace g2calib {

/// Command façade shared by the CLI binary and the tests.  Exit codes:
/// 0 success, 1 a reported check failed, 2 parse error, 3 precondition or
/// invariant violation (the latter two surface as exceptions from the
/// parsers and operations and are mapped by the caller).
struct CommandOutcome {
    RunReport report;
    int exit_code = 0;
};

CommandOutcome cmd_verify_identities(std::uint64_t seed, long trials);
CommandOutcome cmd_classify_plane(const Json& input, int grid_resolution = 32);
CommandOutcome cmd_boundary_split(const Json& input, double tol = 1e-9);
CommandOutcome cmd_index(const Json& input);
CommandOutcome cmd_ebc_check(int grid_resolution);
CommandOutcome cmd_chern(const Json& input, double admissibility = 1e-6);
CommandOutcome cmd_maslov(const Json& input);
CommandOutcome cmd_fixed_loci(const Json& input);
CommandOutcome cmd_census(const Json& input);
CommandOutcome cmd_paper_examples();

} // namespace g2calib
