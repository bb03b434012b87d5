#pragma once

#include <ostream>

namespace qvp {

/// Runs every module's invariant checks, printing one [PASS]/[FAIL]
/// line per check with the measured value. Returns true iff all pass.
bool run_verification(std::ostream& out);

}  // namespace qvp
