#pragma once

#include <iosfwd>

namespace qsix::selftest {

/// Runs the module invariant suites, printing one pass/fail line per
/// group.  Returns the number of failing groups (0 = all pass).
int run_all(std::ostream& out);

} // namespace qsix::selftest
