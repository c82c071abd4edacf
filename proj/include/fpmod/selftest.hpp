#pragma once

#include <iosfwd>

namespace fpmod {

// Runs the acceptance checks, one line of output per criterion; true when all
// of them pass.
bool run_selftest(std::ostream& out);

}  // namespace fpmod
