#ifndef ALCOVE_SELFTEST_HPP
#define ALCOVE_SELFTEST_HPP

#include <ostream>

namespace alcove {

/// Runs the embedded acceptance sweeps, printing one PASS/FAIL line per
/// criterion.  Output is a pure function of the library (no timings, no
/// environment).  Returns the number of failed criteria.
int run_selftest(std::ostream& out);

}  // namespace alcove

#endif
