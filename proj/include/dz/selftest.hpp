// End-to-end acceptance checks. Each criterion prints one PASS/FAIL line to
// the given stream; the return value is the number of failures.
#ifndef DZ_SELFTEST_HPP
#define DZ_SELFTEST_HPP

#include <ostream>

namespace dz {

int run_acceptance(std::ostream& out);

}  // namespace dz

#endif
