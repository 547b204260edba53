#ifndef ENUMERA_VERIFY_HPP
#define ENUMERA_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace enumera {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    long long elapsed_ms = 0;
};

// The full verification checklist: formula values, all three degeneration
// ledgers, the configuration and group suites, the fibre checker, and the
// cross-module identities, each with its runtime bound.
std::vector<CheckResult> run_acceptance_checks(std::uint64_t seed = 0, int jobs = 1);

}  // namespace enumera

#endif
