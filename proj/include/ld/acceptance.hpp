#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ld::acceptance {

struct criterion_result {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;  // failure description or summary stats
    double seconds = 0.0;
};

// Runs every criterion whose name contains `filter` (all when empty),
// printing one PASS/FAIL line per criterion to `out`.
std::vector<criterion_result> run(std::ostream& out, const std::string& filter,
                                  std::uint64_t seed);

// Convenience wrapper: 0 when everything passed, 1 otherwise.
int run_and_report(std::ostream& out, const std::string& filter, std::uint64_t seed);

std::uint64_t default_seed();

// Reads LD_SEED from the environment, falling back to default_seed().
std::uint64_t seed_from_env();

}  // namespace ld::acceptance
