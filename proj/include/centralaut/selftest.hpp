#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace centralaut {

enum class Scale { small, full };

struct CriterionResult {
    int number = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

// The acceptance suite: nine independently checkable criteria, each returning
// one verdict line. `small` trims the heaviest sweeps for quick runs; `full`
// is the release gate.
std::vector<CriterionResult> run_acceptance(Scale scale, unsigned jobs = 1);

// Automorphism enumeration budget for the formula-vs-bruteforce sweep: groups
// whose automorphism count exceeds this are reported as skipped (the search
// cost is proportional to the count, and e.g. (Z/2)^9 has ~8.7e26
// automorphisms, far beyond any enumeration).
inline constexpr std::uint64_t kSweepAutBudget = std::uint64_t(1) << 20;

} // namespace centralaut
