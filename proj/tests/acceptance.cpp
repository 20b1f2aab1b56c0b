// Acceptance gate: runs every criterion at full scale and prints one verdict
// line each. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <cstring>

#include "centralaut/selftest.hpp"

int main(int argc, char** argv) {
    using namespace centralaut;
    Scale scale = Scale::full;
    unsigned jobs = 2;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--small") == 0) scale = Scale::small;
        if (std::strcmp(argv[i], "--jobs") == 0 && i + 1 < argc)
            jobs = static_cast<unsigned>(std::strtoul(argv[++i], nullptr, 10));
    }
    bool all = true;
    auto t0 = std::chrono::steady_clock::now();
    for (const auto& r : run_acceptance(scale, jobs)) {
        std::printf("criterion %d [%s]: %s — %s (%.1f s)\n", r.number, r.passed ? "PASS" : "FAIL",
                    r.name.c_str(), r.detail.c_str(), r.seconds);
        std::fflush(stdout);
        all = all && r.passed;
    }
    auto secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("acceptance: %s (%.1f s)\n", all ? "ALL PASS" : "FAILURES", secs);
    return all ? 0 : 1;
}
