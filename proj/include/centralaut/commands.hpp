#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "centralaut/report.hpp"
#include "centralaut/selftest.hpp"

namespace centralaut {

// Exit codes shared by every subcommand: 0 success, 2 invalid input,
// 3 mathematical check or hypothesis failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitCheckFailed = 3;

struct CommonOptions {
    bool json = false;
    unsigned jobs = 1;
    std::uint64_t brute_bound = 750;
};

struct AutOrderArgs {
    std::uint64_t p = 0;
    std::vector<std::uint32_t> exponents;
    bool verify_bruteforce = false;
};

struct CountRestrictedArgs {
    std::uint64_t p = 0;
    std::vector<std::uint32_t> exponents;
    bool enumerate = false;
};

struct ExtendArgs {
    std::string source;               // file path, "builtin:<name>", or inline JSON
    std::optional<std::string> theta; // row-major matrix, rows ';'-separated
    bool all = false;
    std::uint64_t exhaustion_bound = 729;
    std::uint64_t sample_pairs = 10000;
};

struct VerifyConjectureArgs {
    std::string source;  // file path or "builtin:<name>"
    std::optional<std::uint64_t> p;
};

struct SelftestArgs {
    Scale scale = Scale::small;
};

// Each command fills a RunReport and returns the exit code.
int run_aut_order(const AutOrderArgs& args, const CommonOptions& common, RunReport& report);
int run_count_restricted(const CountRestrictedArgs& args, const CommonOptions& common,
                         RunReport& report);
int run_extend(const ExtendArgs& args, const CommonOptions& common, RunReport& report);
int run_verify_conjecture(const VerifyConjectureArgs& args, const CommonOptions& common,
                          RunReport& report);
int run_selftest(const SelftestArgs& args, const CommonOptions& common, RunReport& report);

} // namespace centralaut
