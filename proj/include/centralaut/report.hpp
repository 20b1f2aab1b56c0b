#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace centralaut {

enum class CheckStatus { pass, fail, skip };

struct Check {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::string detail;  // witness on failure, reason on skip
};

/**
 * Machine-readable result of one command run. Every check performed is
 * listed with an explicit verdict; nothing is silently omitted. Rendering is
 * byte-stable for fixed inputs except for the timing field.
 */
struct RunReport {
    std::string command;
    nlohmann::ordered_json inputs;
    nlohmann::ordered_json results;
    std::vector<Check> checks;
    double timing_ms = 0.0;

    void add_pass(const std::string& name, const std::string& detail = "");
    void add_fail(const std::string& name, const std::string& detail);
    void add_skip(const std::string& name, const std::string& reason);

    bool all_passed() const;  // skips do not count as failures

    nlohmann::ordered_json to_json(bool include_timing = true) const;
    std::string to_text() const;
};

const char* status_name(CheckStatus s);

} // namespace centralaut
