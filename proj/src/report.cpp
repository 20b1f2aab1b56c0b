#include "centralaut/report.hpp"

#include <sstream>

namespace centralaut {

const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skip: return "skip";
    }
    return "?";
}

void RunReport::add_pass(const std::string& name, const std::string& detail) {
    checks.push_back({name, CheckStatus::pass, detail});
}

void RunReport::add_fail(const std::string& name, const std::string& detail) {
    checks.push_back({name, CheckStatus::fail, detail});
}

void RunReport::add_skip(const std::string& name, const std::string& reason) {
    checks.push_back({name, CheckStatus::skip, reason});
}

bool RunReport::all_passed() const {
    for (const auto& c : checks)
        if (c.status == CheckStatus::fail) return false;
    return true;
}

nlohmann::ordered_json RunReport::to_json(bool include_timing) const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["results"] = results;
    nlohmann::ordered_json cs = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json cj;
        cj["name"] = c.name;
        cj["status"] = status_name(c.status);
        if (!c.detail.empty()) cj["detail"] = c.detail;
        cs.push_back(std::move(cj));
    }
    j["checks"] = std::move(cs);
    if (include_timing) j["timing_ms"] = timing_ms;
    return j;
}

std::string RunReport::to_text() const {
    std::ostringstream os;
    os << "command: " << command << "\n";
    if (!results.empty()) {
        os << "results:\n";
        for (const auto& [key, value] : results.items()) {
            os << "  " << key << ": ";
            if (value.is_string()) os << value.get<std::string>();
            else os << value.dump();
            os << "\n";
        }
    }
    if (!checks.empty()) {
        os << "checks:\n";
        for (const auto& c : checks) {
            os << "  " << c.name << ": " << status_name(c.status);
            if (!c.detail.empty()) os << " (" << c.detail << ")";
            os << "\n";
        }
    }
    return os.str();
}

} // namespace centralaut
