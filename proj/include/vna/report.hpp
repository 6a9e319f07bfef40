// Pass/fail check lists attached to verification results.

#pragma once

#include <string>
#include <vector>

namespace vna {

struct CheckResult {
    std::string check;
    bool pass = false;
    std::string counterexample;  // empty when passing
};

struct Report {
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void add(std::string name, bool pass, std::string counterexample = "") {
        checks.push_back({std::move(name), pass, std::move(counterexample)});
    }
    const CheckResult* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.check == name) return &c;
        return nullptr;
    }
};

}  // namespace vna
