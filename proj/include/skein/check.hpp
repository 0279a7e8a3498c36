#pragma once

#include <string>
#include <vector>

namespace skein {

// One named identity with its verdict.
struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
    // Unasserted checks record claims known to disagree with the computed matrices; they are
    // reported but do not decide the verdict.
    bool asserted = true;
};

struct CheckReport {
    std::vector<Check> checks;

    void add(std::string name, bool pass, std::string detail = {}) {
        checks.push_back({std::move(name), pass, std::move(detail), true});
    }
    void add_unasserted(std::string name, bool pass, std::string detail = {}) {
        checks.push_back({std::move(name), pass, std::move(detail), false});
    }
    void append(const CheckReport& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }
    bool all_pass() const {
        for (const auto& c : checks)
            if (c.asserted && !c.pass) return false;
        return true;
    }
    const Check* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
    std::vector<std::string> failures() const {
        std::vector<std::string> out;
        for (const auto& c : checks)
            if (c.asserted && !c.pass) out.push_back(c.name);
        return out;
    }
};

}  // namespace skein
