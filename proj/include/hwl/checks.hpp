#pragma once

// Named check rollup used by the lemma suite and the verify-all driver.

#include <string>
#include <utility>
#include <vector>

namespace hwl {

struct NamedCheck {
    std::string name;
    bool ok = false;
    std::string detail; // first witness on failure, optional note on success
};

struct CheckSuite {
    std::vector<NamedCheck> checks;

    void add(std::string name, bool ok, std::string detail = {}) {
        checks.push_back({std::move(name), ok, std::move(detail)});
    }
    bool ok() const {
        for (const auto& c : checks)
            if (!c.ok) return false;
        return true;
    }
};

} // namespace hwl
