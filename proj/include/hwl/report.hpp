#pragma once

#include <string>
#include <utility>
#include <vector>

namespace hwl {

// pass/fail accumulator shared by the identity- and lemma-check routines;
// failures carry a human-readable witness each
struct IdentityReport {
    bool ok = true;
    std::vector<std::string> failures;

    void fail(std::string msg) {
        ok = false;
        failures.push_back(std::move(msg));
    }
    void check(bool cond, const std::string& msg) {
        if (!cond) fail(msg);
    }
    void merge(const IdentityReport& o) {
        ok = ok && o.ok;
        failures.insert(failures.end(), o.failures.begin(), o.failures.end());
    }
};

} // namespace hwl
