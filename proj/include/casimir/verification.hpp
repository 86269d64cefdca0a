#pragma once

#include <string>
#include <vector>

namespace casimir {

/// Outcome of an axiom or identity check. Failures are collected with their
/// witnesses instead of being thrown, so callers can report all of them.
struct Verification {
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
    void add_failure(std::string what) { failures.push_back(std::move(what)); }
    void check(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
    void merge(const Verification& other, const std::string& prefix = "") {
        for (const auto& f : other.failures) failures.push_back(prefix + f);
    }
    std::string summary() const {
        std::string out;
        for (const auto& f : failures) out += (out.empty() ? "" : "; ") + f;
        return out;
    }
};

}  // namespace casimir
