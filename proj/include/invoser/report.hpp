#pragma once

#include <string>
#include <vector>

namespace invoser {

// Outcome of an identity check: the count of verified instances and one line
// per failing instance. Empty failure list means the identity held throughout.
struct CheckReport {
    std::string name;
    int checks = 0;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }

    void note_failure(std::string what) { failures.push_back(std::move(what)); }

    std::string summary() const {
        std::string s = name + ": " + std::to_string(checks) + " checks, " +
                        (passed() ? "pass" : std::to_string(failures.size()) + " FAILED");
        return s;
    }
};

}  // namespace invoser
