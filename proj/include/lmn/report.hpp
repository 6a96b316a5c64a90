#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace lmn {

/// Outcome of a theorem or identity check: pass, or the first counterexample.
///
/// A failing report always carries a witness: an ordered list of
/// (field, value) pairs locating the violation, with all numeric values
/// rendered as decimal strings. Checks never throw on a failed claim;
/// exceptions are reserved for misuse (bad arguments, blown budgets).
struct VerificationReport {
    std::string claim;
    bool passed = false;
    std::uint64_t cases_checked = 0;
    std::string message;  // one-line failure summary, empty on pass
    std::vector<std::pair<std::string, std::string>> witness;

    static VerificationReport pass(std::string claim, std::uint64_t cases) {
        VerificationReport r;
        r.claim = std::move(claim);
        r.passed = true;
        r.cases_checked = cases;
        return r;
    }

    static VerificationReport fail(std::string claim, std::uint64_t cases, std::string message,
                                   std::vector<std::pair<std::string, std::string>> witness) {
        VerificationReport r;
        r.claim = std::move(claim);
        r.passed = false;
        r.cases_checked = cases;
        r.message = std::move(message);
        r.witness = std::move(witness);
        return r;
    }

    /// Look up a witness field; nullptr if absent.
    const std::string* find(const std::string& key) const {
        for (const auto& [k, v] : witness)
            if (k == key) return &v;
        return nullptr;
    }
};

}  // namespace lmn
