#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace zdbox {

/// One disagreement found by a verifier.
struct Failure {
    std::string u;
    std::string v;
    std::string dimension;  ///< dimension label, or the name of the check ("witness", "independence")
    bool expected = false;  ///< what the target graph says (adjacent?)
    bool got = false;       ///< what the certificate says
    std::string reason;

    friend bool operator==(const Failure&, const Failure&) = default;
};

/// Outcome of one check. Only the first kMaxRecorded failures are kept; failure_count is exact.
struct Verdict {
    static constexpr std::size_t kMaxRecorded = 32;

    std::string check;
    std::size_t failure_count = 0;
    std::vector<Failure> failures;

    bool ok() const { return failure_count == 0; }

    void fail(Failure f) {
        ++failure_count;
        if (failures.size() < kMaxRecorded) failures.push_back(std::move(f));
    }

    void merge(const Verdict& other) {
        for (const auto& f : other.failures)
            if (failures.size() < kMaxRecorded) failures.push_back(f);
        failure_count += other.failure_count;
    }

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

}  // namespace zdbox
