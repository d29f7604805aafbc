#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "zdbox/bounds.hpp"

namespace zdbox::cli {

/// Exit statuses shared by every subcommand.
enum Exit : int { ok = 0, verification_failed = 1, usage_error = 2, resource_limit = 3 };

/// Human-readable summary ending in the verdict line ("box = 2 (case: general) ... VERIFIED").
std::string format_analysis(const BoxicityReport& r);

struct ScanRow {
    Nat N = 0;
    CaseLabel case_label = CaseLabel::general;
    Nat box_lo = 0;
    Nat box_hi = 0;
    bool verified = false;
};

/// certify_zn for every N in [from, to] on `jobs` worker threads; rows in ascending N.
std::vector<ScanRow> scan(Nat from, Nat to, unsigned jobs = 1);

/// Entry point behind the zdbox executable.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zdbox::cli
