#pragma once

#include <string>
#include <vector>

namespace hyperoct {

/// One reproducibility check: a frozen expected value against the value the
/// library computes, compared as canonical strings.
struct VerificationRecord {
    std::string check_id;
    std::string expected;
    std::string actual;
    bool pass = false;
    int n = 0;  // group degree the check concerns; used by the max-n filter
};

/// The full check suite, grouped by zero-padded criterion prefix in check_id.
/// max_n in [2,7]; max_n = 7 runs everything, smaller values keep only the
/// checks tied to groups of degree <= max_n. corrupt flips one fixture entry
/// as a negative control.
std::vector<VerificationRecord> verification_suite(int max_n, bool corrupt = false);

}  // namespace hyperoct
