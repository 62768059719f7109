#pragma once

#include <vector>

#include "fcamine/context.hpp"

namespace fcatest {

/// Eight-case dataset exercised throughout the suite; small enough that every
/// expected value can be counted by hand.
inline const std::vector<fcamine::CaseReport>& reference_cases() {
    static const std::vector<fcamine::CaseReport> cases = {
        {"P1", {"M"}, {"D1", "D3"}, {"AE1"}},
        {"P2", {"M"}, {"D1", "D2", "D3"}, {"AE1"}},
        {"P3", {"M"}, {"D1", "D3"}, {"AE1", "AE2"}},
        {"P4", {"F"}, {"D1"}, {"AE1"}},
        {"P5", {"F"}, {"D2"}, {"AE2"}},
        {"P6", {"F"}, {"D2"}, {"AE2"}},
        {"P7", {"F"}, {"D4", "D5"}, {"AE2"}},
        {"P8", {"F"}, {"D4", "D5"}, {"AE2"}},
    };
    return cases;
}

inline const fcamine::FormalContext& reference_context() {
    static const fcamine::FormalContext ctx = fcamine::FormalContext::ingest(reference_cases());
    return ctx;
}

}  // namespace fcatest
