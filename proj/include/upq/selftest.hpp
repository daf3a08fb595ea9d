#pragma once

#include <iosfwd>
#include <string>

namespace upq {

struct SelfTestOutcome {
    int groups_run = 0;
    int groups_failed = 0;
    std::string first_failure;  // "group: detail" of the first failing check
};

// Runs the golden cases and the quick property suites, printing one line
// per group. filter selects groups by substring; empty runs everything.
SelfTestOutcome run_selftest(const std::string& golden_dir, const std::string& filter,
                             std::ostream& out);

// --golden flag > UPQ_GOLDEN_DIR env > compiled-in source location.
std::string default_golden_dir();

}  // namespace upq
