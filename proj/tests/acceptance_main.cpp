// Release gate runner: one line per criterion, nonzero exit if any fails.
#include <cstdio>
#include "secular/acceptance.hpp"

int main() {
    std::vector<secular::CriterionResult> results = secular::run_acceptance();
    bool all = true;
    for (const auto& r : results) {
        std::printf("%s  %2d  %-32s  %s\n", r.pass ? "PASS" : "FAIL", r.index, r.name.c_str(),
                    r.detail.c_str());
        std::fflush(stdout);
        all = all && r.pass;
    }
    std::printf("%s\n", all ? "ALL CRITERIA PASSED" : "CRITERIA FAILED");
    return all ? 0 : 3;
}
