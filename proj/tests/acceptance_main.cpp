// Acceptance gate: runs every criterion at full strength and prints one
// PASS/FAIL line per check as it finishes. Exit status 0 only if all pass.

#include "freelog/verify.hpp"

#include <cstdio>
#include <string>

int main(int argc, char** argv) {
    const bool quick = argc > 1 && std::string(argv[1]) == "--quick";
    bool all_passed = true;
    for (int id = 1; id <= freelog::acceptance_check_count(); ++id) {
        freelog::CheckResult r = freelog::run_acceptance_check(id, quick);
        all_passed = all_passed && r.passed;
        std::printf("%s %d %-22s %s (%.1fs)\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(),
                    r.detail.c_str(), r.seconds);
        std::fflush(stdout);
    }
    return all_passed ? 0 : 1;
}
