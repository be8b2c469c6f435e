#pragma once

// The verification suite behind `jetmoduli verify` and the acceptance test:
// one check per acceptance criterion, every comparison exact.
//
// Empirical rank checks are capped at n <= 3, k <= 2 plus n = 4, k <= 1 so a
// default run finishes in about a minute; deep mode extends dimension 4 to
// k = 2. Checks are independent and may run on several threads (capped by the
// JETMODULI_THREADS environment variable); results always come back in check
// order.

#include <string>
#include <vector>

namespace jetmoduli {

struct CheckResult {
    std::string id;
    std::string name;
    std::string paper_ref;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    bool deep = false;
    int threads = 0;  // 0 = JETMODULI_THREADS env var, else hardware default
};

std::vector<CheckResult> run_acceptance_suite(const VerifyOptions& options = {});

/// Thread count after applying the environment cap.
int resolve_verify_threads(int requested);

}  // namespace jetmoduli
