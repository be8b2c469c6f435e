#pragma once

// Runner behind the jetmoduli command line tool. Kept out of main() so the
// exact output of every subcommand is testable; identical configs produce
// byte-identical documents.

#include <cstdint>
#include <iosfwd>
#include <string>

namespace jetmoduli {

struct CliConfig {
    std::string subcommand;  // dims | series | closed-form | stabilizer | witness | verify
    int n = 2;
    int k = 0;
    int terms = 8;
    int seeds = 5;
    int coeff_range = 10;
    std::uint64_t seed = 1;
    std::string format = "text";  // text | json | csv
    bool deep = false;
    int threads = 0;
};

/// Exit code 0 on success, 1 when `verify` finds a failing check. Invalid
/// configurations throw std::invalid_argument; the tool maps those to exit
/// code 2 with usage text.
int cli_run(const CliConfig& config, std::ostream& out);

}  // namespace jetmoduli
