#pragma once

// The built-in verification battery: every reference result the library is
// expected to reproduce, one criterion per entry, each with pass/fail and
// detail lines. Shared by the acceptance suite and the CLI.

#include <iosfwd>
#include <string>
#include <vector>

namespace kaprekar::verify {

struct CriterionResult {
    int number = 0;
    std::string name;
    bool pass = false;
    std::vector<std::string> details;
};

std::vector<CriterionResult> run_all();

/// One line per criterion plus detail lines; returns true when all pass.
bool print_report(std::ostream& os, const std::vector<CriterionResult>& results);

} // namespace kaprekar::verify
