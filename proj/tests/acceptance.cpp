// Acceptance suite: runs every criterion of the built-in verification battery
// and prints one pass/fail line per criterion.

#include <iostream>

#include "kaprekar/verify.hpp"

int main() {
    auto results = kaprekar::verify::run_all();
    bool ok = kaprekar::verify::print_report(std::cout, results);
    return ok ? 0 : 1;
}
