#pragma once

#include <stdexcept>
#include <string>

namespace kaprekar {

enum class errc {
    non_digit,        // input text contains a non-decimal character
    too_wide,         // input text longer than the requested width
    repdigit_input,   // all digits equal; excluded from the working set
    width_mismatch,   // operands of different widths
    out_of_domain,    // point violates a function's domain constraint
    not_a_fixed_point,
    bad_argument,
};

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

} // namespace kaprekar
