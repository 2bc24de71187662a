#pragma once

// Exact digit-level arithmetic for the base-10 Kaprekar routine: width-w digit
// vectors (leading zeros allowed, repdigits excluded), the sort/subtract step,
// orbits, and parameter extraction.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kaprekar/error.hpp"

namespace kaprekar {

/// A width-w base-10 number as a digit vector, most significant digit first.
/// Repdigits (all digits equal) are rejected at construction, so every
/// downstream operation is total.
class DigitNumber {
public:
    /// Parse `text` and left-pad with zeros to `width`.
    static DigitNumber parse(std::string_view text, int width);
    /// Wrap an explicit digit vector (values 0..9, size >= 2).
    static DigitNumber from_digits(std::vector<std::uint8_t> digits);

    int width() const { return static_cast<int>(digits_.size()); }
    const std::vector<std::uint8_t>& digits() const { return digits_; }
    std::uint8_t digit(int i) const { return digits_[static_cast<std::size_t>(i)]; }

    int digit_sum() const;
    std::string str() const;

    friend bool operator==(const DigitNumber&, const DigitNumber&) = default;
    friend auto operator<=>(const DigitNumber&, const DigitNumber&) = default;

private:
    explicit DigitNumber(std::vector<std::uint8_t> digits) : digits_(std::move(digits)) {}
    std::vector<std::uint8_t> digits_;
};

/// Digits sorted descending plus the exact reversal.
struct SortedPair {
    DigitNumber descending;
    DigitNumber ascending;
};

enum class OrbitEnd { fixed_point, entered_cycle, truncated };

/// Trace of repeated steps: steps[0] == step(start), steps[i+1] == step(steps[i]).
struct Orbit {
    DigitNumber start;
    std::vector<DigitNumber> steps;
    OrbitEnd terminal = OrbitEnd::truncated;
    int cycle_length = 0; // set when terminal != truncated (fixed point == 1)

    /// The value that repeated (the first cycle member reached); only valid
    /// when a cycle/fixed point was detected.
    const DigitNumber& attractor() const { return steps.back(); }
};

SortedPair sort_pair(const DigitNumber& n);

/// One routine step: descending sort minus ascending sort, zero-padded to the
/// same width. The image's digit sum is always a multiple of 9.
DigitNumber kaprekar_step(const DigitNumber& n);

/// r-fold application; r == 0 returns n unchanged.
DigitNumber iterate(const DigitNumber& n, int r);

/// Steps until a value repeats or `limit` steps were taken.
Orbit orbit(const DigitNumber& n, int limit = 1000);

/// Parameter extraction: alpha_s = x_s - x_{w-s+1} on the descending sort,
/// s = 1..h with h = w/2 (even w) or (w-1)/2 (odd w).
std::vector<int> raw_params(const DigitNumber& n);

inline int half_width(int width) { return width / 2; }

} // namespace kaprekar
