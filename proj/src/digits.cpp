#include "kaprekar/digits.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace kaprekar {

namespace {

bool all_equal(const std::vector<std::uint8_t>& ds) {
    return std::all_of(ds.begin(), ds.end(), [&](std::uint8_t d) { return d == ds.front(); });
}

} // namespace

DigitNumber DigitNumber::parse(std::string_view text, int width) {
    if (width < 2) fail(errc::bad_argument, "width must be at least 2");
    if (static_cast<int>(text.size()) > width)
        fail(errc::too_wide, "'" + std::string(text) + "' has more than " + std::to_string(width) + " digits");
    std::vector<std::uint8_t> ds(static_cast<std::size_t>(width), 0);
    std::size_t pad = static_cast<std::size_t>(width) - text.size();
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c < '0' || c > '9')
            fail(errc::non_digit, "'" + std::string(text) + "' contains a non-digit character");
        ds[pad + i] = static_cast<std::uint8_t>(c - '0');
    }
    if (all_equal(ds))
        fail(errc::repdigit_input, "'" + std::string(text) + "' padded to width " + std::to_string(width) +
                                       " has all digits equal");
    return DigitNumber(std::move(ds));
}

DigitNumber DigitNumber::from_digits(std::vector<std::uint8_t> digits) {
    if (digits.size() < 2) fail(errc::bad_argument, "width must be at least 2");
    for (std::uint8_t d : digits)
        if (d > 9) fail(errc::non_digit, "digit out of range");
    if (all_equal(digits)) fail(errc::repdigit_input, "all digits equal");
    return DigitNumber(std::move(digits));
}

int DigitNumber::digit_sum() const {
    return std::accumulate(digits_.begin(), digits_.end(), 0);
}

std::string DigitNumber::str() const {
    std::string s(digits_.size(), '0');
    for (std::size_t i = 0; i < digits_.size(); ++i) s[i] = static_cast<char>('0' + digits_[i]);
    return s;
}

SortedPair sort_pair(const DigitNumber& n) {
    std::vector<std::uint8_t> desc = n.digits();
    std::sort(desc.begin(), desc.end(), std::greater<>());
    std::vector<std::uint8_t> asc(desc.rbegin(), desc.rend());
    return SortedPair{DigitNumber::from_digits(std::move(desc)), DigitNumber::from_digits(std::move(asc))};
}

DigitNumber kaprekar_step(const DigitNumber& n) {
    // Schoolbook borrow subtraction on the digit vectors keeps every width
    // exact; native integers would cap w at 19.
    SortedPair p = sort_pair(n);
    const auto& x = p.descending.digits();
    const auto& y = p.ascending.digits();
    int w = n.width();
    std::vector<std::uint8_t> out(static_cast<std::size_t>(w), 0);
    int borrow = 0;
    for (int i = w - 1; i >= 0; --i) {
        int d = static_cast<int>(x[static_cast<std::size_t>(i)]) - y[static_cast<std::size_t>(i)] - borrow;
        borrow = d < 0;
        out[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(d + 10 * borrow);
    }
    return DigitNumber::from_digits(std::move(out));
}

DigitNumber iterate(const DigitNumber& n, int r) {
    if (r < 0) fail(errc::bad_argument, "iteration count must be >= 0");
    DigitNumber cur = n;
    for (int i = 0; i < r; ++i) cur = kaprekar_step(cur);
    return cur;
}

Orbit orbit(const DigitNumber& n, int limit) {
    if (limit < 1) fail(errc::bad_argument, "orbit limit must be >= 1");
    Orbit o{n, {}, OrbitEnd::truncated, 0};
    std::set<DigitNumber> seen;
    seen.insert(n);
    DigitNumber cur = n;
    for (int i = 0; i < limit; ++i) {
        cur = kaprekar_step(cur);
        o.steps.push_back(cur);
        if (seen.contains(cur)) {
            // The repeated value closes the loop and stays as the last step;
            // the cycle length is the gap between its two occurrences.
            int last = static_cast<int>(o.steps.size()) - 1;
            int first = -1; // position of `n`
            for (int j = 0; j < last; ++j)
                if (o.steps[static_cast<std::size_t>(j)] == cur) {
                    first = j;
                    break;
                }
            if (first == -1 && cur != n)
                first = last; // unreachable; keeps the invariant obvious
            o.cycle_length = last - first;
            o.terminal = o.cycle_length == 1 ? OrbitEnd::fixed_point : OrbitEnd::entered_cycle;
            return o;
        }
        seen.insert(cur);
    }
    return o;
}

std::vector<int> raw_params(const DigitNumber& n) {
    const std::vector<std::uint8_t> x = sort_pair(n).descending.digits();
    int w = n.width();
    int h = half_width(w);
    std::vector<int> a(static_cast<std::size_t>(h));
    for (int s = 0; s < h; ++s)
        a[static_cast<std::size_t>(s)] =
            static_cast<int>(x[static_cast<std::size_t>(s)]) - x[static_cast<std::size_t>(w - s - 1)];
    return a;
}

} // namespace kaprekar
