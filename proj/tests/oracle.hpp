#pragma once

// Reference implementations used as independent oracles: plain integer and
// string arithmetic, no shared code with the library under test.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

inline std::string pad(long long v, int w) {
    std::string s = std::to_string(v);
    s.insert(0, static_cast<std::size_t>(w) - s.size(), '0');
    return s;
}

inline bool repdigit(const std::string& s) {
    return std::all_of(s.begin(), s.end(), [&](char c) { return c == s[0]; });
}

// One routine step on a zero-padded decimal string (width <= 18).
inline long long ref_step(long long v, int w) {
    std::string d = pad(v, w);
    std::sort(d.begin(), d.end(), std::greater<char>());
    std::string a(d.rbegin(), d.rend());
    return std::stoll(d) - std::stoll(a);
}

inline long long ref_iterate(long long v, int w, int r) {
    for (int i = 0; i < r; ++i) v = ref_step(v, w);
    return v;
}

// Attractor of the orbit: first repeated value, with the cycle length.
struct RefOrbit {
    long long attractor = -1;
    int cycle_length = 0;
};

inline RefOrbit ref_orbit(long long v, int w, int limit = 1000) {
    std::vector<long long> seen{v};
    for (int i = 0; i < limit; ++i) {
        v = ref_step(v, w);
        auto it = std::find(seen.begin(), seen.end(), v);
        if (it != seen.end())
            return RefOrbit{v, static_cast<int>(seen.end() - it)};
        seen.push_back(v);
    }
    return RefOrbit{};
}

// All distinct attractor cycles over every non-repdigit width-w number,
// each cycle as the sorted set of its member values.
inline std::set<std::vector<long long>> ref_number_cycles(int w) {
    long long total = 1;
    for (int i = 0; i < w; ++i) total *= 10;
    std::set<std::vector<long long>> cycles;
    for (long long v = 0; v < total; ++v) {
        if (repdigit(pad(v, w))) continue;
        RefOrbit o = ref_orbit(v, w);
        std::vector<long long> cyc{o.attractor};
        long long x = o.attractor;
        for (int i = 1; i < o.cycle_length; ++i) {
            x = ref_step(x, w);
            cyc.push_back(x);
        }
        std::sort(cyc.begin(), cyc.end());
        cycles.insert(cyc);
    }
    return cycles;
}

// Parameter tuple of a number, recomputed from scratch.
inline std::vector<int> ref_params(long long v, int w) {
    std::string d = pad(v, w);
    std::sort(d.begin(), d.end(), std::greater<char>());
    int h = w / 2;
    std::vector<int> a(static_cast<std::size_t>(h));
    for (int s = 0; s < h; ++s)
        a[static_cast<std::size_t>(s)] = d[static_cast<std::size_t>(s)] - d[static_cast<std::size_t>(w - 1 - s)];
    return a;
}

} // namespace oracle
