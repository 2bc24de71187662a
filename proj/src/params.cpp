#include "kaprekar/params.hpp"

#include <algorithm>
#include <cassert>

namespace kaprekar {

ParamVector::ParamVector(std::vector<int> alphas, int width) : alphas_(std::move(alphas)), width_(width) {
    if (width_ < 2) fail(errc::bad_argument, "width must be at least 2");
    if (static_cast<int>(alphas_.size()) != half_width(width_))
        fail(errc::bad_argument, "parameter count does not match width");
    if (alphas_.front() < 1) fail(errc::bad_argument, "alpha^1 must be >= 1");
    for (std::size_t s = 0; s < alphas_.size(); ++s) {
        if (alphas_[s] < 0 || alphas_[s] > 9) fail(errc::bad_argument, "parameter out of 0..9");
        if (s + 1 < alphas_.size() && alphas_[s] < alphas_[s + 1])
            fail(errc::bad_argument, "parameters must be non-increasing");
    }
}

int ParamVector::nonzero_prefix() const {
    int k = 0;
    while (k < h() && alphas_[static_cast<std::size_t>(k)] > 0) ++k;
    return k;
}

std::string ParamVector::str() const {
    std::string s;
    for (int a : alphas_) s += static_cast<char>('0' + a);
    return s;
}

ParamVector params(const DigitNumber& n) { return ParamVector(raw_params(n), n.width()); }

std::string FamilyTag::str() const {
    switch (kind) {
    case FamilyKind::f1: return "f1";
    case FamilyKind::f2: return "f2r" + std::to_string(first_zero);
    case FamilyKind::f3: return "f3";
    }
    return {};
}

FamilyTag classify(const ParamVector& alpha) {
    int k = alpha.nonzero_prefix();
    if (k == alpha.h()) return FamilyTag{FamilyKind::f1, 0, alpha.width()};
    if (k == 1) return FamilyTag{FamilyKind::f3, 0, alpha.width()};
    return FamilyTag{FamilyKind::f2, k + 1, alpha.width()};
}

DigitNumber apply_f(const ParamVector& alpha) {
    int w = alpha.width();
    int h = alpha.h();
    bool odd = w % 2 != 0;
    FamilyTag tag = classify(alpha);
    std::vector<std::uint8_t> d;
    d.reserve(static_cast<std::size_t>(w));
    auto push = [&](int v) { d.push_back(static_cast<std::uint8_t>(v)); };

    switch (tag.kind) {
    case FamilyKind::f1:
        // (a1 .. a_{h-1}  a_h - 1  [9]  9 - a_h .. 9 - a_2  10 - a1)
        for (int s = 1; s < h; ++s) push(alpha.alpha(s));
        push(alpha.alpha(h) - 1);
        if (odd) push(9);
        for (int s = h; s >= 2; --s) push(9 - alpha.alpha(s));
        push(10 - alpha.alpha(1));
        break;
    case FamilyKind::f2: {
        // (a1 .. a_{r-2}  a_{r-1} - 1  9^v  9 - a_{r-1} .. 9 - a_2  10 - a1),
        // v = 2(h + 1 - r), one extra middle 9 when w is odd.
        int r = tag.first_zero;
        int v = 2 * (h + 1 - r) + (odd ? 1 : 0);
        for (int s = 1; s < r - 1; ++s) push(alpha.alpha(s));
        push(alpha.alpha(r - 1) - 1);
        for (int i = 0; i < v; ++i) push(9);
        for (int s = r - 1; s >= 2; --s) push(9 - alpha.alpha(s));
        push(10 - alpha.alpha(1));
        break;
    }
    case FamilyKind::f3:
        push(alpha.alpha(1) - 1);
        for (int i = 0; i < w - 2; ++i) push(9);
        push(10 - alpha.alpha(1));
        break;
    }
    DigitNumber image = DigitNumber::from_digits(std::move(d));
    assert(check_bw(image, tag).satisfied);
    return image;
}

BwMembership check_bw(const DigitNumber& n, const FamilyTag& tag) {
    int w = n.width();
    int h = half_width(w);
    auto a = [&](int i) { return static_cast<int>(n.digit(i - 1)); }; // 1-based
    auto fails = [&](const char* cond) { return BwMembership{false, cond}; };

    if (n.digit_sum() % 9 != 0) return fails("sum9");

    // A single nonzero parameter (f3, and f1 when h == 1) gives the shape
    // (a-1, 9...9, 10-a): ends sum to 9, everything between is a 9.
    if (tag.kind == FamilyKind::f3 || h == 1) {
        if (a(1) + a(w) != 9) return fails("f3-shape");
        for (int s = 2; s < w; ++s)
            if (a(s) != 9) return fails("f3-shape");
        return BwMembership{true, {}};
    }

    if (a(1) + a(w) != 10) return fails("ends10");

    // f1 behaves like f2 whose zero run starts just past h.
    int r = tag.kind == FamilyKind::f2 ? tag.first_zero : h + 1;
    for (int s = 2; s <= r - 2; ++s)
        if (a(s) + a(w - s + 1) != 9) return fails("pairs9");
    if (a(r - 1) + a(w - r + 2) != 8) return fails("middle8");
    for (int s = r; s <= w - r + 1; ++s)
        if (a(s) != 9) return fails("middle9s");
    return BwMembership{true, {}};
}

std::vector<ParamVector> enumerate_classes(int width) {
    if (width < 2) fail(errc::bad_argument, "width must be at least 2");
    int h = half_width(width);
    std::vector<ParamVector> out;
    std::vector<int> cur(static_cast<std::size_t>(h));
    // Descending lexicographic: extend with values from the previous entry
    // downward, starting at 9.
    auto rec = [&](auto&& self, int s, int maxv) -> void {
        if (s == h) {
            if (cur[0] >= 1) out.emplace_back(cur, width);
            return;
        }
        for (int v = maxv; v >= 0; --v) {
            cur[static_cast<std::size_t>(s)] = v;
            self(self, s + 1, v);
        }
    };
    rec(rec, 0, 9);
    return out;
}

} // namespace kaprekar
