#pragma once

// The parameter algebra: parameter tuples with the ordering constraint, the
// three image-shape families f1/f2/f3, and image-shape membership checks.

#include <string>
#include <vector>

#include "kaprekar/digits.hpp"

namespace kaprekar {

/// The tuple alpha = (alpha^1 .. alpha^h) of symmetric digit differences of a
/// width-w number. Invariants: alpha^1 >= 1, 0 <= alpha^s <= 9, non-increasing.
class ParamVector {
public:
    ParamVector(std::vector<int> alphas, int width);

    int width() const { return width_; }
    int h() const { return static_cast<int>(alphas_.size()); }
    const std::vector<int>& alphas() const { return alphas_; }
    int alpha(int s) const { return alphas_[static_cast<std::size_t>(s - 1)]; } // 1-based

    /// Number of leading nonzero parameters.
    int nonzero_prefix() const;

    /// Digits concatenated, e.g. (8,6,1) -> "861".
    std::string str() const;

    friend bool operator==(const ParamVector&, const ParamVector&) = default;
    friend auto operator<=>(const ParamVector&, const ParamVector&) = default;

private:
    std::vector<int> alphas_;
    int width_;
};

/// Extract the parameters of a number.
ParamVector params(const DigitNumber& n);

enum class FamilyKind { f1, f2, f3 };

/// Which image-shape family a parameter tuple belongs to. f1: all parameters
/// nonzero; f3: only alpha^1 nonzero; f2: nonzero prefix of length r-1 >= 2
/// followed by zeros (r = index of the first zero parameter).
struct FamilyTag {
    FamilyKind kind = FamilyKind::f1;
    int first_zero = 0; // r, only meaningful for f2
    int width = 0;

    bool odd() const { return width % 2 != 0; }
    std::string str() const;

    friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

FamilyTag classify(const ParamVector& alpha);

/// The common image of every number with the given parameters, laid out in
/// the family's canonical digit order.
DigitNumber apply_f(const ParamVector& alpha);

/// Result of checking the image-shape conditions for a candidate image.
struct BwMembership {
    bool satisfied = false;
    std::string failed_condition; // one of sum9 ends10 pairs9 middle8 middle9s f3-shape
};

/// Check the digit-position conditions that every image of the given family
/// must satisfy (as laid out by apply_f).
BwMembership check_bw(const DigitNumber& n, const FamilyTag& tag);

/// All parameter tuples of the given width, descending lexicographic.
std::vector<ParamVector> enumerate_classes(int width);

} // namespace kaprekar
