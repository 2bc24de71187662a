#pragma once

// Exact integer affine expressions over the parameters (alpha^1..alpha^h),
// linear constraints, and integer-lattice domains decided by enumeration.

#include <string>
#include <vector>

#include "kaprekar/params.hpp"

namespace kaprekar {

/// constant + sum_s coeff[s-1] * alpha^s, all integer.
struct AffineExpr {
    long long constant = 0;
    std::vector<long long> coeffs; // size h

    static AffineExpr constant_of(long long c, int h) { return AffineExpr{c, std::vector<long long>(static_cast<std::size_t>(h), 0)}; }
    static AffineExpr variable(int s, int h); // alpha^s, 1-based

    int h() const { return static_cast<int>(coeffs.size()); }
    long long eval(const ParamVector& alpha) const;
    long long eval(const std::vector<int>& alphas) const;
    bool is_constant() const;

    /// Substitute alpha^s := image[s-1]; used for composing maps.
    AffineExpr substitute(const std::vector<AffineExpr>& image) const;

    /// Rendered with a, b, c, ... for alpha^1..alpha^h (h <= 8), e.g. "2a-10".
    std::string str() const;

    friend AffineExpr operator+(const AffineExpr& l, const AffineExpr& r);
    friend AffineExpr operator-(const AffineExpr& l, const AffineExpr& r);
    friend AffineExpr operator*(long long k, const AffineExpr& e);
    friend bool operator==(const AffineExpr&, const AffineExpr&) = default;
};

enum class Relation { ge0, eq0 };

/// expr >= 0 or expr == 0, decidable exactly at every integer point.
struct LinearConstraint {
    AffineExpr expr;
    Relation relation = Relation::ge0;

    bool holds(const std::vector<int>& alphas) const;
    std::string str() const;

    friend bool operator==(const LinearConstraint&, const LinearConstraint&) = default;
};

/// Convenience builders on 1-based parameter indices.
LinearConstraint ge(const AffineExpr& lhs, const AffineExpr& rhs); // lhs >= rhs
LinearConstraint eq(const AffineExpr& lhs, const AffineExpr& rhs); // lhs == rhs

/// The structural constraints of every parameter tuple: alpha^1 >= 1,
/// 0 <= alpha^s <= 9, alpha^s >= alpha^{s+1}.
std::vector<LinearConstraint> structural_constraints(int width);

/// A conjunction of linear constraints over the width's parameter lattice.
/// Structural constraints are always conjoined.
class ParamDomain {
public:
    ParamDomain(int width, std::vector<LinearConstraint> extra);

    int width() const { return width_; }
    const std::vector<LinearConstraint>& constraints() const { return constraints_; }

    bool contains(const ParamVector& alpha) const;
    /// Description of the first violated constraint, empty if none.
    std::string first_violation(const ParamVector& alpha) const;

    /// Exactly the parameter tuples satisfying every constraint, in canonical
    /// (descending lexicographic) order.
    std::vector<ParamVector> feasible_points() const;

private:
    int width_;
    std::vector<LinearConstraint> constraints_; // structural first, then extras
};

} // namespace kaprekar
