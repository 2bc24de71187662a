#include "kaprekar/affine.hpp"

#include <algorithm>

namespace kaprekar {

AffineExpr AffineExpr::variable(int s, int h) {
    AffineExpr e = constant_of(0, h);
    e.coeffs[static_cast<std::size_t>(s - 1)] = 1;
    return e;
}

long long AffineExpr::eval(const ParamVector& alpha) const { return eval(alpha.alphas()); }

long long AffineExpr::eval(const std::vector<int>& alphas) const {
    long long v = constant;
    for (std::size_t s = 0; s < coeffs.size(); ++s) v += coeffs[s] * alphas[s];
    return v;
}

bool AffineExpr::is_constant() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](long long c) { return c == 0; });
}

AffineExpr AffineExpr::substitute(const std::vector<AffineExpr>& image) const {
    AffineExpr out = constant_of(constant, image.empty() ? h() : image.front().h());
    for (std::size_t s = 0; s < coeffs.size(); ++s) {
        if (coeffs[s] == 0) continue;
        const AffineExpr& g = image[s];
        out.constant += coeffs[s] * g.constant;
        for (std::size_t t = 0; t < g.coeffs.size(); ++t) out.coeffs[t] += coeffs[s] * g.coeffs[t];
    }
    return out;
}

std::string AffineExpr::str() const {
    std::string s;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        long long c = coeffs[i];
        if (c == 0) continue;
        char name = static_cast<char>('a' + i);
        if (c > 0 && !s.empty()) s += '+';
        if (c == -1)
            s += '-';
        else if (c != 1)
            s += std::to_string(c);
        s += name;
    }
    if (constant != 0 || s.empty()) {
        if (constant >= 0 && !s.empty()) s += '+';
        s += std::to_string(constant);
    }
    return s;
}

AffineExpr operator+(const AffineExpr& l, const AffineExpr& r) {
    AffineExpr out = l;
    out.constant += r.constant;
    for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += r.coeffs[i];
    return out;
}

AffineExpr operator-(const AffineExpr& l, const AffineExpr& r) {
    AffineExpr out = l;
    out.constant -= r.constant;
    for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] -= r.coeffs[i];
    return out;
}

AffineExpr operator*(long long k, const AffineExpr& e) {
    AffineExpr out = e;
    out.constant *= k;
    for (auto& c : out.coeffs) c *= k;
    return out;
}

bool LinearConstraint::holds(const std::vector<int>& alphas) const {
    long long v = expr.eval(alphas);
    return relation == Relation::ge0 ? v >= 0 : v == 0;
}

std::string LinearConstraint::str() const {
    return expr.str() + (relation == Relation::ge0 ? " >= 0" : " == 0");
}

LinearConstraint ge(const AffineExpr& lhs, const AffineExpr& rhs) {
    return LinearConstraint{lhs - rhs, Relation::ge0};
}

LinearConstraint eq(const AffineExpr& lhs, const AffineExpr& rhs) {
    return LinearConstraint{lhs - rhs, Relation::eq0};
}

std::vector<LinearConstraint> structural_constraints(int width) {
    int h = half_width(width);
    std::vector<LinearConstraint> cs;
    auto var = [&](int s) { return AffineExpr::variable(s, h); };
    auto num = [&](long long c) { return AffineExpr::constant_of(c, h); };
    cs.push_back(ge(var(1), num(1)));
    for (int s = 1; s <= h; ++s) cs.push_back(ge(num(9), var(s)));
    for (int s = 2; s <= h; ++s) cs.push_back(ge(var(s), num(0)));
    for (int s = 1; s < h; ++s) cs.push_back(ge(var(s), var(s + 1)));
    return cs;
}

ParamDomain::ParamDomain(int width, std::vector<LinearConstraint> extra) : width_(width) {
    constraints_ = structural_constraints(width);
    constraints_.insert(constraints_.end(), extra.begin(), extra.end());
}

bool ParamDomain::contains(const ParamVector& alpha) const {
    if (alpha.width() != width_) return false;
    return std::all_of(constraints_.begin(), constraints_.end(),
                       [&](const LinearConstraint& c) { return c.holds(alpha.alphas()); });
}

std::string ParamDomain::first_violation(const ParamVector& alpha) const {
    if (alpha.width() != width_) return "width mismatch";
    for (const auto& c : constraints_)
        if (!c.holds(alpha.alphas())) return c.str();
    return {};
}

std::vector<ParamVector> ParamDomain::feasible_points() const {
    std::vector<ParamVector> out;
    for (const ParamVector& alpha : enumerate_classes(width_))
        if (contains(alpha)) out.push_back(alpha);
    return out;
}

} // namespace kaprekar
