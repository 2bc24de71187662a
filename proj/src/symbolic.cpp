#include "kaprekar/symbolic.hpp"

#include <algorithm>
#include <cassert>

#include "json.hpp"

namespace kaprekar {

namespace {

std::string perm_id(const FamilyTag& tag, const std::vector<int>& perm) {
    std::string s = tag.str() + "-p";
    bool dotted = perm.size() > 9;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (dotted && i > 0) s += '.';
        s += std::to_string(perm[i]);
    }
    return s;
}

bool trivially_true(const LinearConstraint& c) {
    return c.relation == Relation::ge0 && c.expr.is_constant() && c.expr.constant >= 0;
}

// Descending-lexicographic order used by enumerate_classes.
struct ClassDesc {
    bool operator()(const ParamVector& a, const ParamVector& b) const { return b < a; }
};

} // namespace

bool SymbolicKFn::contains(const ParamVector& alpha) const { return domain.contains(alpha); }

std::vector<LinearConstraint> family_constraints(const FamilyTag& tag) {
    int h = half_width(tag.width);
    auto var = [&](int s) { return AffineExpr::variable(s, h); };
    auto num = [&](long long c) { return AffineExpr::constant_of(c, h); };
    std::vector<LinearConstraint> cs;
    switch (tag.kind) {
    case FamilyKind::f1:
        cs.push_back(ge(var(h), num(1)));
        break;
    case FamilyKind::f2:
        cs.push_back(ge(var(tag.first_zero - 1), num(1)));
        for (int s = tag.first_zero; s <= h; ++s) cs.push_back(eq(var(s), num(0)));
        break;
    case FamilyKind::f3:
        for (int s = 2; s <= h; ++s) cs.push_back(eq(var(s), num(0)));
        break;
    }
    return cs;
}

std::vector<FamilyTag> family_tags(int width) {
    int h = half_width(width);
    std::vector<FamilyTag> tags;
    tags.push_back(FamilyTag{FamilyKind::f1, 0, width});
    for (int r = 3; r <= h; ++r) tags.push_back(FamilyTag{FamilyKind::f2, r, width});
    if (h >= 2) tags.push_back(FamilyTag{FamilyKind::f3, 0, width});
    return tags;
}

std::vector<AffineExpr> symbolic_image(const FamilyTag& tag) {
    int w = tag.width;
    int h = half_width(w);
    bool odd = w % 2 != 0;
    auto var = [&](int s) { return AffineExpr::variable(s, h); };
    auto num = [&](long long c) { return AffineExpr::constant_of(c, h); };
    std::vector<AffineExpr> d;
    d.reserve(static_cast<std::size_t>(w));
    switch (tag.kind) {
    case FamilyKind::f1:
        for (int s = 1; s < h; ++s) d.push_back(var(s));
        d.push_back(var(h) - num(1));
        if (odd) d.push_back(num(9));
        for (int s = h; s >= 2; --s) d.push_back(num(9) - var(s));
        d.push_back(num(10) - var(1));
        break;
    case FamilyKind::f2: {
        int r = tag.first_zero;
        int v = 2 * (h + 1 - r) + (odd ? 1 : 0);
        for (int s = 1; s < r - 1; ++s) d.push_back(var(s));
        d.push_back(var(r - 1) - num(1));
        for (int i = 0; i < v; ++i) d.push_back(num(9));
        for (int s = r - 1; s >= 2; --s) d.push_back(num(9) - var(s));
        d.push_back(num(10) - var(1));
        break;
    }
    case FamilyKind::f3:
        d.push_back(var(1) - num(1));
        for (int i = 0; i < w - 2; ++i) d.push_back(num(9));
        d.push_back(num(10) - var(1));
        break;
    }
    return d;
}

namespace {

struct DerivedEntry {
    std::vector<int> perm;     // canonical full permutation, constant slots first
    std::vector<int> feasible; // point indices
};

struct FamilyDerivation {
    FamilyTag tag;
    std::vector<AffineExpr> slots;
    std::vector<ParamVector> lattice;          // family's classes, canonical order
    std::vector<std::vector<int>> slot_vals;   // [slot][point]
    int raw = 0;
    // ordering of the variable slots -> derived entry
    std::map<std::vector<int>, DerivedEntry> entries;
};

// Point indices (subset of `from`) where slot a >= slot b.
std::vector<int> filter_ge(const FamilyDerivation& fd, const std::vector<int>& from, int a, int b) {
    std::vector<int> out;
    out.reserve(from.size());
    for (int p : from)
        if (fd.slot_vals[static_cast<std::size_t>(a)][static_cast<std::size_t>(p)] >=
            fd.slot_vals[static_cast<std::size_t>(b)][static_cast<std::size_t>(p)])
            out.push_back(p);
    return out;
}

// Full feasible set of an ordering, from scratch.
std::vector<int> feasible_of(const FamilyDerivation& fd, const std::vector<int>& perm) {
    std::vector<int> pts(fd.lattice.size());
    for (std::size_t i = 0; i < pts.size(); ++i) pts[i] = static_cast<int>(i);
    for (std::size_t k = 0; k + 1 < perm.size(); ++k)
        pts = filter_ge(fd, pts, perm[k] - 1, perm[k + 1] - 1);
    return pts;
}

// Orderings that differ only in where the fixed nines sit denote the same
// function: a nine is never exceeded by a variable digit, so the arrangement
// with every constant slot first has the weakest constraints and its domain
// contains all the variants'. Key each ordering by its variable-slot
// subsequence and canonicalize to the constants-first arrangement.
DerivedEntry canonical_entry(const FamilyDerivation& fd, const std::vector<int>& var_key) {
    DerivedEntry e;
    for (std::size_t i = 0; i < fd.slots.size(); ++i)
        if (fd.slots[i].is_constant()) e.perm.push_back(static_cast<int>(i) + 1);
    e.perm.insert(e.perm.end(), var_key.begin(), var_key.end());
    e.feasible = feasible_of(fd, e.perm);
    return e;
}

void derive_family(FamilyDerivation& fd) {
    int w = static_cast<int>(fd.slots.size());
    fd.slot_vals.assign(fd.slots.size(), std::vector<int>(fd.lattice.size()));
    for (std::size_t d = 0; d < fd.slots.size(); ++d)
        for (std::size_t p = 0; p < fd.lattice.size(); ++p)
            fd.slot_vals[d][p] = static_cast<int>(fd.slots[d].eval(fd.lattice[p]));

    // Identical digit expressions (the fixed nines) are interchangeable; only
    // enumerate them in position order.
    std::vector<int> expr_group(fd.slots.size());
    for (std::size_t i = 0; i < fd.slots.size(); ++i) {
        expr_group[i] = static_cast<int>(i);
        for (std::size_t j = 0; j < i; ++j)
            if (fd.slots[j] == fd.slots[i]) {
                expr_group[i] = expr_group[j];
                break;
            }
    }

    std::vector<int> chosen;
    std::vector<bool> used(fd.slots.size(), false);
    chosen.reserve(fd.slots.size());

    auto rec = [&](auto&& self, const std::vector<int>& surviving) -> void {
        if (static_cast<int>(chosen.size()) == w) {
            ++fd.raw;
            std::vector<int> key;
            for (int c : chosen)
                if (!fd.slots[static_cast<std::size_t>(c)].is_constant()) key.push_back(c + 1);
            if (!fd.entries.contains(key)) fd.entries.emplace(key, canonical_entry(fd, key));
            return;
        }
        for (std::size_t j = 0; j < fd.slots.size(); ++j) {
            if (used[j]) continue;
            // j must be the lowest free slot among those with the same expression
            bool canonical = true;
            for (std::size_t i = 0; i < j && canonical; ++i)
                if (!used[i] && expr_group[i] == expr_group[j]) canonical = false;
            if (!canonical) continue;
            std::vector<int> next = chosen.empty()
                                        ? surviving
                                        : filter_ge(fd, surviving, chosen.back(), static_cast<int>(j));
            if (next.empty()) continue;
            used[j] = true;
            chosen.push_back(static_cast<int>(j));
            self(self, next);
            chosen.pop_back();
            used[j] = false;
        }
    };
    std::vector<int> all(fd.lattice.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    rec(rec, all);
}

} // namespace

Catalog derive_k_functions(int width) {
    Catalog cat;
    cat.width = width;
    int w = width;
    int h = half_width(width);

    for (const FamilyTag& tag : family_tags(width)) {
        FamilyDerivation fd;
        fd.tag = tag;
        fd.slots = symbolic_image(tag);
        fd.lattice = ParamDomain(width, family_constraints(tag)).feasible_points();
        if (fd.lattice.empty()) continue;
        derive_family(fd);

        cat.raw_orderings += fd.raw;
        cat.family_raw[tag.str()] = fd.raw;
        cat.family_counts[tag.str()] = static_cast<int>(fd.entries.size());

        for (const auto& [key, entry] : fd.entries) {
            const std::vector<int>& perm = entry.perm;
            std::vector<AffineExpr> output;
            output.reserve(static_cast<std::size_t>(h));
            for (int s = 1; s <= h; ++s)
                output.push_back(fd.slots[static_cast<std::size_t>(perm[static_cast<std::size_t>(s - 1)] - 1)] -
                                 fd.slots[static_cast<std::size_t>(perm[static_cast<std::size_t>(w - s)] - 1)]);
            std::vector<LinearConstraint> extra = family_constraints(tag);
            for (std::size_t k = 0; k + 1 < perm.size(); ++k) {
                LinearConstraint c = ge(fd.slots[static_cast<std::size_t>(perm[k] - 1)],
                                        fd.slots[static_cast<std::size_t>(perm[k + 1] - 1)]);
                if (trivially_true(c)) continue;
                if (std::find(extra.begin(), extra.end(), c) == extra.end()) extra.push_back(c);
            }
            std::vector<ParamVector> feas;
            feas.reserve(entry.feasible.size());
            for (int p : entry.feasible) feas.push_back(fd.lattice[static_cast<std::size_t>(p)]);
            cat.fns.push_back(SymbolicKFn{perm_id(tag, perm), tag, perm, std::move(output),
                                          ParamDomain(width, std::move(extra)), std::move(feas), {}});
        }
    }

    // Attach curated aliases by pointwise agreement on the published domains.
    for (const RowMatch& m : match_curated_rows(cat)) {
        if (m.matched_id.empty()) continue;
        for (auto& fn : cat.fns)
            if (fn.id == m.matched_id) fn.aliases.push_back(m.alias);
    }
    return cat;
}

const SymbolicKFn* Catalog::by_id(const std::string& id) const {
    for (const auto& fn : fns)
        if (fn.id == id) return &fn;
    return nullptr;
}

const SymbolicKFn* Catalog::by_alias(const std::string& alias) const {
    for (const auto& fn : fns)
        if (std::find(fn.aliases.begin(), fn.aliases.end(), alias) != fn.aliases.end()) return &fn;
    return nullptr;
}

std::vector<const SymbolicKFn*> Catalog::covering(const ParamVector& alpha) const {
    std::vector<const SymbolicKFn*> out;
    for (const auto& fn : fns)
        if (fn.contains(alpha)) out.push_back(&fn);
    return out;
}

ParamVector eval_k(const SymbolicKFn& fn, const ParamVector& alpha) {
    std::string violated = fn.domain.first_violation(alpha);
    if (!violated.empty())
        fail(errc::out_of_domain, fn.id + " does not apply at " + alpha.str() + ": needs " + violated);
    std::vector<int> out;
    out.reserve(fn.output.size());
    for (const auto& e : fn.output) out.push_back(static_cast<int>(e.eval(alpha)));
    return ParamVector(std::move(out), alpha.width());
}

ParamVector total_k(const ParamVector& alpha) { return params(apply_f(alpha)); }

ParamVector iterate_params(const ParamVector& alpha, int r) {
    if (r < 0) fail(errc::bad_argument, "iteration count must be >= 0");
    ParamVector cur = alpha;
    for (int i = 0; i < r; ++i) cur = total_k(cur);
    return cur;
}

std::vector<ParamVector> fixed_params(int width) {
    std::vector<ParamVector> out;
    for (const ParamVector& alpha : enumerate_classes(width))
        if (total_k(alpha) == alpha) out.push_back(alpha);
    return out;
}

std::vector<FixedPoint> solve_fixed_points(int width, const Catalog& catalog) {
    std::vector<FixedPoint> out;
    for (const ParamVector& alpha : fixed_params(width)) {
        std::string witness;
        for (const SymbolicKFn* fn : catalog.covering(alpha))
            if (eval_k(*fn, alpha) == alpha) {
                witness = fn->id;
                break;
            }
        out.push_back(FixedPoint{alpha, apply_f(alpha), witness});
    }
    return out;
}

std::vector<FixedPoint> solve_fixed_points(int width) {
    return solve_fixed_points(width, derive_k_functions(width));
}

FixedPoint verify_constant_family(ConstantFamily kind, int h) {
    std::vector<int> a;
    int width = 0;
    if (kind == ConstantFamily::even_63_32) {
        if (h < 2) fail(errc::bad_argument, "even constant family needs h >= 2");
        width = 2 * h;
        a.push_back(6);
        a.insert(a.end(), static_cast<std::size_t>(h - 2), 3);
        a.push_back(2);
    } else {
        if (h < 4) fail(errc::bad_argument, "odd constant family needs h >= 4");
        width = 2 * h + 1;
        a = {8, 6, 4};
        a.insert(a.end(), static_cast<std::size_t>(h - 4), 3);
        a.push_back(2);
    }
    ParamVector alpha(std::move(a), width);
    DigitNumber n = apply_f(alpha);
    if (kaprekar_step(n) != n || params(n) != alpha)
        fail(errc::not_a_fixed_point, n.str() + " is not a transformation constant");
    return FixedPoint{alpha, n, ""};
}

std::vector<AffineExpr> compose(const std::vector<const SymbolicKFn*>& path) {
    if (path.empty()) fail(errc::bad_argument, "compose needs a non-empty path");
    std::vector<AffineExpr> cur = path.front()->output;
    for (std::size_t i = 1; i < path.size(); ++i) {
        std::vector<AffineExpr> next;
        next.reserve(path[i]->output.size());
        for (const auto& e : path[i]->output) next.push_back(e.substitute(cur));
        cur = std::move(next);
    }
    return cur;
}

std::vector<CuratedRow> curated_rows(int width) {
    int h = half_width(width);
    auto V = [&](int s) { return AffineExpr::variable(s, h); };
    auto C = [&](long long c) { return AffineExpr::constant_of(c, h); };
    FamilyTag F1{FamilyKind::f1, 0, width};
    FamilyTag F3{FamilyKind::f3, 0, width};
    std::vector<CuratedRow> rows;
    auto add = [&](std::string alias, FamilyTag fam, std::vector<AffineExpr> out,
                   std::vector<LinearConstraint> dom) {
        rows.push_back(CuratedRow{std::move(alias), fam, std::move(out), std::move(dom)});
    };

    switch (width) {
    case 2:
        add("K1", F1, {2 * V(1) - C(11)}, {ge(V(1), C(6))});
        add("K2", F1, {C(11) - 2 * V(1)}, {ge(C(5), V(1))});
        break;
    case 3:
        add("K1", F1, {V(1) - C(1)}, {ge(V(1), C(6))});
        add("K2", F1, {C(10) - V(1)}, {ge(C(5), V(1))});
        break;
    case 4:
        add("K1", F1, {2 * V(1) - C(10), 2 * V(2) - C(10)},
            {ge(V(1), C(6)), ge(V(1), V(2) + C(1)), ge(V(2), C(5))});
        add("K3", F1, {C(10) - 2 * V(2), 2 * V(1) - C(10)}, {ge(V(1), C(5)), ge(C(9), V(1) + V(2))});
        break;
    case 6: {
        FamilyTag F2{FamilyKind::f2, 3, width};
        add("K1", F1, {2 * V(1) - C(10), 2 * V(2) - C(9), 2 * V(3) - C(10)},
            {ge(V(1), C(6)), ge(V(2), C(5)), ge(V(3), C(5)), ge(V(1), V(2) + C(1))});
        add("K2", F1, {C(10) - 2 * V(3), C(9) - 2 * V(2), C(10) - 2 * V(1)},
            {ge(C(5), V(1)), ge(V(2), C(1)), ge(C(4), V(2)), ge(V(3), C(1)), ge(C(4), V(3)),
             ge(V(1), V(2) + C(1)), ge(2 * V(2) + C(1), 2 * V(3))});
        add("K3", F1, {C(10) - 2 * V(3), V(1) - V(2), V(1) - V(2) - C(1)},
            {ge(V(1) + V(2), C(9)), ge(C(10), V(1) + V(2)), ge(V(1), V(2) + C(1)), ge(V(3), C(1)),
             ge(C(4), V(3)), ge(C(9), V(1) + V(3)), ge(C(10) + V(2) - 2 * V(3), V(1))});
        add("K4", F1, {V(1) - V(3) + C(1), V(1) - V(3) - C(1), 2 * V(2) - C(9)},
            {ge(V(1), C(5)), ge(V(2), C(5)), ge(C(8), V(2)), ge(V(3), C(1)), ge(C(6), V(3)),
             ge(V(1), V(2) + C(1)), ge(V(1) + V(3), C(9)), ge(C(11), V(1) + V(3)),
             ge(V(1), 2 * V(2) + V(3) - C(8))});
        add("K5", F1, {V(1) - V(3) + C(1), V(1) - V(3) - C(1), C(9) - 2 * V(2)},
            {ge(V(1), C(6)), ge(V(2), C(1)), ge(C(4), V(2)), ge(V(1) + V(2), C(10)),
             ge(V(1) + V(3), C(9)), ge(C(11), V(1) + V(3)), ge(V(1), C(10) - 2 * V(2) + V(3))});
        add("K6", F1, {C(10) - 2 * V(3), 2 * V(1) - C(10), 2 * V(2) - C(9)},
            {ge(V(1), C(6)), ge(V(2), C(5)), ge(V(3), C(1)), ge(C(3), V(3)), ge(V(1), V(2) + C(1)),
             ge(C(9), V(1) + V(3))});
        add("K7", F1, {2 * V(1) - C(10), V(2) - V(3) + C(1), V(2) - V(3)},
            {ge(V(1), C(6)), ge(V(2), C(5)), ge(C(8), V(2)), ge(V(3), C(2)), ge(C(5), V(3)),
             ge(V(1) + V(3), C(11)), ge(V(2) + V(3), C(9)), ge(C(10), V(2) + V(3)),
             ge(2 * V(1), C(11) + V(2) - V(3))});
        add("K8", F1, {V(1) - V(3) + C(1), V(1) + V(2) - C(10), V(2) - V(3)},
            {ge(V(1), C(6)), ge(V(2), C(5)), ge(C(8), V(2)), ge(V(3), C(1)), ge(C(5), V(3)),
             ge(V(1), V(2) + C(1)), ge(V(1) + V(2), C(10)), ge(V(1) + V(3), C(10)),
             ge(C(11), V(1) + V(3)), ge(V(2) + V(3), C(9)), ge(C(11), V(2) + V(3))});
        add("K9", F1, {C(11) - V(1) - V(3), V(1) + V(2) - C(9), V(2) + V(3) - C(9)},
            {eq(V(1), C(5)), eq(V(2), C(5)), eq(V(3), C(4))});
        add("K22", F2, {V(1) - C(1), V(2), V(1) - V(2) + C(1)},
            {ge(V(1), C(6)), ge(V(2), C(5)), ge(V(1), V(2) + C(1)), ge(2 * V(2), V(1) + C(1))});
        add("K24", F2, {V(2), C(10) - V(2), 2 * V(1) - C(10)},
            {ge(V(1), C(5)), ge(V(2), C(5)), ge(C(11), V(1) + V(2))});
        add("K31", F3, {V(1) - C(1), C(10) - V(1), C(0)}, {ge(V(1), C(6))});
        add("K32", F3, {C(10) - V(1), V(1) - C(1), C(0)}, {ge(C(5), V(1))});
        break;
    }
    case 7: {
        FamilyTag F2{FamilyKind::f2, 3, width};
        add("K1", F1, {V(1) - C(1), V(1) + V(2) - C(9), V(2) + V(3) - C(9)},
            {ge(V(1), V(2) + C(1)), ge(V(3), C(5))});
        add("K2", F1, {C(10) - V(3), C(9) - V(2) - V(3), C(9) - V(1) - V(2)},
            {ge(C(5), V(1)), ge(V(1), V(2) + C(1)), ge(C(9), V(1) + V(2)), ge(C(9), V(2) + V(3)),
             ge(V(2), C(1)), ge(V(3), C(2)), ge(C(4), V(3))});
        add("K4", F1, {C(10) - V(3), 2 * V(1) - C(10), V(2) - V(3)},
            {ge(V(1), V(2) + C(1)), ge(V(1) + V(3), C(9)), ge(C(11), V(1) + V(3)), ge(V(2), C(5)),
             ge(C(9), V(2) + V(3))});
        add("K5", F1, {C(10) - V(3), 2 * V(1) - C(10), C(9) - V(2) - V(3)},
            {ge(V(1) + V(2), C(10)), ge(C(4), V(2)), ge(V(1) + V(3), C(9)), ge(C(11), V(1) + V(3))});
        add("K6", F1, {C(10) - V(3), V(1) - V(3) - C(1), V(1) + V(2) - C(9)},
            {ge(V(1), V(2) + C(1)), ge(V(2), C(5)), ge(C(9), V(1) + V(3))});
        add("K7", F1, {V(1) - C(1), V(1) - V(3) + C(1), 2 * V(2) - C(9)},
            {ge(V(1) + V(3), C(11)), ge(V(2) + V(3), C(9)), ge(C(10), V(2) + V(3))});
        add("K10", F1, {V(2), 2 * V(1) - C(10), V(2) + V(3) - C(9)},
            {ge(V(1), V(3) + C(1)), ge(V(2) + C(1), V(1)), ge(V(3), C(5))});
        add("K11", F1, {C(10) - V(3), C(9) - V(3) - V(2), V(1) - V(2) - C(1)},
            {ge(V(1), C(5)), ge(C(9), V(1) + V(2))});
        add("K12", F1, {V(1) - C(1), V(1) - V(3) + C(1), C(9) - V(2) - V(3)},
            {ge(V(1) + V(3), C(11)), ge(C(4), V(2))});
        add("K13", F1, {V(2), 2 * V(1) - C(10), V(2) - V(3) + C(1)},
            {ge(V(2) + C(1), V(1)), ge(V(1) + V(3), C(11)), ge(C(5), V(3))});
        add("K22", F2, {V(1) - C(1), V(2), C(10) - V(2)}, {ge(V(1), V(2) + C(1)), ge(V(2), C(5))});
        add("K23", F2, {V(2), V(1) - C(1), C(10) - V(2)},
            {ge(V(2) + C(1), V(1)), ge(V(1) + V(2), C(11))});
        add("K25", F2, {V(1) - C(1), C(10) - V(2), V(2)}, {ge(V(1) + V(2), C(11)), ge(C(5), V(2))});
        add("K26", F2, {C(10) - V(2), V(1) - C(1), V(2)},
            {ge(V(1), V(2) + C(1)), ge(V(1) + V(2), C(9)), ge(C(11), V(1) + V(2))});
        add("K27", F2, {C(10) - V(2), V(1) - C(1), C(9) - V(1)}, {ge(V(1), C(5)), ge(C(9), V(1) + V(2))});
        add("K31", F3, {V(1) - C(1), C(10) - V(1), C(0)}, {ge(V(1), C(6))});
        add("K32", F3, {C(10) - V(1), V(1) - C(1), C(0)}, {ge(C(5), V(1))});
        break;
    }
    case 8: {
        FamilyTag F2{FamilyKind::f2, 3, width};
        add("K23", F2, {V(2), C(10) - V(2), V(1) - C(1), C(9) - V(1)},
            {ge(V(1), C(5)), ge(V(2), C(5)), ge(C(11), V(1) + V(2))});
        break;
    }
    case 10: {
        FamilyTag F2{FamilyKind::f2, 3, width};
        add("K21", F2, {V(1) - C(1), V(2), C(10) - V(2), C(9) - V(1), C(0)},
            {ge(V(1), C(6)), ge(V(2), C(5)), ge(V(1), V(2) + C(1))});
        break;
    }
    case 12: {
        FamilyTag F2{FamilyKind::f2, 6, width};
        add("K1", F1,
            {2 * V(1) - C(10), 2 * V(2) - C(9), 2 * V(3) - C(9), 2 * V(4) - C(9), 2 * V(5) - C(9),
             2 * V(6) - C(10)},
            {ge(V(1), C(6)), ge(V(1), V(2) + C(1)), ge(V(2), C(5)), ge(V(3), C(5)), ge(V(4), C(5)),
             ge(V(5), C(5)), ge(V(6), C(5))});
        add("K25", F2,
            {C(10) - V(5), C(9) - V(4), V(1) - V(5) - C(1), V(1) + V(2) - C(9), V(3) - V(4),
             V(2) - V(3)},
            {ge(V(1), C(2)), ge(V(1), V(2) + C(1)), ge(V(1) + V(2), C(9)), ge(V(1) + V(4), C(9)),
             ge(C(10), V(1) + V(4)), ge(C(9), V(1) + V(5)), ge(C(10), V(1) + V(4) - V(5)),
             ge(C(9), V(2) + V(4)), ge(C(8), V(2) + V(5)), ge(2 * V(3), V(2) + V(4)), ge(V(3), C(5)),
             ge(V(4), V(5) + C(1)), ge(V(1) + V(2) + V(4) - V(3), C(9)), ge(V(5), C(1))});
        break;
    }
    default:
        break;
    }
    return rows;
}

ParamVector eval_row(const CuratedRow& row, const ParamVector& alpha) {
    std::vector<LinearConstraint> cs = family_constraints(row.family);
    cs.insert(cs.end(), row.domain_extra.begin(), row.domain_extra.end());
    ParamDomain dom(row.family.width, std::move(cs));
    std::string violated = dom.first_violation(alpha);
    if (!violated.empty())
        fail(errc::out_of_domain, row.alias + " does not apply at " + alpha.str() + ": needs " + violated);
    std::vector<int> out;
    out.reserve(row.output.size());
    for (const auto& e : row.output) out.push_back(static_cast<int>(e.eval(alpha)));
    return ParamVector(std::move(out), alpha.width());
}

std::vector<RowMatch> match_curated_rows(const Catalog& catalog) {
    std::vector<RowMatch> out;
    for (const CuratedRow& row : curated_rows(catalog.width)) {
        RowMatch m;
        m.alias = row.alias;
        std::vector<ParamVector> row_pts;
        {
            std::vector<LinearConstraint> cs = family_constraints(row.family);
            cs.insert(cs.end(), row.domain_extra.begin(), row.domain_extra.end());
            row_pts = ParamDomain(catalog.width, std::move(cs)).feasible_points();
        }
        m.row_points = static_cast<int>(row_pts.size());

        const SymbolicKFn* best = nullptr;
        int best_rank = -1;
        for (const auto& fn : catalog.fns) {
            if (fn.family != row.family) continue;
            bool superset = std::includes(fn.feasible.begin(), fn.feasible.end(), row_pts.begin(), row_pts.end(),
                                          ClassDesc{});
            if (!superset) continue;
            bool values = true;
            for (const ParamVector& p : row_pts)
                for (std::size_t s = 0; s < row.output.size() && values; ++s)
                    if (fn.output[s].eval(p) != row.output[s].eval(p)) values = false;
            if (!values) continue;
            bool exact = fn.feasible.size() == row_pts.size();
            bool exprs = fn.output == row.output;
            int rank = (exact ? 2 : 0) + (exprs ? 1 : 0);
            if (rank > best_rank) {
                best_rank = rank;
                best = &fn;
            }
        }
        if (best) {
            m.matched_id = best->id;
            m.values_match = true;
            m.domain_superset = true;
            m.domain_equal = best->feasible.size() == row_pts.size();
            m.exprs_equal = best->output == row.output;
        }
        out.push_back(std::move(m));
    }
    return out;
}

std::string export_catalog_json(const Catalog& catalog) {
    nlohmann::ordered_json j;
    j["width"] = catalog.width;
    j["raw_orderings"] = catalog.raw_orderings;
    nlohmann::ordered_json fam;
    for (const auto& [tag, count] : catalog.family_counts) {
        fam[tag]["functions"] = count;
        fam[tag]["raw_orderings"] = catalog.family_raw.at(tag);
    }
    j["families"] = std::move(fam);
    j["entries"] = nlohmann::ordered_json::array();
    for (const SymbolicKFn& fn : catalog.fns) {
        nlohmann::ordered_json e;
        e["id"] = fn.id;
        e["aliases"] = fn.aliases;
        e["family"] = fn.family.str();
        e["permutation"] = fn.permutation;
        e["output"] = nlohmann::ordered_json::array();
        for (const AffineExpr& expr : fn.output) {
            nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
            coeffs.push_back(expr.constant);
            for (long long c : expr.coeffs) coeffs.push_back(c);
            e["output"].push_back(std::move(coeffs));
        }
        e["domain"] = nlohmann::ordered_json::array();
        for (const LinearConstraint& c : fn.domain.constraints()) {
            nlohmann::ordered_json cj;
            nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
            coeffs.push_back(c.expr.constant);
            for (long long v : c.expr.coeffs) coeffs.push_back(v);
            cj["coeffs"] = std::move(coeffs);
            cj["relation"] = c.relation == Relation::ge0 ? ">=0" : "==0";
            e["domain"].push_back(std::move(cj));
        }
        e["feasible_points"] = fn.feasible.size();
        j["entries"].push_back(std::move(e));
    }
    return j.dump(2) + "\n";
}

} // namespace kaprekar
