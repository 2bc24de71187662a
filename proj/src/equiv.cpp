#include "kaprekar/equiv.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace kaprekar {

bool r_equiv(const DigitNumber& m, const DigitNumber& n, int r) {
    if (m.width() != n.width()) fail(errc::width_mismatch, "operands have different widths");
    if (r < 0) fail(errc::bad_argument, "order must be >= 0");
    return iterate(m, r) == iterate(n, r);
}

bool class_r_equiv(const ParamVector& a, const ParamVector& b, int r) {
    if (a.width() != b.width()) fail(errc::width_mismatch, "classes have different widths");
    if (r < 1) fail(errc::bad_argument, "class-level order must be >= 1");
    return iterate_params(a, r - 1) == iterate_params(b, r - 1);
}

namespace {

std::vector<int> successor_table(const std::vector<ParamVector>& classes) {
    std::map<ParamVector, int> index;
    for (std::size_t i = 0; i < classes.size(); ++i) index.emplace(classes[i], static_cast<int>(i));
    std::vector<int> succ(classes.size());
    for (std::size_t i = 0; i < classes.size(); ++i) succ[i] = index.at(total_k(classes[i]));
    return succ;
}

Partition partition_from_keys(int width, int order, const std::vector<int>& keys) {
    Partition p;
    p.width = width;
    p.order = order;
    p.block_id.assign(keys.size(), -1);
    std::map<int, int> block_of_key;
    for (std::size_t i = 0; i < keys.size(); ++i) {
        auto [it, fresh] = block_of_key.try_emplace(keys[i], static_cast<int>(p.blocks.size()));
        if (fresh) p.blocks.emplace_back();
        p.block_id[i] = it->second;
        p.blocks[static_cast<std::size_t>(it->second)].push_back(static_cast<int>(i));
    }
    return p;
}

} // namespace

Partition partition(int width, int order) {
    if (order < 1) fail(errc::bad_argument, "partition order must be >= 1");
    std::vector<ParamVector> classes = enumerate_classes(width);
    std::vector<int> succ = successor_table(classes);
    std::vector<int> keys(classes.size());
    std::iota(keys.begin(), keys.end(), 0);
    for (int step = 0; step < order - 1; ++step)
        for (auto& k : keys) k = succ[static_cast<std::size_t>(k)];
    return partition_from_keys(width, order, keys);
}

std::pair<int, Partition> stabilize(int width) {
    std::vector<ParamVector> classes = enumerate_classes(width);
    std::vector<int> succ = successor_table(classes);
    std::vector<int> keys(classes.size());
    std::iota(keys.begin(), keys.end(), 0);
    Partition cur = partition_from_keys(width, 1, keys);
    for (int order = 1; order <= static_cast<int>(classes.size()) + 1; ++order) {
        for (auto& k : keys) k = succ[static_cast<std::size_t>(k)];
        Partition next = partition_from_keys(width, order + 1, keys);
        if (cur.same_grouping(next)) return {order, cur};
        cur = std::move(next);
    }
    fail(errc::bad_argument, "partition refinement did not stabilize"); // unreachable
}

std::vector<ParamVector> EquivMap::domain_points() const {
    if (!points.empty()) return points;
    return ParamDomain(width, constraints).feasible_points();
}

bool EquivMap::contains(const ParamVector& alpha) const {
    if (alpha.width() != width) return false;
    if (!points.empty()) return std::find(points.begin(), points.end(), alpha) != points.end();
    return ParamDomain(width, constraints).contains(alpha);
}

std::optional<ParamVector> EquivMap::try_apply(const ParamVector& alpha) const {
    std::vector<int> out;
    out.reserve(transform.size());
    for (const RationalAffine& t : transform) {
        long long v = t.num.eval(alpha);
        if (t.den != 1 && v % t.den != 0) return std::nullopt;
        out.push_back(static_cast<int>(v / t.den));
    }
    if (out.empty() || out.front() < 1) return std::nullopt;
    for (std::size_t s = 0; s < out.size(); ++s) {
        if (out[s] < 0 || out[s] > 9) return std::nullopt;
        if (s + 1 < out.size() && out[s] < out[s + 1]) return std::nullopt;
    }
    return ParamVector(std::move(out), alpha.width());
}

ParamVector EquivMap::apply(const ParamVector& alpha) const {
    if (!contains(alpha)) fail(errc::out_of_domain, id + " does not apply at " + alpha.str());
    auto img = try_apply(alpha);
    if (!img) fail(errc::out_of_domain, id + " has no integral image at " + alpha.str());
    return *img;
}

namespace {

struct CatalogBuilder {
    int width;
    int h;
    std::vector<EquivMap> maps;

    AffineExpr V(int s) const { return AffineExpr::variable(s, h); }
    AffineExpr C(long long c) const { return AffineExpr::constant_of(c, h); }

    std::vector<RationalAffine> identity_transform() const {
        std::vector<RationalAffine> t;
        for (int s = 1; s <= h; ++s) t.push_back({V(s), 1});
        return t;
    }

    // flip one slot: s == 1 or s == k use 10-, middles 9-
    std::vector<RationalAffine> flip(const std::vector<int>& slots, int k) const {
        std::vector<RationalAffine> t = identity_transform();
        for (int s : slots) {
            long long base = (s == 1 || s == k) ? 10 : 9;
            t[static_cast<std::size_t>(s - 1)] = {C(base) - V(s), 1};
        }
        return t;
    }

    std::vector<LinearConstraint> shape(int k) const {
        std::vector<LinearConstraint> cs;
        cs.push_back(ge(V(k), C(1)));
        for (int s = k + 1; s <= h; ++s) cs.push_back(eq(V(s), C(0)));
        return cs;
    }

    void add(std::string id, std::vector<RationalAffine> t, std::vector<LinearConstraint> cs,
             std::string note, bool valid = true) {
        maps.push_back(EquivMap{std::move(id), width, 2, valid, std::move(t), std::move(cs), {}, std::move(note)});
    }

    void add_points(std::string id, std::vector<RationalAffine> t, std::vector<std::vector<int>> pts,
                    std::string note) {
        std::vector<ParamVector> dom;
        for (auto& p : pts) {
            p.resize(static_cast<std::size_t>(h), 0);
            dom.emplace_back(p, width);
        }
        maps.push_back(EquivMap{std::move(id), width, 2, true, std::move(t), {}, std::move(dom), std::move(note)});
    }
};

} // namespace

std::vector<EquivMap> catalog_r2(int width) {
    int h = half_width(width);
    CatalogBuilder b{width, h, {}};
    bool h3 = h == 3;
    auto V = [&](int s) { return b.V(s); };
    auto C = [&](long long c) { return b.C(c); };

    b.add("e2-0", b.identity_transform(), b.shape(h), "identity");

    for (int k = 2; k <= h; ++k) {
        std::string suffix = k == h ? "" : "-k" + std::to_string(k);
        // ends transposition
        {
            auto cs = b.shape(k);
            cs.push_back(ge(C(10), V(1) + V(2)));
            b.add(h3 ? (k == 3 ? "e2-1" : "e2-8") : "r2-11" + suffix, b.flip({1}, k), std::move(cs),
                  "first parameter transposition");
        }
        // middle transpositions
        for (int s = 2; s <= k - 1; ++s) {
            auto cs = b.shape(k);
            cs.push_back(ge(V(s - 1) + V(s), C(9)));
            cs.push_back(ge(C(9), V(s) + V(s + 1)));
            std::string id = (h3 && k == 3 && s == 2) ? "e2-2" : "r2-12" + suffix + "-s" + std::to_string(s);
            b.add(std::move(id), b.flip({s}, k), std::move(cs), "middle parameter transposition");
        }
        // last transposition
        {
            auto cs = b.shape(k);
            cs.push_back(ge(V(k - 1) + V(k), C(10)));
            b.add(h3 ? (k == 3 ? "e2-3" : "e2-9") : "r2-13" + suffix, b.flip({k}, k), std::move(cs),
                  "last nonzero parameter transposition");
        }
        // both ends
        {
            auto cs = b.shape(k);
            if (k == 2) {
                cs.push_back(eq(V(1), V(2)));
            } else {
                for (int s = 1; s <= k; ++s) cs.push_back(eq(V(s), C(5)));
            }
            b.add(h3 ? (k == 3 ? "e2-5" : "e2-10") : "r2-14" + suffix, b.flip({1, k}, k), std::move(cs),
                  "transposition of both end parameters");
        }
        // runs of equal parameters flipped together
        for (int s = 2; s <= k - 1; ++s)
            for (int e = s + 1; e <= k - 1; ++e) {
                auto cs = b.shape(k);
                cs.push_back(ge(V(s - 1) + V(s), C(9)));
                cs.push_back(ge(C(9), V(e) + V(e + 1)));
                for (int i = s; i < e; ++i) cs.push_back(eq(V(i), V(i + 1)));
                std::vector<int> slots;
                for (int i = s; i <= e; ++i) slots.push_back(i);
                b.add("r2-15" + suffix + "-s" + std::to_string(s) + "-e" + std::to_string(e),
                      b.flip(slots, k), std::move(cs), "equal-run transposition");
            }
        // first + middle run starting at 3, all fives
        for (int r = 3; r <= k - 1; ++r) {
            auto cs = b.shape(k);
            for (int s = 1; s <= r; ++s) cs.push_back(eq(V(s), C(5)));
            cs.push_back(ge(C(9), V(r) + V(r + 1)));
            std::vector<int> slots{1};
            for (int i = 3; i <= r; ++i) slots.push_back(i);
            b.add("r2-16" + suffix + "-r" + std::to_string(r), b.flip(slots, k), std::move(cs),
                  "all-fives prefix transposition");
        }
        // first + run from 2
        for (int r = 2; r <= k - 1; ++r) {
            if (h3 && k == 3 && r == 2) continue; // identical to e2-4 below
            auto cs = b.shape(k);
            cs.push_back(ge(V(2) + C(1), V(1)));
            for (int i = 2; i < r; ++i) cs.push_back(eq(V(i), V(i + 1)));
            cs.push_back(ge(C(9), V(r) + V(r + 1)));
            std::vector<int> slots{1};
            for (int i = 2; i <= r; ++i) slots.push_back(i);
            b.add("r2-17" + suffix + "-r" + std::to_string(r), b.flip(slots, k), std::move(cs),
                  "first-and-run transposition");
        }
    }

    if (h3) {
        // the table composites and the impossible double transpositions
        {
            auto cs = b.shape(3);
            cs.push_back(ge(V(2) + C(1), V(1)));
            cs.push_back(ge(C(9), V(2) + V(3)));
            b.add("e2-4", b.flip({1, 2}, 3), std::move(cs), "first and middle transposition");
        }
        {
            auto cs = b.shape(3);
            cs.push_back(ge(V(1) + V(2), C(9)));
            cs.push_back(ge(V(3), V(2) + C(1)));
            b.add("n2-6", b.flip({2, 3}, 3), std::move(cs), "middle-and-last transposition, empty domain",
                  false);
        }
        {
            auto cs = b.shape(3);
            cs.push_back(ge(V(2) + C(1), V(1)));
            cs.push_back(ge(V(3), V(2) + C(1)));
            b.add("n2-7", b.flip({1, 2, 3}, 3), std::move(cs), "triple transposition, empty domain", false);
        }
    }

    if (width % 2 == 0 && h >= 2) {
        // reversal: alpha -> (10-a^h, 9-a^{h-1}, ..., 9-a^2, 10-a^1)
        std::vector<RationalAffine> t;
        t.push_back({C(10) - V(h), 1});
        for (int s = h - 1; s >= 2; --s) t.push_back({C(9) - V(s), 1});
        t.push_back({C(10) - V(1), 1});
        auto cs = b.shape(h);
        cs.push_back(ge(V(1), V(2) + C(1)));
        b.add(width == 6 ? "e2-12" : "r2-4", std::move(t), std::move(cs), "parameter reversal (even widths)");
    }

    if (h >= 2) {
        auto cs = b.shape(1);
        cs.push_back(ge(V(1), C(2)));
        std::vector<RationalAffine> t = b.identity_transform();
        t[0] = {C(11) - V(1), 1};
        b.add("e2-11", std::move(t), std::move(cs), "single-parameter transposition");
    }

    if (width == 6) {
        auto rat = [&](AffineExpr e, long long den) { return RationalAffine{std::move(e), den}; };
        // products of the reversal with the one-slot transpositions
        b.add("e2-1x12", {rat(V(3), 1), rat(C(9) - V(2), 1), rat(C(10) - V(1), 1)},
              [&] { auto cs = b.shape(3); cs.push_back(ge(V(1), V(2) + C(1))); cs.push_back(ge(V(2) + V(3), C(9))); return cs; }(),
              "reversal composed with the first transposition");
        b.add("e2-2x12", {rat(C(10) - V(3), 1), rat(V(2), 1), rat(C(10) - V(1), 1)},
              [&] { auto cs = b.shape(3); cs.push_back(ge(V(1) + V(2), C(10))); cs.push_back(ge(C(10), V(2) + V(3))); return cs; }(),
              "reversal composed with the middle transposition");
        b.add("e2-3x12", {rat(C(10) - V(3), 1), rat(C(9) - V(2), 1), rat(V(1), 1)},
              [&] { auto cs = b.shape(3); cs.push_back(ge(C(9), V(1) + V(2))); return cs; }(),
              "reversal composed with the last transposition");
        b.add("e2-4x12", {rat(V(3), 1), rat(V(2), 1), rat(C(10) - V(1), 1)},
              [&] { auto cs = b.shape(3); cs.push_back(ge(V(1) + V(2), C(10))); cs.push_back(eq(V(2), V(3))); return cs; }(),
              "reversal composed with the double transposition");
        b.add("n2-6x12", {rat(C(10) - V(3), 1), rat(V(2), 1), rat(V(1), 1)},
              [&] { auto cs = b.shape(3); cs.push_back(eq(V(1), V(2))); cs.push_back(ge(C(10), V(2) + V(3))); return cs; }(),
              "reversal composed with the middle-and-last transposition");
        b.add("n2-7x12", {rat(V(3), 1), rat(V(2), 1), rat(V(1), 1)},
              [&] { auto cs = b.shape(3); cs.push_back(eq(V(1), V(2))); cs.push_back(eq(V(2), V(3))); return cs; }(),
              "full reversal of equal parameters");
        b.add_points("r2-51", {rat(V(1) + C(9), 2), rat(C(19) - V(1), 2), rat(C(5), 1)},
                     {{5, 0, 0}, {7, 0, 0}, {9, 0, 0}}, "single-parameter class paired into the full family");
        b.add_points("r2-52", {rat(C(20) - V(1), 2), rat(V(1) + C(8), 2), rat(C(5), 1)},
                     {{2, 0, 0}, {4, 0, 0}, {6, 0, 0}}, "single-parameter class paired into the full family");
    }

    if (width == 7) {
        auto rat = [&](AffineExpr e, long long den) { return RationalAffine{std::move(e), den}; };
        b.add_points("e2-61", {rat(V(1), 1), rat(V(2) + V(3), 2), rat(C(10) - V(2), 1)},
                     {{9, 8, 6}, {9, 7, 5}, {8, 7, 5}}, "pairs sharing images under distinct orderings");
        b.add_points("e2-62", {rat(V(1) + V(2) + C(1), 2), rat(V(2) + V(3) - V(1) + C(2), 1), rat(C(11) - V(1), 1)},
                     {{9, 8, 6}, {9, 8, 5}, {9, 6, 6}, {8, 7, 5}}, "pairs sharing images under distinct orderings");
        b.add_points("e2-63", {rat(V(1), 1), rat(C(10) - V(3), 1), rat(C(11) - V(2), 1)},
                     {{9, 8, 1}, {9, 7, 1}, {9, 7, 2}, {9, 6, 1}, {9, 6, 2}, {8, 7, 2}, {8, 6, 2}, {8, 6, 3}, {7, 6, 3}},
                     "pairs sharing images under distinct orderings");
        b.add_points("e2-64", {rat(V(1), 1), rat(C(10) - V(3), 1), rat(V(2) + C(2), 1)},
                     {{9, 3, 1}, {9, 2, 1}, {9, 1, 1}, {9, 3, 2}, {9, 2, 2}, {8, 3, 2}, {8, 2, 2}, {8, 3, 3}, {7, 3, 3}},
                     "pairs sharing images under distinct orderings");
        b.add_points("e2-65", {rat(C(11) - V(2), 1), rat(V(1) + V(2) - C(3), 1), rat(C(21) - 2 * V(1) - V(2), 1)},
                     {{7, 2, 0}, {6, 3, 0}}, "zero-tail class paired into the full family");
        b.add_points("e2-66", {rat(C(11) - V(2), 1), rat(C(18) - V(1), 2), rat(C(13) - V(1) - V(2), 1)},
                     {{6, 3, 0}}, "zero-tail class paired into the full family");
        b.add_points("e2-67", {rat(V(1) + V(2), 1), rat(C(18) - 2 * V(1) - V(2), 1), rat(V(2), 1)},
                     {{6, 1, 0}, {5, 2, 0}}, "zero-tail class paired into the full family");
        b.add_points("e2-68", {rat(C(20) - 2 * V(1) - V(2), 1), rat(C(10) - V(1) - V(2), 1), rat(V(2), 1)},
                     {{7, 1, 0}, {6, 2, 0}}, "zero-tail class paired into the full family");
        b.add_points("e2-69", {rat(C(11) - V(2), 1), rat(V(1) + V(2) - C(3), 1), rat(C(12) - V(1), 1)},
                     {{7, 3, 0}, {7, 2, 0}, {6, 3, 0}}, "zero-tail class paired into the full family");
        b.add_points("e2-70", {rat(V(1), 1), rat(C(19) - V(1) - V(2), 1), rat(V(1) + 2 * V(2) - C(10), 1)},
                     {{9, 3, 0}, {8, 4, 0}}, "zero-tail class paired into the full family");
        b.add_points("e2-71", {rat(V(2) + C(1), 1), rat(V(1) - C(4), 1), rat(V(2) - V(1) + C(3), 1)},
                     {{8, 8, 0}, {7, 7, 0}}, "zero-tail class paired into the full family");
        b.add_points("e2-72", {rat(V(1) + C(9), 2), rat(C(20) - 2 * V(2), 1), rat(C(10) - V(2), 1)},
                     {{7, 7, 0}}, "zero-tail class paired into the full family");
        b.add_points("e2-73", {rat(V(2) + C(10), 2), rat(C(21) - V(1) - V(2), 1), rat(C(11) - V(1), 1)},
                     {{9, 6, 0}}, "zero-tail class paired into the full family");
        // Three pairs the published lists miss; without them the order-2
        // closure leaves their classes disconnected from their image groups.
        b.add_points("e2-74", {rat(V(1) - C(1), 1), rat(V(2) + C(2), 1), rat(V(3), 1)}, {{8, 5, 1}},
                     "supplemental pair 851-771 completing the order-2 coverage");
        b.add_points("e2-75", {rat(V(1) - C(2), 1), rat(V(2) - C(4), 1), rat(V(3) - C(6), 1)}, {{7, 7, 6}},
                     "supplemental pair 776-530 completing the order-2 coverage");
        b.add_points("e2-76", {rat(V(1) - C(3), 1), rat(V(1) - C(3), 1), rat(V(1) - C(5), 1)}, {{8, 0, 0}},
                     "supplemental pair 800-553 completing the order-2 coverage");
    }

    if (width == 5) {
        auto rat = [&](AffineExpr e, long long den) { return RationalAffine{std::move(e), den}; };
        b.add_points("a5-1", {rat(V(1) + V(2) + C(1), 2), rat(C(11) - V(1), 1)}, {{8, 5}, {9, 6}},
                     "width-5 pair under distinct orderings");
        b.add_points("a5-2", {rat(C(11) - V(1), 2), rat(V(1), 1)}, {{3, 0}},
                     "width-5 zero-tail pair");
        b.add_points("a5-3", {rat(C(11) - V(1), 1), rat(2 * V(1) - C(3), 1)}, {{4, 0}},
                     "width-5 zero-tail pair");
    }

    return b.maps;
}

namespace {

struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

} // namespace

CatalogReport verify_catalog(int width) {
    CatalogReport rep;
    rep.width = width;
    std::vector<ParamVector> classes = enumerate_classes(width);
    std::map<ParamVector, int> index;
    for (std::size_t i = 0; i < classes.size(); ++i) index.emplace(classes[i], static_cast<int>(i));
    std::vector<int> succ = successor_table(classes);

    std::vector<EquivMap> maps = catalog_r2(width);
    DisjointSet ds(static_cast<int>(classes.size()));
    for (const EquivMap& m : maps) {
        if (!m.valid) continue;
        ++rep.maps_checked;
        for (const ParamVector& alpha : m.domain_points()) {
            auto img = m.try_apply(alpha);
            int ia = index.at(alpha);
            if (!img || succ[static_cast<std::size_t>(ia)] != succ[static_cast<std::size_t>(index.at(*img))]) {
                rep.unsound.emplace_back(m.id, alpha);
                continue;
            }
            ds.unite(ia, index.at(*img));
        }
    }

    // oracle: classes sharing a one-step image must be connected
    std::map<int, std::vector<int>> groups;
    for (std::size_t i = 0; i < classes.size(); ++i) groups[succ[i]].push_back(static_cast<int>(i));
    for (auto& [img, members] : groups) {
        long long k = static_cast<long long>(members.size());
        rep.oracle_pairs += k * (k - 1) / 2;
        for (std::size_t j = 1; j < members.size(); ++j)
            if (ds.find(members[0]) != ds.find(members[j]))
                rep.uncovered.push_back(UncoveredPair{classes[static_cast<std::size_t>(members[0])],
                                                      classes[static_cast<std::size_t>(members[j])]});
    }
    return rep;
}

namespace {

long long igcd(long long a, long long b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

RationalAffine normalized(RationalAffine r) {
    long long g = r.den;
    g = igcd(g, r.num.constant);
    for (long long c : r.num.coeffs) g = igcd(g, c);
    if (g > 1) {
        r.den /= g;
        r.num.constant /= g;
        for (auto& c : r.num.coeffs) c /= g;
    }
    return r;
}

bool same_transform(const std::vector<RationalAffine>& a, const std::vector<RationalAffine>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        RationalAffine x = normalized(a[i]);
        RationalAffine y = normalized(b[i]);
        if (x.den != y.den || !(x.num == y.num)) return false;
    }
    return true;
}

// f applied after g, exact rational substitution
std::vector<RationalAffine> compose_transform(const std::vector<RationalAffine>& f,
                                              const std::vector<RationalAffine>& g) {
    std::vector<RationalAffine> out;
    int h = static_cast<int>(g.size());
    for (const RationalAffine& fc : f) {
        long long den = 1;
        for (int s = 0; s < h; ++s)
            if (fc.num.coeffs[static_cast<std::size_t>(s)] != 0)
                den = den / igcd(den, g[static_cast<std::size_t>(s)].den) * g[static_cast<std::size_t>(s)].den;
        AffineExpr num = AffineExpr::constant_of(fc.num.constant * den, h);
        for (int s = 0; s < h; ++s) {
            long long a = fc.num.coeffs[static_cast<std::size_t>(s)];
            if (a == 0) continue;
            num = num + (a * den / g[static_cast<std::size_t>(s)].den) * g[static_cast<std::size_t>(s)].num;
        }
        out.push_back(normalized(RationalAffine{std::move(num), fc.den * den}));
    }
    return out;
}

} // namespace

ProductResult product(const EquivMap& f, const EquivMap& g, const std::vector<EquivMap>& universe) {
    ProductResult res;
    res.composed.id = f.id + "x" + g.id;
    res.composed.width = f.width;
    res.composed.order = 2;
    res.composed.valid = f.valid && g.valid;
    res.composed.transform = compose_transform(f.transform, g.transform);

    // the pipe domain: points g maps into f's domain
    for (const ParamVector& alpha : g.domain_points()) {
        auto mid = g.try_apply(alpha);
        if (mid && f.contains(*mid)) res.composed.points.push_back(alpha);
    }
    res.vacuous = res.composed.points.empty();

    for (const EquivMap& m : universe)
        if (same_transform(m.transform, res.composed.transform)) {
            res.kind = ProductKind::element;
            res.id = m.id;
            return res;
        }
    res.kind = ProductKind::outside;
    return res;
}

ProductTable group_classify(const std::vector<EquivMap>& set) {
    ProductTable t;
    int n = static_cast<int>(set.size());
    for (const EquivMap& m : set) t.ids.push_back(m.id);
    t.table.assign(static_cast<std::size_t>(n), std::vector<std::string>(static_cast<std::size_t>(n)));
    t.vacuous.assign(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));

    std::vector<std::vector<int>> cell(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
    t.closed = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            ProductResult r = product(set[static_cast<std::size_t>(i)], set[static_cast<std::size_t>(j)], set);
            t.vacuous[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = r.vacuous;
            if (r.kind == ProductKind::element) {
                t.table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = r.id;
                for (int m = 0; m < n; ++m)
                    if (t.ids[static_cast<std::size_t>(m)] == r.id) cell[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m;
                if (!set[static_cast<std::size_t>(cell[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])].valid)
                    t.closed = false;
            } else {
                t.table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = "outside";
                t.closed = false;
            }
        }

    t.abelian = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (t.table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
                t.table[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
                t.abelian = false;

    int identity = -1;
    for (int e = 0; e < n; ++e) {
        bool is_id = true;
        for (int j = 0; j < n && is_id; ++j)
            if (cell[static_cast<std::size_t>(e)][static_cast<std::size_t>(j)] != j ||
                cell[static_cast<std::size_t>(j)][static_cast<std::size_t>(e)] != j)
                is_id = false;
        if (is_id) {
            identity = e;
            break;
        }
    }
    t.has_identity = identity >= 0;

    t.classification = "none";
    if (t.closed && t.has_identity) {
        bool involutive = true;
        for (int i = 0; i < n; ++i)
            if (cell[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] != identity) involutive = false;
        if (n == 2 && involutive) t.classification = "Z2";
        if (n == 4 && involutive && t.abelian) t.classification = "klein-four";
    }
    return t;
}

std::vector<EquivMap> equivalence_set(const std::vector<EquivMap>& catalog, const std::string& name) {
    auto find = [&](const std::string& id) -> const EquivMap* {
        for (const auto& m : catalog)
            if (m.id == id) return &m;
        fail(errc::bad_argument, "catalog has no entry " + id);
    };
    std::vector<EquivMap> out;
    if (name == "I") {
        for (const char* id : {"e2-0", "e2-1", "e2-2", "e2-3", "e2-4", "e2-5", "n2-6", "n2-7"})
            out.push_back(*find(id));
    } else if (name == "II") {
        // identity restricted to the zero-tail shape
        EquivMap id0 = *find("e2-0");
        int h = half_width(id0.width);
        id0.constraints.clear();
        id0.constraints.push_back(ge(AffineExpr::variable(2, h), AffineExpr::constant_of(1, h)));
        for (int s = 3; s <= h; ++s)
            id0.constraints.push_back(eq(AffineExpr::variable(s, h), AffineExpr::constant_of(0, h)));
        out.push_back(std::move(id0));
        for (const char* id : {"e2-8", "e2-9", "e2-10"}) out.push_back(*find(id));
    } else if (name == "III") {
        EquivMap id0 = *find("e2-0");
        int h = half_width(id0.width);
        id0.constraints.clear();
        id0.constraints.push_back(ge(AffineExpr::variable(1, h), AffineExpr::constant_of(1, h)));
        for (int s = 2; s <= h; ++s)
            id0.constraints.push_back(eq(AffineExpr::variable(s, h), AffineExpr::constant_of(0, h)));
        out.push_back(std::move(id0));
        out.push_back(*find("e2-11"));
    } else {
        fail(errc::bad_argument, "unknown equivalence set '" + name + "' (expected I, II, or III)");
    }
    return out;
}

std::vector<HigherFact> higher_equiv_examples(int width) {
    if (width != 6 && width != 7) fail(errc::bad_argument, "higher-order examples exist for widths 6 and 7");
    struct Spec {
        const char* name;
        std::vector<int> lhs, rhs;
        int order;
    };
    std::vector<Spec> specs;
    if (width == 6) {
        specs = {
            {"r3-1a", {9, 5, 5}, {6, 5, 5}, 3}, {"r3-1b", {8, 6, 5}, {7, 6, 5}, 3},
            {"r3-1c", {8, 5, 5}, {7, 5, 5}, 3}, {"r3-1d", {8, 6, 6}, {7, 6, 6}, 3},
            {"r3-2", {9, 8, 8}, {9, 8, 7}, 3},  {"r3-4", {9, 0, 0}, {6, 5, 5}, 3},
        };
    } else {
        specs = {
            {"r3-3", {9, 8, 7}, {9, 8, 5}, 3},
            {"r4-1", {9, 8, 1}, {9, 6, 1}, 4},
            {"r7-1", {5, 3, 3}, {6, 2, 1}, 7},
        };
    }
    std::vector<HigherFact> out;
    for (const Spec& s : specs) {
        HigherFact f{s.name, ParamVector(s.lhs, width), ParamVector(s.rhs, width), s.order, false, false,
                     ParamVector(s.lhs, width)};
        f.holds = class_r_equiv(f.lhs, f.rhs, s.order);
        f.new_at_order = f.holds && s.order >= 2 && !class_r_equiv(f.lhs, f.rhs, s.order - 1);
        if (f.holds) f.common_image = iterate_params(f.lhs, s.order - 1);
        out.push_back(std::move(f));
    }
    return out;
}

std::string export_partition_json(const Partition& p) {
    std::vector<ParamVector> classes = enumerate_classes(p.width);
    nlohmann::ordered_json j;
    j["width"] = p.width;
    j["order"] = p.order;
    j["blocks"] = nlohmann::ordered_json::array();
    for (const auto& block : p.blocks) {
        nlohmann::ordered_json bj = nlohmann::ordered_json::array();
        for (int id : block) bj.push_back(classes[static_cast<std::size_t>(id)].str());
        j["blocks"].push_back(std::move(bj));
    }
    return j.dump(2) + "\n";
}

std::string export_table_csv(const ProductTable& t) {
    std::ostringstream os;
    os << "fxg";
    for (const auto& id : t.ids) os << "," << id;
    os << "\n";
    for (std::size_t i = 0; i < t.ids.size(); ++i) {
        os << t.ids[i];
        for (std::size_t j = 0; j < t.ids.size(); ++j) os << "," << t.table[i][j];
        os << "\n";
    }
    return os.str();
}

std::string export_equiv_catalog_json(const std::vector<EquivMap>& maps, int width) {
    nlohmann::ordered_json j;
    j["width"] = width;
    j["maps"] = nlohmann::ordered_json::array();
    for (const EquivMap& m : maps) {
        nlohmann::ordered_json mj;
        mj["id"] = m.id;
        mj["order"] = m.order;
        mj["valid"] = m.valid;
        mj["note"] = m.note;
        mj["transform"] = nlohmann::ordered_json::array();
        for (const RationalAffine& t : m.transform) {
            nlohmann::ordered_json tj;
            tj["num"] = nlohmann::ordered_json::array();
            tj["num"].push_back(t.num.constant);
            for (long long c : t.num.coeffs) tj["num"].push_back(c);
            tj["den"] = t.den;
            mj["transform"].push_back(std::move(tj));
        }
        if (!m.points.empty()) {
            mj["domain_points"] = nlohmann::ordered_json::array();
            for (const auto& p : m.points) mj["domain_points"].push_back(p.str());
        } else {
            mj["domain"] = nlohmann::ordered_json::array();
            for (const auto& c : m.constraints) {
                nlohmann::ordered_json cj;
                cj["coeffs"] = nlohmann::ordered_json::array();
                cj["coeffs"].push_back(c.expr.constant);
                for (long long v : c.expr.coeffs) cj["coeffs"].push_back(v);
                cj["relation"] = c.relation == Relation::ge0 ? ">=0" : "==0";
                mj["domain"].push_back(std::move(cj));
            }
        }
        j["maps"].push_back(std::move(mj));
    }
    return j.dump(2) + "\n";
}

} // namespace kaprekar
