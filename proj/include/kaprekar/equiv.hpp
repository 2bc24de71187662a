#pragma once

// Order-r equivalences: partitions of the classes by r-step image equality and
// their stabilization, the built-in catalog of order-2 maps with domains,
// products of equivalences, and group-structure classification.

#include <optional>
#include <string>
#include <vector>

#include "kaprekar/graph.hpp"

namespace kaprekar {

/// m R_r n  iff  K^r(m) == K^r(n).
bool r_equiv(const DigitNumber& m, const DigitNumber& n, int r);

/// Class-level order-r equivalence: the (r-1)-step parameter images coincide.
bool class_r_equiv(const ParamVector& a, const ParamVector& b, int r);

/// Partition of the width's classes by equality of the (r-1)-step image;
/// order 1 is discrete. Blocks are sorted by their smallest class id.
struct Partition {
    int width = 0;
    int order = 0;
    std::vector<std::vector<int>> blocks; // class ids, ascending within a block
    std::vector<int> block_id;            // class id -> block index

    int block_count() const { return static_cast<int>(blocks.size()); }
    bool same_block(int a, int b) const { return block_id[static_cast<std::size_t>(a)] == block_id[static_cast<std::size_t>(b)]; }
    /// Grouping equality, ignoring the order label.
    bool same_grouping(const Partition& other) const { return block_id == other.block_id; }
};

Partition partition(int width, int order);

/// Least u with partition(w, u) == partition(w, u+1), and that partition.
std::pair<int, Partition> stabilize(int width);

/// integer affine expression divided by a positive constant; exact only where
/// the division is.
struct RationalAffine {
    AffineExpr num;
    long long den = 1;
};

/// One order-2 map alpha_1 -> alpha_2 certifying R_2 on its domain.
/// Invalid entries are transpositions whose domain contradicts the parameter
/// ordering; they are kept for the product tables.
struct EquivMap {
    std::string id;
    int width = 0;
    int order = 2;
    bool valid = true;
    std::vector<RationalAffine> transform;      // h components
    std::vector<LinearConstraint> constraints;  // conjoined with structural
    std::vector<ParamVector> points;            // non-empty: explicit domain
    std::string note;

    std::vector<ParamVector> domain_points() const;
    bool contains(const ParamVector& alpha) const;
    /// Image if it is integral and a valid parameter tuple.
    std::optional<ParamVector> try_apply(const ParamVector& alpha) const;
    ParamVector apply(const ParamVector& alpha) const;
};

/// The built-in order-2 catalog instantiated at this width: the general
/// transposition families on each nonzero prefix, the reversal map on even
/// widths, and the width-specific entries for w = 5, 6, 7.
std::vector<EquivMap> catalog_r2(int width);

struct UncoveredPair {
    ParamVector a;
    ParamVector b;
};

struct CatalogReport {
    int width = 0;
    int maps_checked = 0;
    std::vector<std::pair<std::string, ParamVector>> unsound; // (map id, point)
    long long oracle_pairs = 0;   // class pairs with equal one-step images
    std::vector<UncoveredPair> uncovered;
    bool sound() const { return unsound.empty(); }
    bool complete() const { return uncovered.empty(); }
};

/// Soundness: every valid map certifies R_2 at every domain point.
/// Completeness: the transitive closure of catalog edges covers every pair of
/// classes with equal step images.
CatalogReport verify_catalog(int width);

enum class ProductKind { element, outside };

struct ProductResult {
    ProductKind kind = ProductKind::outside;
    std::string id;       // matched catalog/set element when kind == element
    bool vacuous = false; // composed domain has no feasible point
    EquivMap composed;
};

/// (f x g)(alpha) = f[g(alpha)], matched against `universe` by transform
/// equality, with the composed domain recomputed by enumeration.
ProductResult product(const EquivMap& f, const EquivMap& g, const std::vector<EquivMap>& universe);

struct ProductTable {
    std::vector<std::string> ids;
    std::vector<std::vector<std::string>> table; // ids or "outside"
    std::vector<std::vector<bool>> vacuous;
    bool closed = false;        // every product lands on a valid element of the set
    bool abelian = false;
    bool has_identity = false;
    std::string classification; // "klein-four", "Z2", or "none"
};

ProductTable group_classify(const std::vector<EquivMap>& set);

/// Table sets at h == 3: "I" (the eight one-slot transpositions), "II" (the
/// zero-tail set), "III" (the single-parameter flip with identity).
std::vector<EquivMap> equivalence_set(const std::vector<EquivMap>& catalog, const std::string& name);

/// One named higher-order fact checked by direct parameter iteration.
struct HigherFact {
    std::string name;
    ParamVector lhs;
    ParamVector rhs;
    int order = 0;
    bool holds = false;          // equivalent at `order`
    bool new_at_order = false;   // not already equivalent at order-1
    ParamVector common_image;    // the shared (order-1)-step image when holds
};

/// The named order-3/4/7 facts for widths 6 and 7.
std::vector<HigherFact> higher_equiv_examples(int width);

std::string export_partition_json(const Partition& p);
std::string export_table_csv(const ProductTable& t);
std::string export_equiv_catalog_json(const std::vector<EquivMap>& maps, int width);

} // namespace kaprekar
