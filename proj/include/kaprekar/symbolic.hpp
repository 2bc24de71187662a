#pragma once

// Derivation, evaluation, and composition of the piecewise-affine parametric
// step functions K_i(alpha) = alpha' together with their integer-linear
// domains, plus parametric fixed points.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kaprekar/affine.hpp"

namespace kaprekar {

/// One derived function: an affine output map valid on the sub-lattice where
/// a particular ordering (permutation) sorts the image digits descending.
struct SymbolicKFn {
    std::string id;                   // family tag + canonical permutation
    FamilyTag family;
    std::vector<int> permutation;     // 1-based positions into the family's image layout
    std::vector<AffineExpr> output;   // h expressions for alpha'
    ParamDomain domain;
    std::vector<ParamVector> feasible; // cached, canonical order
    std::vector<std::string> aliases;

    bool contains(const ParamVector& alpha) const;
};

/// Extra constraints that pin a parameter tuple to one family at this width.
std::vector<LinearConstraint> family_constraints(const FamilyTag& tag);

/// All family tags present at a width: f1, f2(r) for r = 3..h, f3 (h >= 2).
std::vector<FamilyTag> family_tags(int width);

/// The w digit slots of f(alpha) as affine expressions (constants for the
/// fixed nines).
std::vector<AffineExpr> symbolic_image(const FamilyTag& tag);

struct Catalog {
    int width = 0;
    std::vector<SymbolicKFn> fns;
    int raw_orderings = 0;                    // feasible orderings before tie merging
    std::map<std::string, int> family_counts; // family tag -> merged entry count
    std::map<std::string, int> family_raw;    // family tag -> raw ordering count

    const SymbolicKFn* by_id(const std::string& id) const;
    const SymbolicKFn* by_alias(const std::string& alias) const;
    std::vector<const SymbolicKFn*> covering(const ParamVector& alpha) const;
};

/// Enumerate every digit ordering with a non-empty integer domain, merge
/// orderings that differ only by swaps of digits equal across one ordering's
/// whole domain (lower original position first), and read the output map as
/// pairwise differences of the ordered digits. Attaches curated aliases.
Catalog derive_k_functions(int width);

/// Evaluate fn at alpha; reports the violated constraint when alpha is
/// outside the domain.
ParamVector eval_k(const SymbolicKFn& fn, const ParamVector& alpha);

/// The parameter step map, computed numerically: params(apply_f(alpha)).
/// Total on every class; the oracle all symbolic work is checked against.
ParamVector total_k(const ParamVector& alpha);

/// r-fold application of total_k.
ParamVector iterate_params(const ParamVector& alpha, int r);

struct FixedPoint {
    ParamVector alpha_e;
    DigitNumber n_e;
    std::string witness_fn; // catalog id with output(alpha_e) == alpha_e; empty if not attached
};

/// All parametric fixed points of the width, with catalog witnesses.
std::vector<FixedPoint> solve_fixed_points(int width);
std::vector<FixedPoint> solve_fixed_points(int width, const Catalog& catalog);

/// Fixed parameter tuples by plain enumeration (no catalog).
std::vector<ParamVector> fixed_params(int width);

enum class ConstantFamily {
    even_63_32, // alpha = 6 3..3 2, w = 2h, h >= 2
    odd_864_32, // alpha = 8 6 4 3..3 2, w = 2h+1, h >= 4
};

/// Construct the family member and verify it maps to itself.
FixedPoint verify_constant_family(ConstantFamily kind, int h);

/// Affine composition of the output maps, applied left to right.
std::vector<AffineExpr> compose(const std::vector<const SymbolicKFn*>& path);

/// A known published form of one K_i: alias, output map, and domain.
struct CuratedRow {
    std::string alias;
    FamilyTag family;
    std::vector<AffineExpr> output;
    std::vector<LinearConstraint> domain_extra;
};

/// Known K_i forms at this width (empty when none curated).
std::vector<CuratedRow> curated_rows(int width);

/// Evaluate a curated form at alpha, enforcing its domain.
ParamVector eval_row(const CuratedRow& row, const ParamVector& alpha);

/// How one curated row compares against a catalog.
struct RowMatch {
    std::string alias;
    std::string matched_id;   // empty when no entry covers the row
    bool values_match = false; // entry output == row output at every row point
    bool domain_superset = false;
    bool domain_equal = false;
    bool exprs_equal = false;
    int row_points = 0;
};

std::vector<RowMatch> match_curated_rows(const Catalog& catalog);

/// JSON document: width, per-family counts, entries with coefficient arrays
/// laid out [constant, c1, ..., ch].
std::string export_catalog_json(const Catalog& catalog);

} // namespace kaprekar
