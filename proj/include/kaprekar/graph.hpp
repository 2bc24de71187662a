#pragma once

// The functional graph of parametric classes under the step map: components
// (trees articulated on cycles/constants), depths, cycles and their numeric
// lifts, and DOT/JSON export.

#include <string>
#include <vector>

#include "kaprekar/symbolic.hpp"

namespace kaprekar {

/// An attractor cycle, canonically rotated. Length-1 cycles are the constants.
struct Cycle {
    std::vector<ParamVector> members;       // alpha_c1 .. alpha_cr
    std::vector<DigitNumber> numeric_members; // n_ci with p(n_ci) = alpha_ci, K(n_ci) = n_c(i+1)
    int length() const { return static_cast<int>(members.size()); }
};

struct Component {
    std::vector<int> nodes;      // node ids, sorted
    std::vector<int> cycle;      // node ids along the attractor, canonical rotation
    std::string alias;           // "A", "B", ... for w = 6; empty otherwise
};

class ClassGraph {
public:
    explicit ClassGraph(int width);

    int width() const { return width_; }
    int size() const { return static_cast<int>(nodes_.size()); }
    const std::vector<ParamVector>& nodes() const { return nodes_; }
    const ParamVector& node(int id) const { return nodes_[static_cast<std::size_t>(id)]; }
    int id_of(const ParamVector& alpha) const;

    int succ(int id) const { return succ_[static_cast<std::size_t>(id)]; }
    int depth(int id) const { return depth_[static_cast<std::size_t>(id)]; }
    int component_of(int id) const { return comp_[static_cast<std::size_t>(id)]; }
    const std::vector<Component>& components() const { return components_; }

    /// Steps from alpha to the unique attractor node (0 on the attractor).
    int depth(const ParamVector& alpha) const { return depth(id_of(alpha)); }

    /// Least t >= 0 with step^t(alpha) == target; requires both in one component.
    int distance_to(const ParamVector& alpha, const ParamVector& target) const;

    /// The cycle member reached after a multiple-of-cycle-length number of
    /// steps, i.e. the member whose distance from alpha is divisible by the
    /// attractor length, and that distance.
    std::pair<ParamVector, int> anchor(const ParamVector& alpha) const;

private:
    int width_;
    std::vector<ParamVector> nodes_; // canonical enumeration order
    std::vector<int> succ_;
    std::vector<int> depth_;
    std::vector<int> comp_;
    std::vector<Component> components_;
};

ClassGraph build_graph(int width);

/// All attractor cycles of the width, ordered like the components
/// (descending size, then smallest attractor member).
std::vector<Cycle> cycles(int width);
std::vector<Cycle> cycles(const ClassGraph& g);

/// The numeric lift: n_ci = apply_f(alpha_c(i-1)), so K(n_ci) = n_c(i+1) and
/// p(n_ci) = alpha_ci.
std::vector<DigitNumber> numeric_cycle(const Cycle& c);

/// Spec'd distance: steps from alpha to its anchor cycle member.
int distance(const ClassGraph& g, const ParamVector& alpha);

/// Deterministic DOT rendering: one cluster per component, attractor edges bold.
std::string export_dot(const ClassGraph& g);

/// Deterministic JSON rendering: width, classes, edges, components.
std::string export_graph_json(const ClassGraph& g);

} // namespace kaprekar
