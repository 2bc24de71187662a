#include "kaprekar/graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"
#include "kaprekar/parallel.hpp"

namespace kaprekar {

ClassGraph::ClassGraph(int width) : width_(width), nodes_(enumerate_classes(width)) {
    int n = size();
    std::map<ParamVector, int> index;
    for (int i = 0; i < n; ++i) index.emplace(nodes_[static_cast<std::size_t>(i)], i);

    succ_.assign(static_cast<std::size_t>(n), -1);
    parallel_for(n, [&](int i) {
        succ_[static_cast<std::size_t>(i)] = index.at(total_k(nodes_[static_cast<std::size_t>(i)]));
    });

    // Locate the attractor cycles: colour 0 = unseen, 1 = on the current walk,
    // 2 = settled.
    std::vector<int> colour(static_cast<std::size_t>(n), 0);
    std::vector<int> cycle_id(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> raw_cycles;
    for (int start = 0; start < n; ++start) {
        if (colour[static_cast<std::size_t>(start)] != 0) continue;
        std::vector<int> path;
        int x = start;
        while (colour[static_cast<std::size_t>(x)] == 0) {
            colour[static_cast<std::size_t>(x)] = 1;
            path.push_back(x);
            x = succ_[static_cast<std::size_t>(x)];
        }
        if (colour[static_cast<std::size_t>(x)] == 1) {
            // new cycle: the tail of the path starting at x
            auto it = std::find(path.begin(), path.end(), x);
            std::vector<int> cyc(it, path.end());
            int cid = static_cast<int>(raw_cycles.size());
            for (int y : cyc) cycle_id[static_cast<std::size_t>(y)] = cid;
            raw_cycles.push_back(std::move(cyc));
        }
        for (int y : path) colour[static_cast<std::size_t>(y)] = 2;
    }

    // Depth and component by memoized walks; attractor nodes seed depth 0.
    depth_.assign(static_cast<std::size_t>(n), -1);
    comp_.assign(static_cast<std::size_t>(n), -1);
    for (std::size_t c = 0; c < raw_cycles.size(); ++c)
        for (int y : raw_cycles[c]) {
            depth_[static_cast<std::size_t>(y)] = 0;
            comp_[static_cast<std::size_t>(y)] = static_cast<int>(c);
        }
    for (int i = 0; i < n; ++i) {
        if (depth_[static_cast<std::size_t>(i)] != -1) continue;
        std::vector<int> path;
        int x = i;
        while (depth_[static_cast<std::size_t>(x)] == -1) {
            path.push_back(x);
            x = succ_[static_cast<std::size_t>(x)];
        }
        int d = depth_[static_cast<std::size_t>(x)];
        int c = comp_[static_cast<std::size_t>(x)];
        for (auto it = path.rbegin(); it != path.rend(); ++it) {
            depth_[static_cast<std::size_t>(*it)] = ++d;
            comp_[static_cast<std::size_t>(*it)] = c;
        }
    }

    // Assemble components: descending size, then smallest attractor member.
    std::vector<Component> comps(raw_cycles.size());
    for (std::size_t c = 0; c < raw_cycles.size(); ++c) {
        // canonical rotation: start at the lexicographically largest member,
        // which is the lowest node id under the descending enumeration
        std::vector<int>& cyc = raw_cycles[c];
        auto anchor_it = std::min_element(cyc.begin(), cyc.end());
        std::rotate(cyc.begin(), anchor_it, cyc.end());
        comps[c].cycle = cyc;
    }
    for (int i = 0; i < n; ++i) comps[static_cast<std::size_t>(comp_[static_cast<std::size_t>(i)])].nodes.push_back(i);
    std::vector<int> order(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const auto& ca = comps[static_cast<std::size_t>(a)];
        const auto& cb = comps[static_cast<std::size_t>(b)];
        if (ca.nodes.size() != cb.nodes.size()) return ca.nodes.size() > cb.nodes.size();
        return nodes_[static_cast<std::size_t>(*std::max_element(ca.cycle.begin(), ca.cycle.end()))] <
               nodes_[static_cast<std::size_t>(*std::max_element(cb.cycle.begin(), cb.cycle.end()))];
    });
    std::vector<int> rank(comps.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        rank[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
        components_.push_back(std::move(comps[static_cast<std::size_t>(order[i])]));
        if (width_ == 6 && i < 26) components_.back().alias = std::string(1, static_cast<char>('A' + i));
    }
    for (int i = 0; i < n; ++i)
        comp_[static_cast<std::size_t>(i)] = rank[static_cast<std::size_t>(comp_[static_cast<std::size_t>(i)])];
}

int ClassGraph::id_of(const ParamVector& alpha) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), alpha,
                               [](const ParamVector& a, const ParamVector& b) { return b < a; });
    if (it == nodes_.end() || *it != alpha) fail(errc::bad_argument, "unknown class " + alpha.str());
    return static_cast<int>(it - nodes_.begin());
}

int ClassGraph::distance_to(const ParamVector& alpha, const ParamVector& target) const {
    int x = id_of(alpha);
    int t = id_of(target);
    int limit = depth(x) + static_cast<int>(components_[static_cast<std::size_t>(component_of(x))].cycle.size());
    for (int steps = 0; steps <= limit; ++steps) {
        if (x == t) return steps;
        x = succ(x);
    }
    fail(errc::bad_argument, target.str() + " is not reachable from " + alpha.str());
}

std::pair<ParamVector, int> ClassGraph::anchor(const ParamVector& alpha) const {
    int x = id_of(alpha);
    int r = static_cast<int>(components_[static_cast<std::size_t>(component_of(x))].cycle.size());
    int d = depth(x);
    int t = (d + r - 1) / r * r;
    for (int i = 0; i < t; ++i) x = succ(x);
    return {node(x), t};
}

ClassGraph build_graph(int width) { return ClassGraph(width); }

std::vector<Cycle> cycles(const ClassGraph& g) {
    std::vector<Cycle> out;
    for (const Component& comp : g.components()) {
        Cycle c;
        for (int id : comp.cycle) c.members.push_back(g.node(id));
        c.numeric_members = numeric_cycle(c);
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<Cycle> cycles(int width) { return cycles(build_graph(width)); }

std::vector<DigitNumber> numeric_cycle(const Cycle& c) {
    int r = c.length();
    std::vector<DigitNumber> nums;
    nums.reserve(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
        const ParamVector& prev = c.members[static_cast<std::size_t>((i + r - 1) % r)];
        nums.push_back(apply_f(prev));
    }
    for (int i = 0; i < r; ++i) {
        if (params(nums[static_cast<std::size_t>(i)]) != c.members[static_cast<std::size_t>(i)] ||
            kaprekar_step(nums[static_cast<std::size_t>(i)]) != nums[static_cast<std::size_t>((i + 1) % r)])
            fail(errc::bad_argument, "numeric lift of the cycle is inconsistent");
    }
    return nums;
}

int distance(const ClassGraph& g, const ParamVector& alpha) { return g.anchor(alpha).second; }

std::string export_dot(const ClassGraph& g) {
    std::ostringstream os;
    os << "digraph classes {\n";
    os << "  node [shape=box, fontname=\"monospace\"];\n";
    for (std::size_t c = 0; c < g.components().size(); ++c) {
        const Component& comp = g.components()[c];
        os << "  subgraph cluster_" << c << " {\n";
        os << "    label=\"" << (comp.alias.empty() ? "component " + std::to_string(c) : "tree " + comp.alias)
           << " (" << comp.nodes.size() << " classes)\";\n";
        for (int id : comp.nodes) {
            bool on_cycle = std::find(comp.cycle.begin(), comp.cycle.end(), id) != comp.cycle.end();
            os << "    \"" << g.node(id).str() << "\"";
            if (on_cycle) os << " [peripheries=2]";
            os << ";\n";
        }
        for (int id : comp.nodes) {
            bool cycle_edge = g.depth(id) == 0;
            os << "    \"" << g.node(id).str() << "\" -> \"" << g.node(g.succ(id)).str() << "\"";
            if (cycle_edge) os << " [style=bold]";
            os << ";\n";
        }
        os << "  }\n";
    }
    os << "}\n";
    return os.str();
}

std::string export_graph_json(const ClassGraph& g) {
    nlohmann::ordered_json j;
    j["width"] = g.width();
    j["classes"] = nlohmann::ordered_json::array();
    for (const auto& n : g.nodes()) j["classes"].push_back(n.str());
    j["edges"] = nlohmann::ordered_json::array();
    for (int i = 0; i < g.size(); ++i) j["edges"].push_back({g.node(i).str(), g.node(g.succ(i)).str()});
    j["components"] = nlohmann::ordered_json::array();
    for (const Component& comp : g.components()) {
        nlohmann::ordered_json cj;
        cj["size"] = comp.nodes.size();
        if (!comp.alias.empty()) cj["alias"] = comp.alias;
        cj["cycle"] = nlohmann::ordered_json::array();
        for (int id : comp.cycle) cj["cycle"].push_back(g.node(id).str());
        nlohmann::ordered_json depths;
        for (int id : comp.nodes) depths[g.node(id).str()] = g.depth(id);
        cj["depths"] = std::move(depths);
        j["components"].push_back(std::move(cj));
    }
    return j.dump(2) + "\n";
}

} // namespace kaprekar
