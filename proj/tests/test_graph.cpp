#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "kaprekar/graph.hpp"
#include "oracle.hpp"

using namespace kaprekar;

namespace {
ParamVector pv(std::initializer_list<int> a, int w) { return ParamVector(std::vector<int>(a), w); }
} // namespace

TEST_CASE("graph structure at small widths") {
    ClassGraph g3 = build_graph(3);
    CHECK(g3.size() == 9);
    CHECK(g3.components().size() == 1);
    CHECK(g3.components()[0].cycle.size() == 1);
    CHECK(g3.node(g3.components()[0].cycle[0]).str() == "5");

    ClassGraph g6 = build_graph(6);
    CHECK(g6.size() == 219);
    REQUIRE(g6.components().size() == 3);
    CHECK(g6.components()[0].nodes.size() == 201);
    CHECK(g6.components()[0].alias == "A");
    CHECK(g6.components()[1].nodes.size() == 17);
    CHECK(g6.components()[2].nodes.size() == 1);
    CHECK(g6.node(g6.components()[1].cycle[0]).str() == "632");
    CHECK(g6.node(g6.components()[2].cycle[0]).str() == "550");

    ClassGraph g7 = build_graph(7);
    CHECK(g7.components().size() == 1);
    CHECK(g7.components()[0].cycle.size() == 8);
}

TEST_CASE("successors, depths, component sizes are consistent") {
    for (int w : {2, 4, 5, 6, 7}) {
        ClassGraph g = build_graph(w);
        std::size_t covered = 0;
        for (const Component& comp : g.components()) covered += comp.nodes.size();
        CHECK(static_cast<int>(covered) == g.size());
        for (int i = 0; i < g.size(); ++i) {
            CHECK(total_k(g.node(i)) == g.node(g.succ(i)));
            if (g.depth(i) > 0) CHECK(g.depth(g.succ(i)) == g.depth(i) - 1);
            if (g.depth(i) == 0) CHECK(g.component_of(g.succ(i)) == g.component_of(i));
        }
    }
}

TEST_CASE("cycles against exhaustive number enumeration") {
    for (int w : {2, 5, 6}) {
        auto expected = oracle::ref_number_cycles(w);
        auto got = cycles(w);
        CHECK(got.size() == expected.size());
        std::set<std::vector<long long>> got_sets;
        for (const Cycle& c : got) {
            std::vector<long long> nums;
            for (const DigitNumber& n : c.numeric_members) nums.push_back(std::stoll(n.str()));
            std::sort(nums.begin(), nums.end());
            got_sets.insert(nums);
        }
        CHECK(got_sets == expected);
    }
}

TEST_CASE("the width-2 cycle") {
    auto cs = cycles(2);
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].length() == 5);
    std::set<std::string> members;
    for (const auto& m : cs[0].members) members.insert(m.str());
    CHECK(members == std::set<std::string>{"9", "7", "5", "1", "3"});
}

TEST_CASE("numeric cycle members are distinct multiples of nine") {
    for (int w : {5, 6, 7}) {
        for (const Cycle& c : cycles(w)) {
            std::set<std::string> seen;
            for (const DigitNumber& n : c.numeric_members) {
                CHECK(n.digit_sum() % 9 == 0);
                CHECK(seen.insert(n.str()).second);
            }
            // the lift is aligned: p(n_ci) = alpha_ci and K(n_ci) = n_c(i+1)
            for (int i = 0; i < c.length(); ++i) {
                CHECK(params(c.numeric_members[static_cast<std::size_t>(i)]) ==
                      c.members[static_cast<std::size_t>(i)]);
                CHECK(kaprekar_step(c.numeric_members[static_cast<std::size_t>(i)]) ==
                      c.numeric_members[static_cast<std::size_t>((i + 1) % c.length())]);
            }
        }
    }
}

TEST_CASE("distances") {
    ClassGraph g = build_graph(6);
    CHECK(distance(g, pv({6, 6, 1}, 6)) == 14);
    CHECK(g.anchor(pv({6, 6, 1}, 6)).first.str() == "861");
    CHECK(distance(g, pv({4, 3, 0}, 6)) == 7);
    CHECK(g.anchor(pv({4, 3, 0}, 6)).first.str() == "861");
    for (int id : g.components()[0].cycle) CHECK(distance(g, g.node(id)) == 0);

    CHECK(g.distance_to(pv({6, 6, 1}, 6), pv({8, 6, 1}, 6)) == 14);
    CHECK(g.distance_to(pv({8, 6, 1}, 6), pv({8, 6, 3}, 6)) == 1);
    CHECK(g.distance_to(pv({8, 6, 1}, 6), pv({8, 6, 1}, 6)) == 0);
    CHECK_THROWS_AS(g.distance_to(pv({8, 6, 1}, 6), pv({6, 3, 2}, 6)), Error); // different trees
}

TEST_CASE("DOT export") {
    ClassGraph g3 = build_graph(3);
    std::string dot = export_dot(g3);
    CHECK(dot.find("digraph") != std::string::npos);
    for (int a = 1; a <= 9; ++a) CHECK(dot.find("\"" + std::to_string(a) + "\"") != std::string::npos);
    CHECK(dot.find("-> \"5\"") != std::string::npos);
    CHECK(dot.find("[style=bold]") != std::string::npos); // the fixed point's self-loop

    ClassGraph g6 = build_graph(6);
    std::string dot6 = export_dot(g6);
    CHECK(dot6.find("cluster_0") != std::string::npos);
    CHECK(dot6.find("cluster_2") != std::string::npos);

    ClassGraph g2 = build_graph(2);
    std::string dot2 = export_dot(g2);
    for (int a = 1; a <= 9; ++a) CHECK(dot2.find("\"" + std::to_string(a) + "\"") != std::string::npos);
}

TEST_CASE("exports are deterministic across runs") {
    ClassGraph a = build_graph(6);
    ClassGraph b = build_graph(6);
    CHECK(export_dot(a) == export_dot(b));
    CHECK(export_graph_json(a) == export_graph_json(b));
    CHECK(export_graph_json(a).find("\"components\"") != std::string::npos);
}
