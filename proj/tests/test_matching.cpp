#include "doctest.h"

#include <algorithm>

#include "resg/generators.hpp"
#include "resg/matching.hpp"
#include "test_helpers.hpp"

using namespace resg;
using namespace resg::testing;

namespace {

plane_graph with_swapped_colors(const plane_graph& g) {
    std::vector<vertex_color> cols;
    for (vertex_color c : g.colors) cols.push_back(swapped(c));
    auto hint = g.outer().boundary.front();
    return build(g.rotations, hint, cols);
}

int shared_inner_edge(const plane_graph& g, int dual_edge_index = 0) {
    return inner_dual(g).edges[dual_edge_index].shared_edges.front();
}

}  // namespace

TEST_CASE("matching counts on the small families") {
    CHECK(enumerate_matchings(cycle_graph(6)).size() == 2);

    plane_graph l2 = linear_chain(2);
    auto fast = enumerate_matchings(l2);
    auto slow = matchings_by_subsets(l2);
    CHECK(fast.size() == 3);
    CHECK(slow.size() == 3);

    plane_graph f3 = fibonaccene(3);
    CHECK(enumerate_matchings(f3).size() == 5);
    CHECK(matchings_by_subsets(f3).size() == 5);
}

TEST_CASE("enumeration equals the subset oracle and is duplicate free") {
    for (const plane_graph& g :
         {cycle_graph(4), cycle_graph(6), linear_chain(2), even_ring_chain({{4, 6}, {}}),
          even_ring_chain({{4, 4, 4}, {2}})}) {
        REQUIRE(g.edge_count() <= 14);
        auto fast = enumerate_matchings(g);
        auto slow = matchings_by_subsets(g);
        CHECK(fast.size() == slow.size());
        for (const edge_set& m : slow)
            CHECK(std::find(fast.begin(), fast.end(), m) != fast.end());
        for (size_t i = 0; i < fast.size(); ++i)
            for (size_t j = i + 1; j < fast.size(); ++j) CHECK(fast[i] != fast[j]);
    }
}

TEST_CASE("enumeration cap") {
    CHECK_THROWS_WITH_AS(enumerate_matchings(fibonaccene(5), 4), doctest::Contains("cap_exceeded"),
                         graph_error);
}

TEST_CASE("cycle classification on the hexagon") {
    plane_graph g = cycle_graph(6);
    auto ms = enumerate_matchings(g);
    REQUIRE(ms.size() == 2);
    int inner = g.inner_face_ids[0];

    // The two matchings receive opposite classes on the same directed cycle.
    alternation a0 = classify_cycle(g, ms[0], g.faces[inner].boundary);
    alternation a1 = classify_cycle(g, ms[1], g.faces[inner].boundary);
    CHECK(a0 != alternation::not_alternating);
    CHECK(a1 != alternation::not_alternating);
    CHECK(a0 != a1);

    // Outer and inner traces traverse the same cycle oppositely, so the
    // classes flip.
    alternation outer0 = classify_cycle(g, ms[0], g.outer().boundary);
    CHECK(outer0 != a0);
    CHECK(outer0 != alternation::not_alternating);
}

TEST_CASE("orientation reversal flips proper and improper") {
    for (const plane_graph& g : {cycle_graph(6), linear_chain(2), fibonaccene(3)}) {
        auto ms = enumerate_matchings(g);
        for (const edge_set& m : ms)
            for (const face& f : g.faces) {
                std::vector<std::pair<int, int>> rev(f.boundary.rbegin(), f.boundary.rend());
                for (auto& d : rev) std::swap(d.first, d.second);
                alternation fwd = classify_cycle(g, m, f.boundary);
                alternation bwd = classify_cycle(g, m, rev);
                if (fwd == alternation::not_alternating)
                    CHECK(bwd == alternation::not_alternating);
                else
                    CHECK(bwd != fwd);
            }
    }
}

TEST_CASE("color swap flips proper and improper") {
    plane_graph g = linear_chain(2);
    plane_graph gs = with_swapped_colors(g);
    auto ms = enumerate_matchings(g);
    for (const edge_set& m : ms)
        for (const face& f : g.faces) {
            alternation a = classify_cycle(g, m, f.boundary);
            alternation b = classify_cycle(gs, m, f.boundary);
            if (a == alternation::not_alternating)
                CHECK(b == alternation::not_alternating);
            else
                CHECK(a != b);
        }
}

TEST_CASE("resonance of faces in the two-hexagon chain") {
    plane_graph l2 = linear_chain(2);
    int shared = shared_inner_edge(l2);
    auto ms = enumerate_matchings(l2);
    REQUIRE(ms.size() == 3);
    int f1 = l2.inner_face_ids[0], f2 = l2.inner_face_ids[1];

    int with_shared = 0;
    for (const edge_set& m : ms) {
        if (m.test(shared)) {
            ++with_shared;
            // Both hexagons are resonant for the matching through the shared
            // edge, so both classifications are definite.
            CHECK(classify_cycle(l2, m, l2.faces[f1].boundary) != alternation::not_alternating);
            CHECK(classify_cycle(l2, m, l2.faces[f2].boundary) != alternation::not_alternating);
        } else {
            // The other matchings make exactly one hexagon resonant each.
            CHECK((int)is_resonant(l2, m, f1) + (int)is_resonant(l2, m, f2) == 1);
        }
    }
    CHECK(with_shared == 1);
}

TEST_CASE("middle hexagon is not resonant for the minimum of the three-chain") {
    plane_graph l3 = linear_chain(3);
    inner_dual_t d = inner_dual(l3);
    int middle = -1;
    for (int i = 0; i < d.node_count(); ++i)
        if (d.adj[i].size() == 2) middle = d.faces[i];
    REQUIRE(middle >= 0);
    auto [m0, m1] = extremal_matchings(l3);
    CHECK_FALSE(is_resonant(l3, m0, middle));
    CHECK_FALSE(is_resonant(l3, m1, middle));
}

TEST_CASE("hexagon resonance is trivially true") {
    plane_graph g = cycle_graph(6);
    for (const edge_set& m : enumerate_matchings(g))
        CHECK(is_resonant(g, m, g.inner_face_ids[0]));
}

TEST_CASE("extremal matchings") {
    SUBCASE("hexagon: one matching per outer class") {
        plane_graph g = cycle_graph(6);
        auto [m0, m1] = extremal_matchings(g);
        CHECK(classify_cycle(g, m0, g.outer().boundary) == alternation::improper);
        CHECK(classify_cycle(g, m1, g.outer().boundary) == alternation::proper);
        CHECK(m0 != m1);
    }
    SUBCASE("three-chain extremes avoid the shared edges") {
        plane_graph l3 = linear_chain(3);
        auto [m0, m1] = extremal_matchings(l3);
        CHECK(m0 != m1);
        inner_dual_t d = inner_dual(l3);
        for (const auto& de : d.edges) {
            CHECK_FALSE(m0.test(de.shared_edges.front()));
            CHECK_FALSE(m1.test(de.shared_edges.front()));
        }
    }
    SUBCASE("the extremes differ on every corpus sample") {
        for (const plane_graph& g :
             {cycle_graph(4), linear_chain(4), fibonaccene(4), even_ring_chain({{8, 4, 6}, {2}})}) {
            auto [m0, m1] = extremal_matchings(g);
            CHECK(m0 != m1);
        }
    }
}

TEST_CASE("no clockwise-proper cycle for the minimum, none improper for the maximum") {
    for (const plane_graph& g : {cycle_graph(6), linear_chain(3), fibonaccene(3)}) {
        auto [m0, m1] = extremal_matchings(g);
        for (const face& f : g.faces) {
            CHECK(classify_face_clockwise(g, m0, f.id) != alternation::proper);
            CHECK(classify_face_clockwise(g, m1, f.id) != alternation::improper);
        }
        auto ms = enumerate_matchings(g);
        for (size_t i = 0; i < ms.size(); ++i)
            for (size_t j = i + 1; j < ms.size(); ++j) {
                edge_set diff = ms[i] ^ ms[j];
                // One cycle component at a time.
                std::vector<int> comp(g.vertex_count, -1);
                int nc = 0;
                for (int seed : diff.bits()) {
                    int sv = g.edges[seed].first;
                    if (comp[sv] >= 0) continue;
                    std::vector<int> stack{sv};
                    comp[sv] = nc;
                    while (!stack.empty()) {
                        int v = stack.back();
                        stack.pop_back();
                        for (int e : diff.bits()) {
                            int a = g.edges[e].first, b = g.edges[e].second;
                            if (a == v && comp[b] < 0) comp[b] = nc, stack.push_back(b);
                            if (b == v && comp[a] < 0) comp[a] = nc, stack.push_back(a);
                        }
                    }
                    ++nc;
                }
                for (int c = 0; c < nc; ++c) {
                    edge_set cyc = g.empty_edge_set();
                    for (int e : diff.bits())
                        if (comp[g.edges[e].first] == c) cyc.set(e);
                    CHECK(classify_cycle_clockwise(g, m0, cyc) != alternation::proper);
                    CHECK(classify_cycle_clockwise(g, m1, cyc) != alternation::improper);
                }
            }
    }
}

TEST_CASE("elementarity") {
    CHECK(is_elementary(cycle_graph(6)));
    // Path on 4 vertices: the middle edge lies in no perfect matching.
    CHECK_FALSE(is_elementary(4, {{0, 1}, {1, 2}, {2, 3}}));
    // Single edge.
    CHECK(is_elementary(2, {{0, 1}}));

    plane_graph l3 = linear_chain(3);
    REQUIRE(l3.edge_count() == 16);
    CHECK(is_elementary(l3));
    // Oracle: every edge appears in some enumerated matching.
    auto ms = enumerate_matchings(l3);
    for (int e = 0; e < l3.edge_count(); ++e) {
        bool found = false;
        for (const edge_set& m : ms) found = found || m.test(e);
        CHECK(found);
    }
}
