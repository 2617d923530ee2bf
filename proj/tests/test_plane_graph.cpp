#include "doctest.h"

#include <set>

#include "resg/generators.hpp"
#include "resg/plane_graph.hpp"
#include "test_helpers.hpp"

using namespace resg;
using namespace resg::testing;

TEST_CASE("hexagon builds with one inner and one outer face") {
    plane_graph g = cycle_graph(6);
    CHECK(g.vertex_count == 6);
    CHECK(g.edge_count() == 6);
    CHECK(g.faces.size() == 2);
    CHECK(g.inner_face_count() == 1);
    CHECK(g.outer().length() == 6);
    CHECK(g.faces[g.inner_face_ids[0]].length() == 6);
    // All vertices peripheral by construction.
    std::set<int> outer_verts;
    for (auto [u, v] : g.outer().boundary) outer_verts.insert(u);
    CHECK(outer_verts.size() == 6);
    // Canonical coloring: vertex 0 white, alternating.
    CHECK(g.colors[0] == vertex_color::white);
    CHECK(g.colors[1] == vertex_color::black);
    CHECK(g.colors[5] == vertex_color::black);
}

TEST_CASE("three-hexagon linear chain has three inner faces and a path dual") {
    plane_graph g = linear_chain(3);
    CHECK(g.vertex_count == 14);
    CHECK(g.edge_count() == 16);
    CHECK(g.faces.size() == 4);
    CHECK(g.inner_face_count() == 3);
    inner_dual_t d = inner_dual(g);
    CHECK(d.node_count() == 3);
    CHECK(d.edges.size() == 2);
    CHECK(sorted_degrees(d.adj) == std::vector<int>{1, 1, 2});
}

TEST_CASE("K4 is rejected as non-bipartite") {
    std::vector<std::vector<int>> rot = {{1, 2, 3}, {2, 0, 3}, {0, 1, 3}, {0, 2, 1}};
    CHECK_THROWS_WITH_AS(build(rot, {0, 1}), doctest::Contains("not_bipartite"), graph_error);
}

TEST_CASE("asymmetric rotation is rejected") {
    // Vertex 1 lists 2 but 2 does not list 1.
    std::vector<std::vector<int>> rot = {{1, 2}, {0, 2}, {0}};
    CHECK_THROWS_WITH_AS(build(rot, {0, 1}), doctest::Contains("bad_rotation"), graph_error);
}

TEST_CASE("cut vertex is rejected") {
    // Two squares glued at vertex 0.
    std::vector<std::vector<int>> rot = {{1, 3, 4, 6}, {0, 2}, {1, 3}, {2, 0},
                                         {0, 5},       {4, 6}, {5, 0}};
    CHECK_THROWS_WITH_AS(build(rot, {0, 1}), doctest::Contains("not_two_connected"), graph_error);
}

TEST_CASE("K33 rotation fails the Euler check") {
    std::vector<std::vector<int>> rot = {{3, 4, 5}, {3, 4, 5}, {3, 4, 5},
                                         {0, 1, 2}, {0, 1, 2}, {0, 1, 2}};
    CHECK_THROWS_WITH_AS(build(rot, {0, 3}), doctest::Contains("not_plane_embedding"), graph_error);
}

TEST_CASE("interior vertex fails outerplanarity") {
    // K_{2,3} drawn with the middle path inside.
    std::vector<std::vector<int>> rot = {{2, 3, 4}, {4, 3, 2}, {0, 1}, {0, 1}, {0, 1}};
    CHECK_THROWS_WITH_AS(build(rot, {0, 2}), doctest::Contains("not_outerplane"), graph_error);
}

TEST_CASE("bad outer hint is rejected") {
    std::vector<std::vector<int>> rot = {{5, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 5}, {4, 0}};
    CHECK_THROWS_WITH_AS(build(rot, {0, 3}), doctest::Contains("bad_rotation"), graph_error);
}

TEST_CASE("common periphery cases") {
    SUBCASE("hexagon inner face shares its whole boundary") {
        plane_graph g = cycle_graph(6);
        auto cp = common_periphery(g, g.inner_face_ids[0]);
        CHECK(cp.kind == periphery_kind::whole_boundary);
        CHECK(cp.edge_ids.size() == 6);
    }
    SUBCASE("terminal hexagon of the linear chain gives a five-edge path") {
        plane_graph g = linear_chain(3);
        inner_dual_t d = inner_dual(g);
        int terminal = -1, middle = -1;
        for (int i = 0; i < d.node_count(); ++i)
            ((int)d.adj[i].size() == 1 ? terminal : middle) = d.faces[i];
        auto cp = common_periphery(g, terminal);
        REQUIRE(cp.kind == periphery_kind::path);
        CHECK(cp.edge_ids.size() == 5);
        CHECK(cp.vertices.size() == 6);
        // Odd path: end colors differ.
        CHECK(g.colors[cp.vertices.front()] != g.colors[cp.vertices.back()]);

        // Middle hexagon: two disjoint two-edge arcs, so no single path.
        auto cpm = common_periphery(g, middle);
        CHECK(cpm.kind == periphery_kind::absent);
    }
}

TEST_CASE("edge distances on the hexagon match the line-graph oracle") {
    plane_graph g = cycle_graph(6);
    // Edge ids: 0={0,5}, 1={0,1}, 2={1,2}, 3={2,3}, 4={3,4}, 5={4,5}.
    CHECK(g.edge_id(0, 1) == 1);
    CHECK(edge_distance(g, 1, 2) == 1);   // shared endpoint
    CHECK(edge_distance(g, 1, 3) == 2);   // one edge between
    CHECK(edge_distance(g, 1, 4) == 3);   // antipodal
    for (int e = 0; e < g.edge_count(); ++e)
        for (int f = 0; f < g.edge_count(); ++f)
            CHECK(edge_distance(g, e, f) == line_graph_distance_oracle(g, e, f));
}

TEST_CASE("edge distance is a metric") {
    for (const plane_graph& g : {cycle_graph(6), even_ring_chain({{6, 6}, {}})}) {
        int m = g.edge_count();
        REQUIRE(m <= 12);
        for (int a = 0; a < m; ++a) {
            CHECK(edge_distance(g, a, a) == 0);
            for (int b = 0; b < m; ++b) {
                int dab = edge_distance(g, a, b);
                CHECK(dab == edge_distance(g, b, a));
                if (a != b) CHECK(dab >= 1);
                for (int c = 0; c < m; ++c)
                    CHECK(edge_distance(g, a, c) <= dab + edge_distance(g, b, c));
            }
        }
    }
}

TEST_CASE("inner duals of the basic families") {
    CHECK(inner_dual(cycle_graph(6)).node_count() == 1);
    CHECK(inner_dual(cycle_graph(6)).edges.empty());
    inner_dual_t f3 = inner_dual(fibonaccene(3));
    CHECK(f3.node_count() == 3);
    CHECK(sorted_degrees(f3.adj) == std::vector<int>{1, 1, 2});
}

TEST_CASE("face tracing partitions darts and satisfies the Euler formula") {
    for (const plane_graph& g :
         {cycle_graph(6), linear_chain(3), fibonaccene(4), even_ring_chain({{4, 8, 6}, {3}})}) {
        std::vector<int> seen(2 * g.edge_count(), 0);
        int total = 0;
        for (const auto& f : g.faces)
            for (auto [u, v] : f.boundary) {
                seen[g.dart_id(u, v)]++;
                ++total;
            }
        CHECK(total == 2 * g.edge_count());
        CHECK(*std::min_element(seen.begin(), seen.end()) == 1);
        CHECK(*std::max_element(seen.begin(), seen.end()) == 1);
        CHECK(g.vertex_count - g.edge_count() + (int)g.faces.size() == 2);
    }
}

TEST_CASE("exactly two proper colorings exist and they are swaps") {
    for (const plane_graph& g : {cycle_graph(6), even_ring_chain({{6, 6}, {}}), linear_chain(3)}) {
        REQUIRE(g.vertex_count <= 20);
        int proper = 0;
        bool found_canonical = false, found_swap = false;
        for (uint32_t mask = 0; mask < (uint32_t(1) << g.vertex_count); ++mask) {
            bool ok = true;
            for (auto [u, v] : g.edges)
                if (((mask >> u) & 1) == ((mask >> v) & 1)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            ++proper;
            bool matches = true, matches_swap = true;
            for (int v = 0; v < g.vertex_count; ++v) {
                bool black = (mask >> v) & 1;
                if (black != (g.colors[v] == vertex_color::black)) matches = false;
                if (black != (g.colors[v] == vertex_color::white)) matches_swap = false;
            }
            found_canonical |= matches;
            found_swap |= matches_swap;
        }
        CHECK(proper == 2);
        CHECK(found_canonical);
        CHECK(found_swap);
    }
}

TEST_CASE("clockwise cycle directions agree with the outer trace") {
    for (const plane_graph& g : {cycle_graph(6), linear_chain(3), fibonaccene(3)}) {
        edge_set outer_edges = g.face_edges[g.outer_face];
        auto dirs = clockwise_directions(g, outer_edges);
        std::set<std::pair<int, int>> expect(g.outer().boundary.begin(), g.outer().boundary.end());
        for (auto d : dirs) CHECK(expect.count(d) == 1);
        CHECK(dirs.size() == expect.size());
    }
}
