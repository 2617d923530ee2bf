#pragma once

#include <vector>

#include "resg/matching.hpp"

namespace resg {

/// Graph on the perfect matchings of a plane bipartite graph; two matchings
/// are adjacent when their symmetric difference is the boundary of exactly
/// one inner face, which becomes the edge's face label.
struct resonance_graph {
    struct redge {
        int u, v;   // matching indexes, u < v
        int face;   // inner face id of the source graph, or -1 for products
    };
    uint32_t graph_id = 0;
    std::vector<edge_set> matchings;  // vertex i = matchings[i]
    std::vector<redge> edges;
    std::vector<std::vector<int>> adj;           // vertex -> neighbor vertices
    std::vector<std::vector<int>> incident;      // vertex -> edge indexes

    int vertex_count() const { return (int)matchings.size(); }
    int edge_count() const { return (int)edges.size(); }
    int other_end(int edge_idx, int v) const {
        const redge& e = edges[edge_idx];
        return e.u == v ? e.v : e.u;
    }
};

/// Oriented resonance graph. An arc runs i -> j when the shared face cycle is
/// proper M_i-alternating along its traced boundary, which points every arc
/// away from the lattice minimum: the unique source is the extremal matching
/// with improper-alternating outer cycle and the unique sink its proper twin.
struct resonance_digraph {
    struct arc {
        int from, to;
        int face;
    };
    uint32_t graph_id = 0;
    int n = 0;
    std::vector<arc> arcs;
    std::vector<std::vector<int>> out, in;
};

resonance_graph build_resonance(const plane_graph& g, int cap = default_matching_cap);

resonance_digraph orient(const plane_graph& g, const resonance_graph& r);

/// Orientation under the swapped proper coloring; reverses every arc.
resonance_digraph orient_swapped(const plane_graph& g, const resonance_graph& r);

/// Partial order induced by reachability: a <= b iff a directed path leads
/// from a to b. The digraph is checked acyclic first (cyclic_digraph).
bool order_leq(const resonance_digraph& d, int a, int b);

/// Vertices with no incoming / no outgoing arcs.
std::vector<int> digraph_sources(const resonance_digraph& d);
std::vector<int> digraph_sinks(const resonance_digraph& d);

bool digraph_is_acyclic(const resonance_digraph& d);

/// Standard Cartesian product. Vertices are index pairs (i*n2+j); edges keep
/// the face label of the contributing factor. Matchings are not populated:
/// product vertices are abstract.
resonance_graph cartesian_product(const resonance_graph& r1, const resonance_graph& r2);

resonance_digraph reverse(const resonance_digraph& d);

}  // namespace resg
