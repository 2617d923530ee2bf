#pragma once

#include <vector>

#include "resg/plane_graph.hpp"

namespace resg {

enum class alternation { proper, improper, not_alternating };

inline constexpr int default_matching_cap = 100000;

/// All perfect matchings, each exactly once, in the deterministic order given
/// by branching on the lowest-id uncovered vertex and trying incident edges in
/// edge-id order. Throws cap_exceeded when the count would pass `cap`. An
/// empty result means the graph has no perfect matching.
std::vector<edge_set> enumerate_matchings(const plane_graph& g, int cap = default_matching_cap);

/// Classifies an M-alternating cycle along the given directed traversal:
/// proper when every M-edge runs white to black, improper when every M-edge
/// runs black to white. Face boundaries may be passed as traced.
alternation classify_cycle(const plane_graph& g, const edge_set& m,
                           const std::vector<std::pair<int, int>>& cycle);

/// Same cycle classified along its clockwise orientation in the drawing
/// (inner face boundaries trace counterclockwise, so they get reversed;
/// the outer boundary is already clockwise).
alternation classify_face_clockwise(const plane_graph& g, const edge_set& m, int face_id);

/// Classification of an arbitrary simple cycle (given as an edge set) along
/// its clockwise orientation.
alternation classify_cycle_clockwise(const plane_graph& g, const edge_set& m,
                                     const edge_set& cycle_edges);

bool is_resonant(const plane_graph& g, const edge_set& m, int face_id);

/// The two perfect matchings formed by alternate edges of the outer cycle.
/// first = the one for which the outer cycle is improper-alternating (the
/// lattice minimum), second = the proper one (the maximum).
std::pair<edge_set, edge_set> extremal_matchings(const plane_graph& g);

/// Connected bipartite graph in which every edge lies in some perfect
/// matching. Checked with an augmenting-path maximum matching per edge, not
/// by enumeration; works on reduced subgraphs that need not be 2-connected.
bool is_elementary(int vertex_count, const std::vector<std::pair<int, int>>& edges);
bool is_elementary(const plane_graph& g);

}  // namespace resg
