#pragma once

#include <vector>

#include "resg/plane_graph.hpp"
#include "resg/resonance.hpp"

namespace resg {

/// All-pairs breadth-first distances inside a resonance graph; the backing
/// store for the edge relation and for median computations.
struct distance_table {
    std::vector<std::vector<int>> d;
    int operator()(int u, int v) const { return d[u][v]; }
};

distance_table all_pairs_distances(const resonance_graph& r);

/// The relation on edges e1 = uv, e2 = xy given by
/// d(u,x) + d(v,y) != d(u,y) + d(v,x).
bool theta_related(const resonance_graph& r, int e1, int e2);
bool theta_related(const resonance_graph& r, const distance_table& dt, int e1, int e2);

struct theta_classes_t {
    std::vector<int> class_of_edge;           // resonance edge index -> class id
    std::vector<std::vector<int>> class_edges;  // class id -> edge indexes
    std::vector<int> class_face;              // class id -> face label

    int class_count() const { return (int)class_edges.size(); }
};

/// Equivalence classes of the relation. Transitivity is validated exactly
/// (theta_not_transitive would flag a non-median input) and every class must
/// carry a single face label (mixed_face_labels otherwise).
theta_classes_t theta_classes(const resonance_graph& r);

struct theta_graph_t {
    std::vector<std::vector<int>> adj;  // class id -> adjacent class ids
    std::vector<std::pair<int, int>> edges;
    std::vector<int> face_of_node;      // class id -> face label
};

/// Graph induced on the classes: two classes are adjacent when some pair of
/// incident representative edges lies in no common 4-cycle. Asserts the
/// result is a tree (not_a_tree) and exposes the face-label map, which for
/// accepted inputs is the isomorphism onto the inner dual.
theta_graph_t theta_graph(const resonance_graph& r, const theta_classes_t& tc);

/// Median of a vertex triple: the vertices lying on shortest paths between
/// all three pairs. Unique for median graphs.
std::vector<int> medians(const resonance_graph& r, const distance_table& dt, int a, int b, int c);

}  // namespace resg
