#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "resg/edge_set.hpp"
#include "resg/error.hpp"

namespace resg {

enum class vertex_color : uint8_t { white, black };

inline vertex_color swapped(vertex_color c) {
    return c == vertex_color::white ? vertex_color::black : vertex_color::white;
}

/// One face of the embedding. `boundary` lists directed edges (tail, head) in
/// traversal order under the fixed next-edge rule; for accepted inputs it is a
/// simple cycle. Inner faces come out counterclockwise in the drawing, the
/// outer face clockwise.
struct face {
    int id = -1;
    std::vector<std::pair<int, int>> boundary;
    bool is_outer = false;

    int length() const { return (int)boundary.size(); }
};

/// Plane bipartite graph given by a rotation system (clockwise neighbor order
/// at every vertex) plus a designated outer face. Immutable once built; all
/// derived structure (edge ids, faces, colors) is computed by build().
struct plane_graph {
    int vertex_count = 0;
    std::vector<std::vector<int>> rotations;
    std::vector<vertex_color> colors;
    std::vector<std::pair<int, int>> edges;  // canonical (min, max); id = index
    std::vector<face> faces;
    int outer_face = -1;
    uint32_t graph_id = 0;  // process-unique, for cross-structure sanity checks

    // Derived lookups filled by build().
    std::vector<std::vector<int>> vertex_edges;   // edge ids incident to v, rotation order
    std::vector<int> dart_face;                   // dart 2e+d -> face id
    std::vector<edge_set> face_edges;             // per face, boundary as edge set
    std::vector<int> inner_face_ids;              // ascending

    int edge_count() const { return (int)edges.size(); }
    int inner_face_count() const { return (int)inner_face_ids.size(); }
    int degree(int v) const { return (int)rotations[v].size(); }

    /// Edge id of {u, v}; -1 when absent.
    int edge_id(int u, int v) const;

    /// Dart id of directed (u, v): 2*edge + direction bit.
    int dart_id(int u, int v) const;

    edge_set empty_edge_set() const { return edge_set(edge_count()); }

    /// The two faces bordering an edge.
    std::pair<int, int> edge_faces(int e) const { return {dart_face[2 * e], dart_face[2 * e + 1]}; }

    const face& outer() const { return faces[outer_face]; }
};

/// Builds and fully validates a plane bipartite graph. `outer_hint` names a
/// directed edge whose traced face is the outer face. When `forced_colors` is
/// absent, vertices are 2-colored by breadth-first search with vertex 0 white.
plane_graph build(const std::vector<std::vector<int>>& rotations, std::pair<int, int> outer_hint,
                  const std::optional<std::vector<vertex_color>>& forced_colors = std::nullopt);

enum class periphery_kind { absent, path, whole_boundary };

/// Common periphery of an inner face with the outer face. For the path case,
/// vertices/edge ids run along the clockwise outer boundary.
struct common_periphery_result {
    periphery_kind kind = periphery_kind::absent;
    std::vector<int> vertices;  // p0..pk for a path; full cycle for whole_boundary
    std::vector<int> edge_ids;
};

common_periphery_result common_periphery(const plane_graph& g, int s);

/// Breadth-first distance between two edges in the line graph.
int edge_distance(const plane_graph& g, int e, int f);

struct inner_dual_t {
    struct dual_edge {
        int a, b;                      // node indexes
        std::vector<int> shared_edges; // graph edge ids shared by the two faces
    };
    std::vector<int> faces;  // node index -> inner face id, ascending
    std::vector<dual_edge> edges;
    std::vector<std::vector<int>> adj;  // node -> neighbor nodes

    int node_count() const { return (int)faces.size(); }
    int node_of_face(int face_id) const;
    /// The single graph edge shared by two adjacent inner faces.
    int shared_edge(int node_a, int node_b) const;
};

/// Dual over inner faces; a tree for accepted inputs. Two inner faces sharing
/// more than one edge are rejected (shared_edge_multiplicity).
inner_dual_t inner_dual(const plane_graph& g);

/// For an edge set forming a disjoint union of simple cycles, the directed
/// version of each member edge that traverses its cycle clockwise in the
/// drawing. Uses the fact that cycle interiors of outerplane graphs contain
/// no vertices, so "inside" faces are exactly the dual nodes cut off from the
/// outer face by the cycle edges.
std::vector<std::pair<int, int>> clockwise_directions(const plane_graph& g, const edge_set& cycle_edges);

/// Restriction of g to kept vertices/edges, revalidated as a plane graph.
/// Every traced face of the restriction other than its outer face must equal
/// a surviving inner face of g; face/vertex/edge maps translate back to g.
struct subgraph_result {
    plane_graph graph;
    std::vector<int> vert_to_parent;
    std::vector<int> edge_to_parent;
    std::vector<int> face_to_parent;  // per face id of `graph`; -1 for its outer face
};

subgraph_result build_subgraph(const plane_graph& g, const std::vector<char>& keep_vertex,
                               const std::vector<char>& keep_edge);

/// The reflected drawing: every rotation list reversed, outer hint reversed.
/// Vertex ids are unchanged.
plane_graph mirror_embedding(const plane_graph& g);

}  // namespace resg
