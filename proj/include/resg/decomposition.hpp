#pragma once

#include <vector>

#include "resg/matching.hpp"
#include "resg/resonance.hpp"

namespace resg {

/// A face is reducible when it is adjacent to exactly one other inner face,
/// its common periphery with the outer face is a single odd path of at least
/// three edges, and removing that path's interior leaves an elementary graph.
/// The check is constructive; leaf position in the inner dual is not trusted.
bool is_reducible_face(const plane_graph& g, int face_id);

/// All reducible faces, ascending by face id. Requires at least two inner
/// faces (usage_on_single_face).
std::vector<int> find_reducible_faces(const plane_graph& g);

/// One step of a reducible face decomposition, everything expressed in the
/// ids of the original graph. Step 1 has no ear and no anchor.
struct rfd_step {
    int face = -1;                  // s_i
    std::vector<int> ear_vertices;  // p0..pl along the clockwise outer boundary of G_i
    std::vector<int> ear_edges;
    int anchor_edge = -1;           // the single edge of the face off the ear
    vertex_color start_color = vertex_color::white;  // color of p0
    vertex_color end_color = vertex_color::white;    // color of pl
};

/// Reducible face decomposition: G_1 = boundary of steps[0].face, each later
/// step adds its ear, G_n = the input. Snapshots are fully validated plane
/// graphs carrying the inherited coloring; maps translate their ids back to
/// the original graph.
struct rfd_t {
    std::vector<rfd_step> steps;
    std::vector<plane_graph> snapshots;              // snapshots[i] = G_{i+1}
    std::vector<std::vector<int>> snap_vert_orig;    // per snapshot: vertex -> original
    std::vector<std::vector<int>> snap_edge_orig;
    std::vector<std::vector<int>> snap_face_orig;    // -1 for the snapshot outer face

    int step_count() const { return (int)steps.size(); }
    /// Edge id of `orig_edge` inside snapshot i, or -1.
    int edge_in_snapshot(int i, int orig_edge) const;
    /// Face id of `orig_face` inside snapshot i, or -1.
    int face_in_snapshot(int i, int orig_face) const;
};

/// Builds the decomposition by repeatedly removing the reducible face with
/// the smallest original face id. Errors with no_reducible_face when stuck.
rfd_t rfd(const plane_graph& g);

/// Working copy that peels reducible faces one at a time while tracking
/// original vertex/edge/face ids. Backs both rfd construction and the
/// aligned-decomposition comparisons.
struct peeling {
    plane_graph cur;
    std::vector<int> vert_orig, edge_orig, face_orig;  // face_orig: -1 for the outer face

    static peeling start(const plane_graph& g);
    int cur_face_of(int orig_face) const;
    /// Removes the ear of `cur_face` (which must be reducible) and returns
    /// the step in original ids.
    rfd_step peel(int cur_face);
};

/// Abstract labelled graph used by the expansion machinery.
struct labeled_graph {
    int n = 0;
    struct ledge {
        int u, v, label;
    };
    std::vector<ledge> edges;
    std::vector<std::vector<int>> adj;

    void add_edge(int u, int v, int label);
    static labeled_graph with_vertices(int n);
};

/// Peripheral convex expansion over an induced convex vertex set H: every
/// v in H becomes an edge v1 v2, v1 keeps the outside neighbors, and edges
/// inside H are doubled. New v1-v2 edges carry label -1 until relabelled.
struct pce_result {
    labeled_graph graph;
    std::vector<std::pair<int, int>> copies;  // old vertex -> (v1, v2); (v,-1) outside H
    std::vector<int> new_edges;               // indexes of the v1-v2 edges
};

pce_result pce(const labeled_graph& g, const std::vector<int>& convex_set);

/// Rebuilds the resonance graph by the expansion sequence: K2 for the first
/// face, then one expansion per step over the matchings of the previous
/// snapshot containing the step's anchor edge. Vertices carry the lifted
/// matchings, so the result is a resonance graph of g built along a
/// different route than build_resonance.
resonance_graph rebuild_resonance(const plane_graph& g, const rfd_t& d);

/// Four-way split of the matchings at a reducible face s with common
/// periphery P: by containment of both end edges of P and by s-resonance.
struct matching_partition {
    std::vector<int> minus_r, minus_nr, plus_r, plus_nr;  // matching indexes
    std::vector<int> plus_of_minus;  // minus_r[k] -> matching index across the face class
};

/// Splits the matchings and verifies the structure around the face class:
/// the class labelled s is exactly the set of edges between the resonant
/// cells, forms a perfect pairing between them that preserves adjacency, and
/// removing it splits the resonance graph into the two end-edge sides.
matching_partition partition_matchings(const plane_graph& g, int face_id,
                                       int cap = default_matching_cap);

/// Removes the two ends of `anchor_edge`, then repeatedly removes both ends
/// of pendant edges. Returns the 2-connected blocks of the residue as plane
/// graphs (bridges between blocks lie in no perfect matching and are
/// dropped). Empty result: the anchor forces the whole matching.
struct stripped_components {
    std::vector<plane_graph> blocks;
    std::vector<std::vector<int>> vert_orig;  // per block
    std::vector<std::vector<int>> edge_orig;
};

stripped_components strip_forced_edges(const plane_graph& g, int anchor_edge);

}  // namespace resg
