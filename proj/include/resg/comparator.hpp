#pragma once

#include <optional>
#include <string>
#include <vector>

#include "resg/decomposition.hpp"
#include "resg/plane_graph.hpp"
#include "resg/resonance.hpp"

namespace resg {

/// Undirected graph stripped down for isomorphism search. Optional edge
/// labels must be preserved exactly by a witness when present.
struct simple_graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adj;
    std::vector<int> edge_labels;  // empty or aligned with edges

    static simple_graph from_resonance(const resonance_graph& r, bool keep_labels = false);
    static simple_graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
    bool has_edge(int u, int v) const;
    int label_of(int u, int v) const;  // -1 when unlabelled
};

struct simple_digraph {
    int n = 0;
    std::vector<std::pair<int, int>> arcs;
    std::vector<std::vector<int>> out, in;

    static simple_digraph from_resonance(const resonance_digraph& d);
    simple_digraph reversed() const;
    bool has_arc(int u, int v) const;
};

struct iso_verdict {
    bool isomorphic = false;
    std::vector<int> witness;  // vertex map a -> b when isomorphic
    std::string method;
};

inline constexpr long default_iso_budget = 5000000;
inline constexpr int default_iso_vertex_bound = 5000;

/// Backtracking isomorphism with iterated-refinement pruning; the witness is
/// verified edge-preserving (and label-preserving when labels are present)
/// before being returned. Throws search_budget_exceeded past `budget` nodes.
iso_verdict graph_iso(const simple_graph& a, const simple_graph& b, long budget = default_iso_budget);

iso_verdict digraph_iso(const simple_digraph& a, const simple_digraph& b,
                        long budget = default_iso_budget);

/// A connected bipartite graph has exactly two proper colorings and the swap
/// reverses every arc, so the coloring quantifier reduces to testing d2 and
/// its reversal.
iso_verdict digraph_iso_modulo_coloring(const resonance_digraph& d1, const resonance_digraph& d2,
                                        long budget = default_iso_budget);

/// Per 3-path of the inner dual: the two shared edges, their line-graph
/// distance, and the parity flag (even = regular).
struct adjacent_triple {
    int x, y, z;  // inner face ids, x < z
    int e, f;     // shared edges (x,y) and (y,z)
    int dist;
    bool regular;
};

struct regularity_signature_t {
    std::vector<adjacent_triple> triples;  // sorted by (y, x, z)
    bool flag_of(int x, int y, int z) const;
};

regularity_signature_t regularity_signature(const plane_graph& g);

/// Isomorphism test through the inner duals: searches for a tree isomorphism
/// that preserves triple regularity. The witness maps dual node indexes of
/// g1 onto those of g2.
iso_verdict fast_iso(const plane_graph& g1, const plane_graph& g2);

/// Builds decompositions of both graphs with the face picks aligned through
/// the dual isomorphism `alpha` (node index map), then compares the ear color
/// signatures; they must agree for every step either directly or under a
/// global color swap. Returns false when no aligned decomposition exists or
/// signatures disagree both ways.
bool aligned_ear_signatures_compatible(const plane_graph& g1, const plane_graph& g2,
                                       const std::vector<int>& alpha);

struct cross_check_report {
    iso_verdict fast, brute, digraph;
    bool agree = false;
    bool ear_signature_checked = false;
    bool ear_signature_ok = false;
    std::string detail;
};

/// Runs all three isomorphism methods and insists they agree
/// (disagreement_detected otherwise). On an isomorphic fast verdict also
/// certifies the aligned ear signatures and the digraph agreement.
cross_check_report cross_check(const plane_graph& g1, const plane_graph& g2,
                               int cap = default_matching_cap);

}  // namespace resg
