#pragma once

#include <string>
#include <vector>

#include "resg/comparator.hpp"
#include "resg/plane_graph.hpp"

namespace resg {

struct check_result {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct corpus_entry {
    std::string name;
    plane_graph graph;
};

/// Hexagon chains up to `max_hexagons` rings (all turn sequences) plus every
/// even-ring chain with up to `max_rings` rings over `ring_sizes`.
std::vector<corpus_entry> chain_corpus(int max_hexagons, int max_rings,
                                       const std::vector<int>& ring_sizes);

/// The chain corpus extended with longer linear chains and fibonaccenes and a
/// couple of seeded random chains.
std::vector<corpus_entry> extended_corpus(int max_hexagons = 4, int max_rings = 3,
                                          const std::vector<int>& ring_sizes = {4, 6, 8},
                                          int max_family = 8);

struct verify_options {
    int cap = default_matching_cap;
    int median_max_matchings = 200;
    bool strip_product_check = true;
};

/// The per-graph theorem battery: validation invariants, matching structure,
/// digraph order structure, the edge-relation partition and its tree, the
/// decomposition round trip, the extremal lifting at every reducible face,
/// medians, and the strip/product identity.
std::vector<check_result> run_graph_checks(const plane_graph& g, const verify_options& opts = {});

/// Pairwise agreement of the three isomorphism methods over the corpus.
check_result run_pair_agreement(const std::vector<corpus_entry>& corpus,
                                int cap = default_matching_cap);

/// Matching enumeration versus the independent subset filter, applied to
/// every corpus graph with at most `max_edges` edges.
check_result run_enumeration_oracle(const std::vector<corpus_entry>& corpus, int max_edges = 14);

/// Counting laws of the generator families up to n rings.
check_result run_family_counts(int max_n = 8);

}  // namespace resg
