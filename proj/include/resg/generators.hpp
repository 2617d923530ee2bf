#pragma once

#include <cstdint>
#include <vector>

#include "resg/plane_graph.hpp"

namespace resg {

/// Chain of even rings fused edge-to-edge so the inner dual is a path.
/// `ring_sizes[i]` is the cycle length of ring i (even, >= 4). For every
/// internal ring i (one with both a predecessor and a successor) the offset
/// o in `offsets` places the next shared edge o steps along the ring's new
/// outer arc, counted from the shared edge with the previous ring; valid
/// range is 1..size-1. Offsets o and size-o are mirror images; for hexagons,
/// o = 3 is the straight fusion and o = 2 or 4 the angular ones.
struct chain_spec {
    std::vector<int> ring_sizes;
    std::vector<int> offsets;  // one per internal ring; empty when rings <= 2
};

plane_graph even_ring_chain(const chain_spec& spec);

/// Hexagon chain with every internal ring fused straight.
plane_graph linear_chain(int hexagons);

/// Hexagon chain with every internal ring fused at an angle.
plane_graph fibonaccene(int hexagons);

/// Abstract comparison target: vertices are length-n binary strings without
/// consecutive ones, edges join strings at Hamming distance 1.
struct abstract_graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adj;
};

abstract_graph fibonacci_cube(int n);

plane_graph random_chain(int ring_count, const std::vector<int>& ring_size_pool, uint64_t seed);

/// All hexagon chains with `hexagons` rings over turn offsets {2, 3, 4}.
std::vector<chain_spec> all_hexagonal_chains(int hexagons);

/// All chains with `rings` rings, sizes drawn from `sizes`, over every valid
/// internal offset.
std::vector<chain_spec> all_even_ring_chains(int rings, const std::vector<int>& sizes);

}  // namespace resg
