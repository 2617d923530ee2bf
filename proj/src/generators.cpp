#include "resg/generators.hpp"

#include <algorithm>
#include <random>

namespace resg {

namespace {

struct chain_builder {
    std::vector<int> outer;                  // vertex ids in clockwise order
    std::vector<std::pair<int, int>> chords; // fused edges
    int next_vertex = 0;

    void first_ring(int k) {
        for (int i = 0; i < k; ++i) outer.push_back(next_vertex++);
    }

    // Fuses a ring of size k onto the outer edge (outer[pos], outer[pos+1]);
    // returns the position range of the fresh arc for offset selection.
    int attach(int pos, int k) {
        int a = outer[pos];
        int b = outer[(pos + 1) % outer.size()];
        std::vector<int> fresh;
        for (int i = 0; i < k - 2; ++i) fresh.push_back(next_vertex++);
        outer.insert(outer.begin() + pos + 1, fresh.begin(), fresh.end());
        chords.push_back({a, b});
        return pos;  // arc occupies outer positions pos .. pos + k - 2
    }

    plane_graph finish() const {
        int n = next_vertex;
        std::vector<int> pos(n);
        for (int i = 0; i < (int)outer.size(); ++i) pos[outer[i]] = i;
        std::vector<std::vector<int>> adj(n);
        int L = (int)outer.size();
        for (int i = 0; i < L; ++i) {
            adj[outer[i]].push_back(outer[(i + 1) % L]);
            adj[outer[(i + 1) % L]].push_back(outer[i]);
        }
        for (auto [a, b] : chords) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        // Clockwise rotation: neighbors ordered by cyclic outer position
        // starting just after the vertex itself.
        std::vector<std::vector<int>> rot(n);
        for (int v = 0; v < n; ++v) {
            rot[v] = adj[v];
            std::sort(rot[v].begin(), rot[v].end(), [&](int x, int y) {
                int ox = (pos[x] - pos[v] + L) % L;
                int oy = (pos[y] - pos[v] + L) % L;
                return ox < oy;
            });
        }
        return build(rot, {outer[0], outer[1]});
    }
};

void validate_spec(const chain_spec& spec) {
    int r = (int)spec.ring_sizes.size();
    require(r >= 1, errc::invalid_spec, "chain needs at least one ring");
    for (int k : spec.ring_sizes)
        require(k >= 4 && k % 2 == 0, errc::invalid_spec,
                "ring size must be even and at least 4, got " + std::to_string(k));
    int internal = std::max(0, r - 2);
    require((int)spec.offsets.size() == internal, errc::invalid_spec,
            "expected " + std::to_string(internal) + " offsets");
    for (int i = 0; i < internal; ++i) {
        int k = spec.ring_sizes[i + 1];
        require(spec.offsets[i] >= 1 && spec.offsets[i] <= k - 1, errc::invalid_spec,
                "offset " + std::to_string(spec.offsets[i]) + " out of range for ring size " +
                    std::to_string(k));
    }
}

}  // namespace

plane_graph even_ring_chain(const chain_spec& spec) {
    validate_spec(spec);
    chain_builder cb;
    cb.first_ring(spec.ring_sizes[0]);
    int attach_pos = 0;  // ring 2 fuses onto the first edge of ring 1
    for (int i = 1; i < (int)spec.ring_sizes.size(); ++i) {
        int k = spec.ring_sizes[i];
        int arc_start = cb.attach(attach_pos, k);
        if (i + 1 < (int)spec.ring_sizes.size()) {
            int o = spec.offsets[i - 1];
            attach_pos = arc_start + o - 1;
        }
    }
    return cb.finish();
}

plane_graph linear_chain(int hexagons) {
    require(hexagons >= 1, errc::invalid_spec, "need at least one hexagon");
    chain_spec spec;
    spec.ring_sizes.assign(hexagons, 6);
    spec.offsets.assign(std::max(0, hexagons - 2), 3);
    return even_ring_chain(spec);
}

plane_graph fibonaccene(int hexagons) {
    require(hexagons >= 1, errc::invalid_spec, "need at least one hexagon");
    chain_spec spec;
    spec.ring_sizes.assign(hexagons, 6);
    spec.offsets.assign(std::max(0, hexagons - 2), 2);
    return even_ring_chain(spec);
}

abstract_graph fibonacci_cube(int n) {
    require(n >= 0, errc::invalid_spec, "order must be nonnegative");
    std::vector<uint32_t> verts;
    for (uint32_t s = 0; s < (uint32_t(1) << n); ++s)
        if ((s & (s >> 1)) == 0) verts.push_back(s);
    abstract_graph g;
    g.n = (int)verts.size();
    g.adj.assign(g.n, {});
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (__builtin_popcount(verts[i] ^ verts[j]) == 1) {
                g.edges.push_back({i, j});
                g.adj[i].push_back(j);
                g.adj[j].push_back(i);
            }
    return g;
}

plane_graph random_chain(int ring_count, const std::vector<int>& ring_size_pool, uint64_t seed) {
    require(ring_count >= 1, errc::invalid_spec, "need at least one ring");
    require(!ring_size_pool.empty(), errc::invalid_spec, "empty ring size pool");
    for (int k : ring_size_pool)
        require(k >= 4 && k % 2 == 0, errc::invalid_spec, "pool sizes must be even and at least 4");
    std::mt19937_64 rng(seed);
    chain_spec spec;
    for (int i = 0; i < ring_count; ++i) {
        std::uniform_int_distribution<size_t> pick(0, ring_size_pool.size() - 1);
        spec.ring_sizes.push_back(ring_size_pool[pick(rng)]);
    }
    for (int i = 1; i + 1 < ring_count; ++i) {
        std::uniform_int_distribution<int> pick(1, spec.ring_sizes[i] - 1);
        spec.offsets.push_back(pick(rng));
    }
    return even_ring_chain(spec);
}

std::vector<chain_spec> all_hexagonal_chains(int hexagons) {
    std::vector<chain_spec> out;
    int internal = std::max(0, hexagons - 2);
    std::vector<int> offs(internal, 2);
    while (true) {
        chain_spec spec;
        spec.ring_sizes.assign(hexagons, 6);
        spec.offsets = offs;
        out.push_back(spec);
        int i = internal - 1;
        while (i >= 0 && offs[i] == 4) offs[i--] = 2;
        if (i < 0) break;
        ++offs[i];
    }
    return out;
}

std::vector<chain_spec> all_even_ring_chains(int rings, const std::vector<int>& sizes) {
    std::vector<chain_spec> out;
    std::vector<int> size_idx(rings, 0);
    while (true) {
        chain_spec base;
        for (int i : size_idx) base.ring_sizes.push_back(sizes[i]);
        // Enumerate every offset combination for the internal rings.
        int internal = std::max(0, rings - 2);
        std::vector<int> offs(internal, 1);
        while (true) {
            chain_spec spec = base;
            spec.offsets = offs;
            out.push_back(spec);
            int i = internal - 1;
            while (i >= 0 && offs[i] == base.ring_sizes[i + 1] - 1) offs[i--] = 1;
            if (i < 0) break;
            ++offs[i];
        }
        int i = rings - 1;
        while (i >= 0 && size_idx[i] == (int)sizes.size() - 1) size_idx[i--] = 0;
        if (i < 0) break;
        ++size_idx[i];
    }
    return out;
}

}  // namespace resg
