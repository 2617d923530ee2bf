#pragma once

#include <algorithm>
#include <queue>
#include <vector>

#include "resg/matching.hpp"
#include "resg/plane_graph.hpp"

namespace resg::testing {

/// Rotation system of a plain cycle 0-1-...-(n-1)-0 with vertices numbered
/// clockwise; hint (0,1) makes the orbit through 0->1 the outer face.
inline plane_graph cycle_graph(int n) {
    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < n; ++v) rot[v] = {(v + n - 1) % n, (v + 1) % n};
    return build(rot, {0, 1});
}

/// Independent matching oracle: filters all 2^|E| edge subsets.
inline std::vector<edge_set> matchings_by_subsets(const plane_graph& g) {
    int m = g.edge_count();
    std::vector<edge_set> out;
    for (uint64_t mask = 0; mask < (uint64_t(1) << m); ++mask) {
        std::vector<int> deg(g.vertex_count, 0);
        for (int e = 0; e < m; ++e)
            if ((mask >> e) & 1) {
                deg[g.edges[e].first]++;
                deg[g.edges[e].second]++;
            }
        bool ok = true;
        for (int v = 0; v < g.vertex_count; ++v)
            if (deg[v] != 1) {
                ok = false;
                break;
            }
        if (!ok) continue;
        edge_set s = g.empty_edge_set();
        for (int e = 0; e < m; ++e)
            if ((mask >> e) & 1) s.set(e);
        out.push_back(s);
    }
    return out;
}

/// Line-graph distance recomputed from scratch on an explicit line graph.
inline int line_graph_distance_oracle(const plane_graph& g, int e, int f) {
    int m = g.edge_count();
    std::vector<std::vector<int>> ladj(m);
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            auto [a1, a2] = g.edges[a];
            auto [b1, b2] = g.edges[b];
            if (a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2) {
                ladj[a].push_back(b);
                ladj[b].push_back(a);
            }
        }
    std::vector<int> dist(m, -1);
    std::queue<int> q;
    dist[e] = 0;
    q.push(e);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : ladj[x])
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                q.push(y);
            }
    }
    return dist[f];
}

/// Degree sequence helper for quick structural assertions.
inline std::vector<int> sorted_degrees(const std::vector<std::vector<int>>& adj) {
    std::vector<int> d;
    for (const auto& a : adj) d.push_back((int)a.size());
    std::sort(d.begin(), d.end());
    return d;
}

/// Builds an outerplane graph from its clockwise outer cycle plus
/// non-crossing chords: rotations sort each neighborhood by cyclic position.
inline plane_graph from_outer_and_chords(const std::vector<int>& outer,
                                         const std::vector<std::pair<int, int>>& chords) {
    int n = (int)outer.size();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[outer[i]] = i;
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i) {
        adj[outer[i]].push_back(outer[(i + 1) % n]);
        adj[outer[(i + 1) % n]].push_back(outer[i]);
    }
    for (auto [a, b] : chords) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (int v = 0; v < n; ++v)
        std::sort(adj[v].begin(), adj[v].end(), [&](int x, int y) {
            return (pos[x] - pos[v] + n) % n < (pos[y] - pos[v] + n) % n;
        });
    return build(adj, {outer[0], outer[1]});
}

/// Central hexagon with three hexagons fused on it; `spread` lists the three
/// fused central edges by position. Positions {0,2,4} give the symmetric
/// system, {0,2,3} the bent one. The inner dual is a star on four nodes.
inline plane_graph branched_hexagons(const std::vector<int>& spread) {
    // Central hexagon 0..5 clockwise; fresh vertices appended per outer ring.
    std::vector<int> outer;
    std::vector<std::pair<int, int>> chords;
    int next = 6;
    for (int c = 0; c < 6; ++c) {
        outer.push_back(c);
        bool fused = std::find(spread.begin(), spread.end(), c) != spread.end();
        if (fused) {
            chords.push_back({c, (c + 1) % 6});
            for (int k = 0; k < 4; ++k) outer.push_back(next++);
        }
    }
    return from_outer_and_chords(outer, chords);
}

}  // namespace resg::testing
