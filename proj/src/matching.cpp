#include "resg/matching.hpp"

#include <algorithm>
#include <queue>

namespace resg {

namespace {

void enumerate_rec(const plane_graph& g, std::vector<char>& covered, int covered_count, edge_set& cur,
                   std::vector<edge_set>& out, int cap) {
    if (covered_count == g.vertex_count) {
        require((int)out.size() < cap, errc::cap_exceeded,
                "more than " + std::to_string(cap) + " perfect matchings");
        out.push_back(cur);
        return;
    }
    int v = 0;
    while (covered[v]) ++v;
    // Incident edges in edge-id order.
    std::vector<int> inc = g.vertex_edges[v];
    std::sort(inc.begin(), inc.end());
    for (int e : inc) {
        int w = g.edges[e].first == v ? g.edges[e].second : g.edges[e].first;
        if (covered[w]) continue;
        covered[v] = covered[w] = 1;
        cur.set(e);
        enumerate_rec(g, covered, covered_count + 2, cur, out, cap);
        cur.reset(e);
        covered[v] = covered[w] = 0;
    }
}

}  // namespace

std::vector<edge_set> enumerate_matchings(const plane_graph& g, int cap) {
    std::vector<edge_set> out;
    if (g.vertex_count % 2 != 0) return out;
    std::vector<char> covered(g.vertex_count, 0);
    edge_set cur = g.empty_edge_set();
    enumerate_rec(g, covered, 0, cur, out, cap);
    return out;
}

alternation classify_cycle(const plane_graph& g, const edge_set& m,
                           const std::vector<std::pair<int, int>>& cycle) {
    int L = (int)cycle.size();
    bool all_wb = true, all_bw = true;
    int in_m = 0;
    for (int i = 0; i < L; ++i) {
        auto [u, v] = cycle[i];
        int e = g.edge_id(u, v);
        require(e >= 0, errc::invalid_input, "cycle uses a non-edge");
        bool cur = m.test(e);
        bool nxt = m.test(g.edge_id(cycle[(i + 1) % L].first, cycle[(i + 1) % L].second));
        if (cur == nxt) return alternation::not_alternating;
        if (cur) {
            ++in_m;
            if (g.colors[u] == vertex_color::white)
                all_bw = false;
            else
                all_wb = false;
        }
    }
    if (in_m == 0) return alternation::not_alternating;
    if (all_wb) return alternation::proper;
    if (all_bw) return alternation::improper;
    fail(errc::internal_invariant_violation, "alternating cycle with mixed edge directions");
}

alternation classify_face_clockwise(const plane_graph& g, const edge_set& m, int face_id) {
    const face& f = g.faces[face_id];
    if (f.is_outer) return classify_cycle(g, m, f.boundary);
    std::vector<std::pair<int, int>> rev(f.boundary.rbegin(), f.boundary.rend());
    for (auto& d : rev) std::swap(d.first, d.second);
    return classify_cycle(g, m, rev);
}

alternation classify_cycle_clockwise(const plane_graph& g, const edge_set& m,
                                     const edge_set& cycle_edges) {
    auto dirs = clockwise_directions(g, cycle_edges);
    // clockwise_directions returns the darts unordered; chain them into the
    // directed cycle before classifying.
    std::vector<int> succ(g.vertex_count, -1);
    for (auto [u, v] : dirs) succ[u] = v;
    std::vector<std::pair<int, int>> ordered;
    int start = dirs.front().first;
    int u = start;
    do {
        require(succ[u] >= 0, errc::internal_invariant_violation, "broken clockwise traversal");
        ordered.push_back({u, succ[u]});
        u = succ[u];
    } while (u != start);
    require(ordered.size() == dirs.size(), errc::invalid_input,
            "edge set has several cycle components");
    return classify_cycle(g, m, ordered);
}

bool is_resonant(const plane_graph& g, const edge_set& m, int face_id) {
    return classify_cycle(g, m, g.faces[face_id].boundary) != alternation::not_alternating;
}

std::pair<edge_set, edge_set> extremal_matchings(const plane_graph& g) {
    const face& outer = g.outer();
    edge_set a = g.empty_edge_set(), b = g.empty_edge_set();
    for (int i = 0; i < outer.length(); ++i) {
        auto [u, v] = outer.boundary[i];
        (i % 2 == 0 ? a : b).set(g.edge_id(u, v));
    }
    auto is_pm = [&](const edge_set& m) {
        std::vector<int> deg(g.vertex_count, 0);
        for (int e : m.bits()) {
            deg[g.edges[e].first]++;
            deg[g.edges[e].second]++;
        }
        for (int v = 0; v < g.vertex_count; ++v)
            if (deg[v] != 1) return false;
        return true;
    };
    require(is_pm(a) && is_pm(b), errc::internal_invariant_violation,
            "outer cycle alternations are not perfect matchings");
    alternation ca = classify_cycle(g, a, outer.boundary);
    alternation cb = classify_cycle(g, b, outer.boundary);
    require((ca == alternation::improper && cb == alternation::proper) ||
                (ca == alternation::proper && cb == alternation::improper),
            errc::internal_invariant_violation, "outer alternations must get opposite classes");
    if (ca == alternation::improper) return {a, b};
    return {b, a};
}

namespace {

// Kuhn's augmenting path matching on an explicit bipartition.
struct bipartite_matcher {
    int n;
    std::vector<std::vector<int>> adj;
    std::vector<int> side;  // 0/1, or -1 for excluded vertices
    std::vector<int> match;

    bool try_augment(int v, std::vector<char>& used) {
        for (int w : adj[v]) {
            if (side[w] < 0 || used[w]) continue;
            used[w] = 1;
            if (match[w] < 0 || try_augment(match[w], used)) {
                match[v] = w;
                match[w] = v;
                return true;
            }
        }
        return false;
    }

    // Maximum matching size over vertices with side >= 0.
    int solve() {
        match.assign(n, -1);
        int size = 0;
        for (int v = 0; v < n; ++v) {
            if (side[v] != 0 || match[v] >= 0) continue;
            std::vector<char> used(n, 0);
            if (try_augment(v, used)) ++size;
        }
        return size;
    }
};

}  // namespace

bool is_elementary(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
    if (vertex_count == 0 || vertex_count % 2 != 0) return false;
    bipartite_matcher bm;
    bm.n = vertex_count;
    bm.adj.assign(vertex_count, {});
    for (auto [u, v] : edges) {
        bm.adj[u].push_back(v);
        bm.adj[v].push_back(u);
    }
    // Connectivity and 2-coloring in one pass.
    std::vector<int> col(vertex_count, -1);
    std::queue<int> q;
    q.push(0);
    col[0] = 0;
    int seen = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : bm.adj[v]) {
            if (col[w] < 0) {
                col[w] = col[v] ^ 1;
                ++seen;
                q.push(w);
            } else if (col[w] == col[v]) {
                return false;
            }
        }
    }
    if (seen != vertex_count) return false;

    for (auto [u, v] : edges) {
        // A perfect matching through uv exists iff the rest matches perfectly.
        bm.side = col;
        bm.side[u] = bm.side[v] = -1;
        if (2 * bm.solve() != vertex_count - 2) return false;
    }
    return true;
}

bool is_elementary(const plane_graph& g) { return is_elementary(g.vertex_count, g.edges); }

}  // namespace resg
