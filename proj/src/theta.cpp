#include "resg/theta.hpp"

#include <algorithm>
#include <queue>

namespace resg {

distance_table all_pairs_distances(const resonance_graph& r) {
    int n = r.vertex_count();
    distance_table dt;
    dt.d.assign(n, std::vector<int>(n, -1));
    for (int s = 0; s < n; ++s) {
        auto& dist = dt.d[s];
        std::queue<int> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : r.adj[v])
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    q.push(w);
                }
        }
        for (int v = 0; v < n; ++v)
            require(dist[v] >= 0, errc::internal_invariant_violation, "resonance graph disconnected");
    }
    return dt;
}

bool theta_related(const resonance_graph& r, const distance_table& dt, int e1, int e2) {
    auto [u, v] = std::pair{r.edges[e1].u, r.edges[e1].v};
    auto [x, y] = std::pair{r.edges[e2].u, r.edges[e2].v};
    return dt(u, x) + dt(v, y) != dt(u, y) + dt(v, x);
}

bool theta_related(const resonance_graph& r, int e1, int e2) {
    return theta_related(r, all_pairs_distances(r), e1, e2);
}

theta_classes_t theta_classes(const resonance_graph& r) {
    int m = r.edge_count();
    distance_table dt = all_pairs_distances(r);

    std::vector<std::vector<char>> rel(m, std::vector<char>(m, 0));
    for (int a = 0; a < m; ++a) {
        rel[a][a] = 1;
        for (int b = a + 1; b < m; ++b) rel[a][b] = rel[b][a] = theta_related(r, dt, a, b);
    }

    theta_classes_t tc;
    tc.class_of_edge.assign(m, -1);
    for (int a = 0; a < m; ++a) {
        if (tc.class_of_edge[a] >= 0) continue;
        int cid = tc.class_count();
        tc.class_edges.push_back({});
        for (int b = a; b < m; ++b)
            if (rel[a][b]) {
                require(tc.class_of_edge[b] < 0, errc::theta_not_transitive,
                        "edge related to two representatives");
                tc.class_of_edge[b] = cid;
                tc.class_edges[cid].push_back(b);
            }
    }
    // Exact transitivity: relation must match the partition.
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            require(rel[a][b] == (tc.class_of_edge[a] == tc.class_of_edge[b]),
                    errc::theta_not_transitive, "relation is not transitive");

    for (int c = 0; c < tc.class_count(); ++c) {
        int f = r.edges[tc.class_edges[c].front()].face;
        for (int e : tc.class_edges[c])
            require(r.edges[e].face == f, errc::mixed_face_labels,
                    "class mixes face labels " + std::to_string(f) + " and " +
                        std::to_string(r.edges[e].face));
        tc.class_face.push_back(f);
    }
    return tc;
}

theta_graph_t theta_graph(const resonance_graph& r, const theta_classes_t& tc) {
    int k = tc.class_count();
    theta_graph_t tg;
    tg.adj.assign(k, {});
    tg.face_of_node = tc.class_face;
    if (k == 0) return tg;

    std::vector<std::vector<char>> linked(k, std::vector<char>(k, 0));
    for (int y = 0; y < r.vertex_count(); ++y) {
        const auto& inc = r.incident[y];
        for (size_t i = 0; i < inc.size(); ++i)
            for (size_t j = i + 1; j < inc.size(); ++j) {
                int e = inc[i], f = inc[j];
                int ce = tc.class_of_edge[e], cf = tc.class_of_edge[f];
                if (ce == cf) continue;
                int x = r.other_end(e, y), z = r.other_end(f, y);
                // Common 4-cycle test: a neighbor w != y of both x and z.
                bool in_square = false;
                for (int w : r.adj[x]) {
                    if (w == y) continue;
                    if (std::find(r.adj[z].begin(), r.adj[z].end(), w) != r.adj[z].end()) {
                        in_square = true;
                        break;
                    }
                }
                if (!in_square) linked[ce][cf] = linked[cf][ce] = 1;
            }
    }
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (linked[a][b]) {
                tg.edges.push_back({a, b});
                tg.adj[a].push_back(b);
                tg.adj[b].push_back(a);
            }

    // Tree check.
    require((int)tg.edges.size() == k - 1, errc::not_a_tree, "theta graph has wrong edge count");
    std::vector<int> seen(k, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int cnt = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : tg.adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++cnt;
                q.push(w);
            }
    }
    require(cnt == k, errc::not_a_tree, "theta graph is disconnected");
    return tg;
}

std::vector<int> medians(const resonance_graph& r, const distance_table& dt, int a, int b, int c) {
    std::vector<int> out;
    for (int v = 0; v < r.vertex_count(); ++v) {
        bool in_ab = dt(a, v) + dt(v, b) == dt(a, b);
        bool in_bc = dt(b, v) + dt(v, c) == dt(b, c);
        bool in_ac = dt(a, v) + dt(v, c) == dt(a, c);
        if (in_ab && in_bc && in_ac) out.push_back(v);
    }
    return out;
}

}  // namespace resg
