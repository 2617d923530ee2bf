#include "resg/plane_graph.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <queue>
#include <unordered_map>

namespace resg {

const char* errc_name(errc c) {
    switch (c) {
        case errc::bad_rotation: return "bad_rotation";
        case errc::not_bipartite: return "not_bipartite";
        case errc::not_two_connected: return "not_two_connected";
        case errc::not_outerplane: return "not_outerplane";
        case errc::not_plane_embedding: return "not_plane_embedding";
        case errc::odd_inner_face: return "odd_inner_face";
        case errc::shared_edge_multiplicity: return "shared_edge_multiplicity";
        case errc::usage_on_single_face: return "usage_on_single_face";
        case errc::cap_exceeded: return "cap_exceeded";
        case errc::cyclic_digraph: return "cyclic_digraph";
        case errc::theta_not_transitive: return "theta_not_transitive";
        case errc::mixed_face_labels: return "mixed_face_labels";
        case errc::not_a_tree: return "not_a_tree";
        case errc::not_convex: return "not_convex";
        case errc::no_reducible_face: return "no_reducible_face";
        case errc::search_budget_exceeded: return "search_budget_exceeded";
        case errc::disagreement_detected: return "disagreement_detected";
        case errc::invalid_spec: return "invalid_spec";
        case errc::invalid_input: return "invalid_input";
        case errc::internal_invariant_violation: return "internal_invariant_violation";
    }
    return "unknown";
}

int plane_graph::edge_id(int u, int v) const {
    if (u > v) std::swap(u, v);
    for (int e : vertex_edges[u])
        if (edges[e] == std::make_pair(u, v)) return e;
    return -1;
}

int plane_graph::dart_id(int u, int v) const {
    int e = edge_id(u, v);
    if (e < 0) return -1;
    return 2 * e + (edges[e].first == u ? 0 : 1);
}

int inner_dual_t::node_of_face(int face_id) const {
    for (int i = 0; i < (int)faces.size(); ++i)
        if (faces[i] == face_id) return i;
    return -1;
}

int inner_dual_t::shared_edge(int node_a, int node_b) const {
    for (const auto& de : edges)
        if ((de.a == node_a && de.b == node_b) || (de.a == node_b && de.b == node_a))
            return de.shared_edges.front();
    fail(errc::invalid_input, "inner dual nodes are not adjacent");
}

namespace {

std::atomic<uint32_t> next_graph_id{1};

// Position of neighbor u in v's rotation list.
int rotation_pos(const plane_graph& g, int v, int u) {
    const auto& r = g.rotations[v];
    for (int i = 0; i < (int)r.size(); ++i)
        if (r[i] == u) return i;
    return -1;
}

// Next dart of the face trace: arrive at v from u, leave toward the successor
// of u in v's clockwise rotation.
std::pair<int, int> next_dart(const plane_graph& g, int u, int v) {
    int p = rotation_pos(g, v, u);
    int w = g.rotations[v][(p + 1) % g.degree(v)];
    return {v, w};
}

void check_two_connected(const plane_graph& g) {
    int n = g.vertex_count;
    require(n >= 3, errc::not_two_connected, "fewer than three vertices");
    // Remove each vertex in turn and verify the rest stays connected.
    std::vector<int> seen(n);
    for (int skip = 0; skip < n; ++skip) {
        std::fill(seen.begin(), seen.end(), 0);
        int start = skip == 0 ? 1 : 0;
        std::queue<int> q;
        q.push(start);
        seen[start] = 1;
        int cnt = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.rotations[v]) {
                if (w == skip || seen[w]) continue;
                seen[w] = 1;
                ++cnt;
                q.push(w);
            }
        }
        require(cnt == n - 1, errc::not_two_connected, "cut vertex " + std::to_string(skip));
    }
}

}  // namespace

plane_graph build(const std::vector<std::vector<int>>& rotations, std::pair<int, int> outer_hint,
                  const std::optional<std::vector<vertex_color>>& forced_colors) {
    plane_graph g;
    g.vertex_count = (int)rotations.size();
    g.rotations = rotations;
    g.graph_id = next_graph_id.fetch_add(1);
    int n = g.vertex_count;
    require(n >= 2, errc::bad_rotation, "need at least two vertices");

    // Rotation sanity: valid ids, no loops, no repeats, symmetric.
    for (int v = 0; v < n; ++v) {
        require(!rotations[v].empty(), errc::not_two_connected, "isolated vertex " + std::to_string(v));
        std::vector<int> sorted = rotations[v];
        std::sort(sorted.begin(), sorted.end());
        for (size_t i = 0; i < sorted.size(); ++i) {
            int w = sorted[i];
            require(w >= 0 && w < n, errc::bad_rotation, "neighbor id out of range");
            require(w != v, errc::bad_rotation, "self loop at " + std::to_string(v));
            require(i == 0 || sorted[i] != sorted[i - 1], errc::bad_rotation,
                    "repeated neighbor in rotation of " + std::to_string(v));
        }
    }
    for (int v = 0; v < n; ++v)
        for (int w : rotations[v])
            require(rotation_pos(g, w, v) >= 0, errc::bad_rotation,
                    "asymmetric adjacency " + std::to_string(v) + "-" + std::to_string(w));

    // Edge ids in input order: first appearance scanning rotations.
    std::map<std::pair<int, int>, int> eid;
    for (int v = 0; v < n; ++v) {
        for (int w : rotations[v]) {
            auto key = std::minmax(v, w);
            std::pair<int, int> k{key.first, key.second};
            if (!eid.count(k)) {
                eid[k] = (int)g.edges.size();
                g.edges.push_back(k);
            }
        }
    }
    g.vertex_edges.assign(n, {});
    for (int v = 0; v < n; ++v)
        for (int w : rotations[v]) {
            auto key = std::minmax(v, w);
            g.vertex_edges[v].push_back(eid[{key.first, key.second}]);
        }

    // Connectivity (a disconnected graph is in particular not 2-connected).
    {
        std::vector<int> seen(n, 0);
        std::queue<int> q;
        q.push(0);
        seen[0] = 1;
        int cnt = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : rotations[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++cnt;
                    q.push(w);
                }
        }
        require(cnt == n, errc::not_two_connected, "graph is disconnected");
    }

    // 2-coloring, vertex 0 white.
    if (forced_colors) {
        require((int)forced_colors->size() == n, errc::invalid_input, "color vector size mismatch");
        g.colors = *forced_colors;
        for (auto [u, v] : g.edges)
            require(g.colors[u] != g.colors[v], errc::not_bipartite, "forced coloring not proper");
    } else {
        g.colors.assign(n, vertex_color::white);
        std::vector<int> col(n, -1);
        std::queue<int> q;
        q.push(0);
        col[0] = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : rotations[v]) {
                if (col[w] < 0) {
                    col[w] = col[v] ^ 1;
                    q.push(w);
                } else {
                    require(col[w] != col[v], errc::not_bipartite,
                            "odd cycle through edge " + std::to_string(v) + "-" + std::to_string(w));
                }
            }
        }
        for (int v = 0; v < n; ++v)
            g.colors[v] = col[v] == 0 ? vertex_color::white : vertex_color::black;
    }

    check_two_connected(g);

    // Face tracing: orbits of the next-dart rule partition all darts.
    int m = g.edge_count();
    g.dart_face.assign(2 * m, -1);
    auto dart_of = [&](int u, int v) {
        auto key = std::minmax(u, v);
        int e = eid[{key.first, key.second}];
        return 2 * e + (g.edges[e].first == u ? 0 : 1);
    };
    for (int d0 = 0; d0 < 2 * m; ++d0) {
        if (g.dart_face[d0] >= 0) continue;
        face f;
        f.id = (int)g.faces.size();
        int e = d0 / 2;
        int u = (d0 & 1) ? g.edges[e].second : g.edges[e].first;
        int v = (d0 & 1) ? g.edges[e].first : g.edges[e].second;
        int su = u, sv = v;
        do {
            int d = dart_of(u, v);
            require(g.dart_face[d] < 0, errc::internal_invariant_violation, "dart visited twice");
            g.dart_face[d] = f.id;
            f.boundary.push_back({u, v});
            auto nx = next_dart(g, u, v);
            u = nx.first;
            v = nx.second;
        } while (!(u == su && v == sv));
        g.faces.push_back(std::move(f));
    }

    require(n - m + (int)g.faces.size() == 2, errc::not_plane_embedding,
            "rotation system is not a plane embedding (Euler check failed)");

    // Designated outer face.
    int hd = -1;
    {
        auto key = std::minmax(outer_hint.first, outer_hint.second);
        auto it = eid.find({key.first, key.second});
        require(it != eid.end(), errc::bad_rotation, "outer hint is not an edge");
        hd = 2 * it->second + (g.edges[it->second].first == outer_hint.first ? 0 : 1);
    }
    g.outer_face = g.dart_face[hd];
    for (auto& f : g.faces) f.is_outer = (f.id == g.outer_face);

    // Every face of a 2-connected plane graph is a simple cycle.
    for (const auto& f : g.faces) {
        std::vector<int> vs;
        for (auto [u, v] : f.boundary) vs.push_back(u);
        std::sort(vs.begin(), vs.end());
        require(std::adjacent_find(vs.begin(), vs.end()) == vs.end(), errc::internal_invariant_violation,
                "face boundary is not a simple cycle");
        require(f.length() % 2 == 0, errc::odd_inner_face,
                "odd face of length " + std::to_string(f.length()));
    }

    // Outerplanarity: all vertices on the outer face.
    {
        std::vector<char> on_outer(n, 0);
        for (auto [u, v] : g.outer().boundary) on_outer[u] = 1;
        for (int v = 0; v < n; ++v)
            require(on_outer[v], errc::not_outerplane, "vertex " + std::to_string(v) + " off the outer face");
    }

    for (const auto& f : g.faces) {
        edge_set s = g.empty_edge_set();
        for (auto [u, v] : f.boundary) s.set(g.edge_id(u, v));
        g.face_edges.push_back(s);
        if (!f.is_outer) g.inner_face_ids.push_back(f.id);
    }
    return g;
}

common_periphery_result common_periphery(const plane_graph& g, int s) {
    require(s >= 0 && s < (int)g.faces.size() && s != g.outer_face, errc::invalid_input,
            "face is not an inner face");
    const face& outer = g.outer();
    common_periphery_result res;

    std::vector<char> shared((size_t)outer.length(), 0);
    int shared_count = 0;
    for (int i = 0; i < outer.length(); ++i) {
        auto [u, v] = outer.boundary[i];
        if (g.face_edges[s].test(g.edge_id(u, v))) {
            shared[i] = 1;
            ++shared_count;
        }
    }
    if (shared_count == 0) return res;  // absent

    if (shared_count == g.faces[s].length()) {
        res.kind = periphery_kind::whole_boundary;
        for (auto [u, v] : outer.boundary) {
            res.vertices.push_back(u);
            res.edge_ids.push_back(g.edge_id(u, v));
        }
        return res;
    }

    // The shared edges must form one contiguous arc of the outer cycle.
    int L = outer.length();
    int start = -1;
    for (int i = 0; i < L; ++i)
        if (shared[i] && !shared[(i + L - 1) % L]) {
            if (start >= 0) return res;  // several arcs: absent
            start = i;
        }
    require(start >= 0, errc::internal_invariant_violation, "shared arc with no start");
    for (int i = start; shared[i % L] && i < start + L; ++i) {
        auto [u, v] = outer.boundary[i % L];
        res.vertices.push_back(u);
        res.edge_ids.push_back(g.edge_id(u, v));
    }
    res.vertices.push_back(outer.boundary[(start + shared_count) % L].first);
    if ((int)res.edge_ids.size() != shared_count) {
        // Wrapped into a second arc: not a single path.
        return common_periphery_result{};
    }
    res.kind = periphery_kind::path;
    return res;
}

int edge_distance(const plane_graph& g, int e, int f) {
    require(e >= 0 && e < g.edge_count() && f >= 0 && f < g.edge_count(), errc::invalid_input,
            "edge id out of range");
    if (e == f) return 0;
    std::vector<int> dist(g.edge_count(), -1);
    std::queue<int> q;
    dist[e] = 0;
    q.push(e);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int end : {g.edges[x].first, g.edges[x].second}) {
            for (int y : g.vertex_edges[end]) {
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    if (y == f) return dist[y];
                    q.push(y);
                }
            }
        }
    }
    fail(errc::internal_invariant_violation, "line graph of a connected graph is connected");
}

inner_dual_t inner_dual(const plane_graph& g) {
    inner_dual_t d;
    d.faces = g.inner_face_ids;
    std::map<std::pair<int, int>, std::vector<int>> shared;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [f1, f2] = g.edge_faces(e);
        if (f1 == g.outer_face || f2 == g.outer_face) continue;
        require(f1 != f2, errc::internal_invariant_violation, "edge with the same face on both sides");
        auto key = std::minmax(f1, f2);
        shared[{key.first, key.second}].push_back(e);
    }
    d.adj.assign(d.faces.size(), {});
    for (auto& [fp, es] : shared) {
        require(es.size() == 1, errc::shared_edge_multiplicity,
                "inner faces " + std::to_string(fp.first) + " and " + std::to_string(fp.second) +
                    " share " + std::to_string(es.size()) + " edges");
        int a = d.node_of_face(fp.first), b = d.node_of_face(fp.second);
        d.edges.push_back({a, b, es});
        d.adj[a].push_back(b);
        d.adj[b].push_back(a);
    }
    // Tree check: connected with k-1 edges.
    int k = d.node_count();
    if (k > 0) {
        require((int)d.edges.size() == k - 1, errc::not_a_tree, "inner dual has a cycle");
        std::vector<int> seen(k, 0);
        std::queue<int> q;
        q.push(0);
        seen[0] = 1;
        int cnt = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : d.adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++cnt;
                    q.push(w);
                }
        }
        require(cnt == k, errc::not_a_tree, "inner dual is disconnected");
    }
    return d;
}

std::vector<std::pair<int, int>> clockwise_directions(const plane_graph& g, const edge_set& cycle_edges) {
    // Every vertex must have degree 0 or 2 within the edge set.
    std::vector<int> deg(g.vertex_count, 0);
    for (int e : cycle_edges.bits()) {
        deg[g.edges[e].first]++;
        deg[g.edges[e].second]++;
    }
    for (int v = 0; v < g.vertex_count; ++v)
        require(deg[v] == 0 || deg[v] == 2, errc::invalid_input, "edge set is not a union of cycles");

    // Faces cut off from the outer face by the cycle edges are its interior.
    int F = (int)g.faces.size();
    std::vector<char> outside(F, 0);
    std::queue<int> q;
    outside[g.outer_face] = 1;
    q.push(g.outer_face);
    while (!q.empty()) {
        int f = q.front();
        q.pop();
        for (auto [u, v] : g.faces[f].boundary) {
            int e = g.edge_id(u, v);
            if (cycle_edges.test(e)) continue;
            auto [a, b] = g.edge_faces(e);
            int other = (a == f) ? b : a;
            if (!outside[other]) {
                outside[other] = 1;
                q.push(other);
            }
        }
    }

    std::vector<std::pair<int, int>> dirs;
    for (int e : cycle_edges.bits()) {
        auto [fa, fb] = g.edge_faces(e);
        bool a_in = !outside[fa], b_in = !outside[fb];
        require(a_in != b_in, errc::internal_invariant_violation,
                "cycle edge must separate interior from exterior");
        int inside = a_in ? fa : fb;
        // The interior face traces counterclockwise; reverse its dart.
        int d = 2 * e + (inside == fa ? 0 : 1);
        int tail = (d & 1) ? g.edges[e].second : g.edges[e].first;
        int head = (d & 1) ? g.edges[e].first : g.edges[e].second;
        dirs.push_back({head, tail});
    }
    return dirs;
}

plane_graph mirror_embedding(const plane_graph& g) {
    std::vector<std::vector<int>> rot = g.rotations;
    for (auto& r : rot) std::reverse(r.begin(), r.end());
    auto hint = g.outer().boundary.front();
    return build(rot, {hint.second, hint.first});
}

subgraph_result build_subgraph(const plane_graph& g, const std::vector<char>& keep_vertex,
                               const std::vector<char>& keep_edge) {
    subgraph_result out;
    std::vector<int> new_id(g.vertex_count, -1);
    for (int v = 0; v < g.vertex_count; ++v)
        if (keep_vertex[v]) {
            new_id[v] = (int)out.vert_to_parent.size();
            out.vert_to_parent.push_back(v);
        }
    int n2 = (int)out.vert_to_parent.size();
    require(n2 >= 3, errc::internal_invariant_violation, "subgraph too small");

    std::vector<std::vector<int>> rot(n2);
    for (int v2 = 0; v2 < n2; ++v2) {
        int v = out.vert_to_parent[v2];
        for (size_t i = 0; i < g.rotations[v].size(); ++i) {
            int w = g.rotations[v][i];
            int e = g.vertex_edges[v][i];
            if (keep_vertex[w] && keep_edge[e]) rot[v2].push_back(new_id[w]);
        }
    }

    // Trace the restricted rotation system to find which orbit is the new
    // outer face: it is the unique orbit that does not coincide with a
    // surviving inner face of the parent.
    plane_graph probe;
    probe.vertex_count = n2;
    probe.rotations = rot;
    int m2 = 0;
    std::map<std::pair<int, int>, int> eid;
    for (int v = 0; v < n2; ++v)
        for (int w : rot[v]) {
            auto key = std::minmax(v, w);
            if (!eid.count({key.first, key.second})) eid[{key.first, key.second}] = m2++;
        }
    std::vector<char> dart_seen(2 * m2, 0);
    auto dart_of = [&](int u, int v) {
        auto key = std::minmax(u, v);
        int e = eid[{key.first, key.second}];
        return 2 * e + (key.first == u ? 0 : 1);
    };

    // Directed boundaries of parent inner faces, translated to child ids.
    std::map<std::vector<std::pair<int, int>>, int> parent_orbits;
    for (int fid : g.inner_face_ids) {
        bool survives = true;
        std::vector<std::pair<int, int>> darts;
        for (auto [u, v] : g.faces[fid].boundary) {
            int e = g.edge_id(u, v);
            if (!keep_vertex[u] || !keep_vertex[v] || !keep_edge[e]) {
                survives = false;
                break;
            }
            darts.push_back({new_id[u], new_id[v]});
        }
        if (!survives) continue;
        std::sort(darts.begin(), darts.end());
        parent_orbits[darts] = fid;
    }

    std::pair<int, int> outer_hint{-1, -1};
    int non_matching = 0;
    for (int v = 0; v < n2 && non_matching <= 1; ++v) {
        for (int w : rot[v]) {
            int d0 = dart_of(v, w);
            if (dart_seen[d0]) continue;
            std::vector<std::pair<int, int>> orbit;
            int u = v, x = w;
            do {
                dart_seen[dart_of(u, x)] = 1;
                orbit.push_back({u, x});
                int p = 0;
                while (rot[x][p] != u) ++p;
                int nxt = rot[x][(p + 1) % rot[x].size()];
                u = x;
                x = nxt;
            } while (!(u == v && x == w));
            auto sorted = orbit;
            std::sort(sorted.begin(), sorted.end());
            if (!parent_orbits.count(sorted)) {
                ++non_matching;
                outer_hint = orbit.front();
            }
        }
    }
    require(non_matching == 1, errc::internal_invariant_violation,
            "restriction must expose exactly one merged outer region");

    std::vector<vertex_color> colors(n2);
    for (int v2 = 0; v2 < n2; ++v2) colors[v2] = g.colors[out.vert_to_parent[v2]];
    out.graph = build(rot, outer_hint, colors);

    out.edge_to_parent.assign(out.graph.edge_count(), -1);
    for (int e = 0; e < out.graph.edge_count(); ++e) {
        auto [u, v] = out.graph.edges[e];
        out.edge_to_parent[e] = g.edge_id(out.vert_to_parent[u], out.vert_to_parent[v]);
        require(out.edge_to_parent[e] >= 0, errc::internal_invariant_violation, "untranslatable edge");
    }

    out.face_to_parent.assign(out.graph.faces.size(), -1);
    for (const auto& f : out.graph.faces) {
        if (f.is_outer) continue;
        std::vector<std::pair<int, int>> darts;
        for (auto [u, v] : f.boundary) darts.push_back({u, v});
        std::sort(darts.begin(), darts.end());
        auto it = parent_orbits.find(darts);
        require(it != parent_orbits.end(), errc::internal_invariant_violation,
                "inner face of restriction does not match a parent face");
        out.face_to_parent[f.id] = it->second;
    }
    return out;
}

}  // namespace resg
