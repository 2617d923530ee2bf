#include "resg/decomposition.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "resg/theta.hpp"

namespace resg {

int rfd_t::edge_in_snapshot(int i, int orig_edge) const {
    const auto& map = snap_edge_orig[i];
    for (int e = 0; e < (int)map.size(); ++e)
        if (map[e] == orig_edge) return e;
    return -1;
}

int rfd_t::face_in_snapshot(int i, int orig_face) const {
    const auto& map = snap_face_orig[i];
    for (int f = 0; f < (int)map.size(); ++f)
        if (map[f] == orig_face) return f;
    return -1;
}

namespace {

// Edges of face s shared with another inner face.
std::vector<int> inner_shared_edges(const plane_graph& g, int s) {
    std::vector<int> out;
    for (int e : g.face_edges[s].bits()) {
        auto [f1, f2] = g.edge_faces(e);
        int other = f1 == s ? f2 : f1;
        if (other != g.outer_face) out.push_back(e);
    }
    return out;
}

struct reduced_shape {
    std::vector<char> keep_vertex, keep_edge;
};

reduced_shape reduction_masks(const plane_graph& g, const common_periphery_result& cp) {
    reduced_shape rs;
    rs.keep_vertex.assign(g.vertex_count, 1);
    rs.keep_edge.assign(g.edge_count(), 1);
    for (size_t i = 1; i + 1 < cp.vertices.size(); ++i) rs.keep_vertex[cp.vertices[i]] = 0;
    for (int e : cp.edge_ids) rs.keep_edge[e] = 0;
    return rs;
}

}  // namespace

bool is_reducible_face(const plane_graph& g, int face_id) {
    require(face_id != g.outer_face, errc::invalid_input, "outer face cannot be reducible");
    auto shared = inner_shared_edges(g, face_id);
    if (shared.size() != 1) return false;
    auto cp = common_periphery(g, face_id);
    if (cp.kind != periphery_kind::path) return false;
    int l = (int)cp.edge_ids.size();
    if (l < 3 || l % 2 == 0) return false;
    if (l + 1 != g.faces[face_id].length()) return false;

    // Elementarity of the reduced graph, on compacted ids.
    reduced_shape rs = reduction_masks(g, cp);
    std::vector<int> new_id(g.vertex_count, -1);
    int n2 = 0;
    for (int v = 0; v < g.vertex_count; ++v)
        if (rs.keep_vertex[v]) new_id[v] = n2++;
    std::vector<std::pair<int, int>> edges2;
    for (int e = 0; e < g.edge_count(); ++e)
        if (rs.keep_edge[e]) {
            auto [u, v] = g.edges[e];
            edges2.push_back({new_id[u], new_id[v]});
        }
    return is_elementary(n2, edges2);
}

std::vector<int> find_reducible_faces(const plane_graph& g) {
    require(g.inner_face_count() >= 2, errc::usage_on_single_face,
            "needs at least two inner faces");
    std::vector<int> out;
    for (int s : g.inner_face_ids)
        if (is_reducible_face(g, s)) out.push_back(s);
    return out;
}

peeling peeling::start(const plane_graph& g) {
    peeling p{g, {}, {}, {}};
    p.vert_orig.resize(g.vertex_count);
    p.edge_orig.resize(g.edge_count());
    p.face_orig.resize(g.faces.size());
    std::iota(p.vert_orig.begin(), p.vert_orig.end(), 0);
    std::iota(p.edge_orig.begin(), p.edge_orig.end(), 0);
    std::iota(p.face_orig.begin(), p.face_orig.end(), 0);
    p.face_orig[g.outer_face] = -1;
    return p;
}

int peeling::cur_face_of(int orig_face) const {
    for (int f = 0; f < (int)face_orig.size(); ++f)
        if (face_orig[f] == orig_face) return f;
    return -1;
}

rfd_step peeling::peel(int cur_face) {
    auto cp = common_periphery(cur, cur_face);
    require(cp.kind == periphery_kind::path, errc::internal_invariant_violation,
            "peeled face must meet the boundary in a single path");
    auto shared = inner_shared_edges(cur, cur_face);
    require(shared.size() == 1, errc::internal_invariant_violation,
            "peeled face must share exactly one edge with the rest");

    rfd_step st;
    st.face = face_orig[cur_face];
    for (int v : cp.vertices) st.ear_vertices.push_back(vert_orig[v]);
    for (int e : cp.edge_ids) st.ear_edges.push_back(edge_orig[e]);
    st.anchor_edge = edge_orig[shared.front()];
    st.start_color = cur.colors[cp.vertices.front()];
    st.end_color = cur.colors[cp.vertices.back()];

    reduced_shape rs = reduction_masks(cur, cp);
    subgraph_result sub = build_subgraph(cur, rs.keep_vertex, rs.keep_edge);
    std::vector<int> v2(sub.graph.vertex_count), e2(sub.graph.edge_count()),
        f2(sub.graph.faces.size());
    for (int v = 0; v < sub.graph.vertex_count; ++v) v2[v] = vert_orig[sub.vert_to_parent[v]];
    for (int e = 0; e < sub.graph.edge_count(); ++e) e2[e] = edge_orig[sub.edge_to_parent[e]];
    for (int f = 0; f < (int)sub.graph.faces.size(); ++f)
        f2[f] = sub.face_to_parent[f] < 0 ? -1 : face_orig[sub.face_to_parent[f]];
    cur = sub.graph;
    vert_orig = v2;
    edge_orig = e2;
    face_orig = f2;
    return st;
}

rfd_t rfd(const plane_graph& g) {
    rfd_t d;
    std::vector<rfd_step> steps_rev;
    std::vector<plane_graph> snaps_rev;
    std::vector<std::vector<int>> sv_rev, se_rev, sf_rev;

    peeling p = peeling::start(g);
    while (p.cur.inner_face_count() > 1) {
        std::vector<int> cands = find_reducible_faces(p.cur);
        require(!cands.empty(), errc::no_reducible_face,
                "no reducible face at " + std::to_string(p.cur.inner_face_count()) +
                    " inner faces");
        int pick = cands.front();
        for (int c : cands)
            if (p.face_orig[c] < p.face_orig[pick]) pick = c;

        snaps_rev.push_back(p.cur);
        sv_rev.push_back(p.vert_orig);
        se_rev.push_back(p.edge_orig);
        sf_rev.push_back(p.face_orig);
        steps_rev.push_back(p.peel(pick));
    }

    rfd_step first;
    first.face = p.face_orig[p.cur.inner_face_ids.front()];
    steps_rev.push_back(first);
    snaps_rev.push_back(p.cur);
    sv_rev.push_back(p.vert_orig);
    se_rev.push_back(p.edge_orig);
    sf_rev.push_back(p.face_orig);

    for (int i = (int)steps_rev.size() - 1; i >= 0; --i) {
        d.steps.push_back(steps_rev[i]);
        d.snapshots.push_back(snaps_rev[i]);
        d.snap_vert_orig.push_back(sv_rev[i]);
        d.snap_edge_orig.push_back(se_rev[i]);
        d.snap_face_orig.push_back(sf_rev[i]);
    }
    return d;
}

void labeled_graph::add_edge(int u, int v, int label) {
    if (u > v) std::swap(u, v);
    edges.push_back({u, v, label});
    adj[u].push_back(v);
    adj[v].push_back(u);
}

labeled_graph labeled_graph::with_vertices(int n) {
    labeled_graph g;
    g.n = n;
    g.adj.assign(n, {});
    return g;
}

pce_result pce(const labeled_graph& g, const std::vector<int>& convex_set) {
    require(!convex_set.empty(), errc::invalid_input, "empty expansion set");
    std::vector<char> in_h(g.n, 0);
    for (int v : convex_set) {
        require(v >= 0 && v < g.n, errc::invalid_input, "vertex out of range");
        in_h[v] = 1;
    }

    // Convexity: every vertex on a shortest path between members is a member.
    std::vector<std::vector<int>> dist(g.n, std::vector<int>(g.n, -1));
    for (int s = 0; s < g.n; ++s) {
        std::queue<int> q;
        dist[s][s] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.adj[v])
                if (dist[s][w] < 0) {
                    dist[s][w] = dist[s][v] + 1;
                    q.push(w);
                }
        }
    }
    for (int a : convex_set)
        for (int b : convex_set) {
            require(dist[a][b] >= 0, errc::not_convex, "expansion set spans components");
            for (int z = 0; z < g.n; ++z)
                require(in_h[z] || dist[a][z] + dist[z][b] != dist[a][b], errc::not_convex,
                        "shortest path leaves the expansion set");
        }

    pce_result out;
    std::vector<int> sorted_h = convex_set;
    std::sort(sorted_h.begin(), sorted_h.end());
    out.graph = labeled_graph::with_vertices(g.n + (int)sorted_h.size());
    out.copies.assign(g.n, {-1, -1});
    for (int v = 0; v < g.n; ++v) out.copies[v] = {v, -1};
    for (int i = 0; i < (int)sorted_h.size(); ++i) out.copies[sorted_h[i]] = {sorted_h[i], g.n + i};

    for (const auto& e : g.edges) {
        bool hu = in_h[e.u], hv = in_h[e.v];
        if (hu && hv) {
            out.graph.add_edge(out.copies[e.u].first, out.copies[e.v].first, e.label);
            out.graph.add_edge(out.copies[e.u].second, out.copies[e.v].second, e.label);
        } else {
            out.graph.add_edge(e.u, e.v, e.label);
        }
    }
    for (int v : sorted_h) {
        out.new_edges.push_back((int)out.graph.edges.size());
        out.graph.add_edge(out.copies[v].first, out.copies[v].second, -1);
    }
    return out;
}

resonance_graph rebuild_resonance(const plane_graph& g, const rfd_t& d) {
    require(d.step_count() >= 1, errc::invalid_input, "empty decomposition");

    // R(G_1) = K2 labelled with the first face.
    labeled_graph cur = labeled_graph::with_vertices(2);
    cur.add_edge(0, 1, d.steps[0].face);
    std::vector<edge_set> lifted;
    for (const edge_set& m : enumerate_matchings(d.snapshots[0])) {
        edge_set t(g.edge_count());
        for (int e : m.bits()) t.set(d.snap_edge_orig[0][e]);
        lifted.push_back(t);
    }
    require(lifted.size() == 2, errc::internal_invariant_violation, "first snapshot must be a cycle");

    for (int i = 1; i < d.step_count(); ++i) {
        const rfd_step& st = d.steps[i];
        std::vector<int> t_set;
        for (int v = 0; v < cur.n; ++v)
            if (lifted[v].test(st.anchor_edge)) t_set.push_back(v);
        require(!t_set.empty(), errc::internal_invariant_violation,
                "anchor edge lies in no matching of the previous snapshot");

        pce_result ex = pce(cur, t_set);
        for (int e : ex.new_edges) ex.graph.edges[e].label = st.face;

        edge_set internal_alt(g.edge_count()), end_alt(g.edge_count());
        for (size_t k = 0; k < st.ear_edges.size(); ++k)
            (k % 2 == 0 ? end_alt : internal_alt).set(st.ear_edges[k]);

        std::vector<edge_set> next(ex.graph.n, edge_set(g.edge_count()));
        for (int v = 0; v < cur.n; ++v) next[v] = lifted[v] | internal_alt;
        for (int v : t_set) {
            edge_set m = lifted[v];
            m.reset(st.anchor_edge);
            next[ex.copies[v].second] = m | end_alt;
        }
        for (const edge_set& m : next)
            require(2 * m.count() == d.snapshots[i].vertex_count, errc::internal_invariant_violation,
                    "lifted matching has the wrong size");
        cur = ex.graph;
        lifted = next;
    }

    resonance_graph r;
    r.graph_id = g.graph_id;
    r.matchings = lifted;
    r.adj.assign(cur.n, {});
    r.incident.assign(cur.n, {});
    for (const auto& e : cur.edges) {
        int idx = (int)r.edges.size();
        r.edges.push_back({e.u, e.v, e.label});
        r.adj[e.u].push_back(e.v);
        r.adj[e.v].push_back(e.u);
        r.incident[e.u].push_back(idx);
        r.incident[e.v].push_back(idx);
    }
    return r;
}

matching_partition partition_matchings(const plane_graph& g, int face_id, int cap) {
    require(g.inner_face_count() >= 2, errc::usage_on_single_face,
            "partition needs at least two inner faces");
    require(is_reducible_face(g, face_id), errc::invalid_input, "face is not reducible");

    auto cp = common_periphery(g, face_id);
    edge_set internal_alt = g.empty_edge_set(), end_alt = g.empty_edge_set(), p_edges = g.empty_edge_set();
    for (size_t k = 0; k < cp.edge_ids.size(); ++k) {
        p_edges.set(cp.edge_ids[k]);
        (k % 2 == 0 ? end_alt : internal_alt).set(cp.edge_ids[k]);
    }

    std::vector<edge_set> ms = enumerate_matchings(g, cap);
    matching_partition part;
    std::vector<char> in_plus(ms.size(), 0);
    for (int i = 0; i < (int)ms.size(); ++i) {
        edge_set on_p = ms[i] & p_edges;
        bool plus;
        if (on_p == end_alt)
            plus = true;
        else if (on_p == internal_alt)
            plus = false;
        else
            fail(errc::internal_invariant_violation, "matching does not alternate on the ear");
        in_plus[i] = plus;
        bool res = is_resonant(g, ms[i], face_id);
        (plus ? (res ? part.plus_r : part.plus_nr) : (res ? part.minus_r : part.minus_nr))
            .push_back(i);
    }

    require(!part.minus_r.empty() && !part.plus_r.empty(), errc::internal_invariant_violation,
            "both resonant cells must be populated at a reducible face");

    // Structure around the face class.
    resonance_graph r = build_resonance(g, cap);
    std::vector<int> fclass;  // edge indexes labelled with this face
    std::vector<int> pair_of(ms.size(), -1);
    for (int e = 0; e < r.edge_count(); ++e) {
        if (r.edges[e].face != face_id) continue;
        fclass.push_back(e);
        int u = r.edges[e].u, v = r.edges[e].v;
        require(pair_of[u] < 0 && pair_of[v] < 0, errc::internal_invariant_violation,
                "face class is not a matching in the resonance graph");
        pair_of[u] = v;
        pair_of[v] = u;
    }
    auto is_minus_r = [&](int v) {
        return std::find(part.minus_r.begin(), part.minus_r.end(), v) != part.minus_r.end();
    };
    auto is_plus_r = [&](int v) {
        return std::find(part.plus_r.begin(), part.plus_r.end(), v) != part.plus_r.end();
    };
    for (int e : fclass) {
        int u = r.edges[e].u, v = r.edges[e].v;
        if (in_plus[u]) std::swap(u, v);
        require(is_minus_r(u) && is_plus_r(v), errc::internal_invariant_violation,
                "face-labelled edge must join the two resonant cells");
    }
    require(fclass.size() == part.minus_r.size() && fclass.size() == part.plus_r.size(),
            errc::internal_invariant_violation, "face class must pair the resonant cells");
    for (int v : part.minus_r) {
        part.plus_of_minus.push_back(pair_of[v]);
        // Pairing preserves adjacency inside the cells.
        for (int w : part.minus_r) {
            bool adj_vw = std::find(r.adj[v].begin(), r.adj[v].end(), w) != r.adj[v].end();
            bool adj_img = std::find(r.adj[pair_of[v]].begin(), r.adj[pair_of[v]].end(),
                                     pair_of[w]) != r.adj[pair_of[v]].end();
            require(adj_vw == adj_img, errc::internal_invariant_violation,
                    "face class pairing does not preserve adjacency");
        }
    }

    // Removing the class leaves exactly the two end-edge sides as components.
    std::vector<int> comp(ms.size(), -1);
    int ncomp = 0;
    for (int s = 0; s < (int)ms.size(); ++s) {
        if (comp[s] >= 0) continue;
        std::queue<int> q;
        comp[s] = ncomp;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int ei : r.incident[v]) {
                if (r.edges[ei].face == face_id) continue;
                int w = r.other_end(ei, v);
                if (comp[w] < 0) {
                    comp[w] = ncomp;
                    q.push(w);
                }
            }
        }
        ++ncomp;
    }
    require(ncomp == 2, errc::internal_invariant_violation,
            "removing the face class must leave two components");
    for (int i = 0; i < (int)ms.size(); ++i)
        for (int j = 0; j < (int)ms.size(); ++j)
            if (in_plus[i] == in_plus[j])
                require(comp[i] == comp[j], errc::internal_invariant_violation,
                        "end-edge side split across components");
    require(in_plus.empty() || comp[part.plus_r.front()] != comp[part.minus_r.front()],
            errc::internal_invariant_violation, "both sides fell into one component");
    return part;
}

namespace {

struct block_finder {
    const std::vector<std::vector<std::pair<int, int>>>& adj;  // (neighbor, edge id)
    std::vector<int> disc, low;
    std::vector<std::pair<int, int>> stack;  // (edge id, child)
    std::vector<std::vector<int>> blocks;    // edge id lists
    int timer = 0;

    explicit block_finder(const std::vector<std::vector<std::pair<int, int>>>& a)
        : adj(a), disc(a.size(), -1), low(a.size(), 0) {}

    void dfs(int v, int parent_edge) {
        disc[v] = low[v] = timer++;
        for (auto [w, e] : adj[v]) {
            if (e == parent_edge) continue;
            if (disc[w] < 0) {
                stack.push_back({e, w});
                dfs(w, e);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= disc[v]) {
                    blocks.push_back({});
                    while (true) {
                        auto [be, bw] = stack.back();
                        stack.pop_back();
                        blocks.back().push_back(be);
                        if (be == e) break;
                    }
                }
            } else if (disc[w] < disc[v]) {
                stack.push_back({e, w});
                low[v] = std::min(low[v], disc[w]);
            }
        }
    }
};

}  // namespace

stripped_components strip_forced_edges(const plane_graph& g, int anchor_edge) {
    require(anchor_edge >= 0 && anchor_edge < g.edge_count(), errc::invalid_input,
            "edge id out of range");
    std::vector<char> alive(g.vertex_count, 1);
    std::vector<int> deg(g.vertex_count);
    for (int v = 0; v < g.vertex_count; ++v) deg[v] = g.degree(v);

    auto kill = [&](int v, std::queue<int>& q) {
        alive[v] = 0;
        for (int w : g.rotations[v])
            if (alive[w] && --deg[w] == 1) q.push(w);
    };
    std::queue<int> pend;
    kill(g.edges[anchor_edge].first, pend);
    kill(g.edges[anchor_edge].second, pend);
    while (!pend.empty()) {
        int x = pend.front();
        pend.pop();
        if (!alive[x]) continue;
        if (deg[x] != 1) continue;
        int y = -1;
        for (int w : g.rotations[x])
            if (alive[w]) y = w;
        require(y >= 0, errc::internal_invariant_violation,
                "isolated vertex: the anchor edge lies in no perfect matching");
        kill(x, pend);
        kill(y, pend);
    }
    for (int v = 0; v < g.vertex_count; ++v)
        require(!alive[v] || deg[v] >= 2, errc::internal_invariant_violation,
                "residue must have minimum degree two");

    stripped_components out;
    // Residual adjacency with edge ids for block decomposition.
    std::vector<std::vector<std::pair<int, int>>> radj(g.vertex_count);
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges[e];
        if (alive[u] && alive[v]) {
            radj[u].push_back({v, e});
            radj[v].push_back({u, e});
        }
    }
    block_finder bf(radj);
    for (int v = 0; v < g.vertex_count; ++v)
        if (alive[v] && bf.disc[v] < 0) bf.dfs(v, -1);

    for (auto& block : bf.blocks) {
        if (block.size() < 2) continue;  // bridge
        std::vector<char> kv(g.vertex_count, 0), ke(g.edge_count(), 0);
        for (int e : block) {
            ke[e] = 1;
            kv[g.edges[e].first] = kv[g.edges[e].second] = 1;
        }
        subgraph_result sub = build_subgraph(g, kv, ke);
        out.blocks.push_back(std::move(sub.graph));
        out.vert_orig.push_back(std::move(sub.vert_to_parent));
        out.edge_orig.push_back(std::move(sub.edge_to_parent));
    }
    // Deterministic order: by smallest original vertex id.
    std::vector<int> order(out.blocks.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return *std::min_element(out.vert_orig[a].begin(), out.vert_orig[a].end()) <
               *std::min_element(out.vert_orig[b].begin(), out.vert_orig[b].end());
    });
    stripped_components sorted;
    for (int i : order) {
        sorted.blocks.push_back(std::move(out.blocks[i]));
        sorted.vert_orig.push_back(std::move(out.vert_orig[i]));
        sorted.edge_orig.push_back(std::move(out.edge_orig[i]));
    }
    return sorted;
}

}  // namespace resg
