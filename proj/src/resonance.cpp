#include "resg/resonance.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>

namespace resg {

namespace {

void finish_resonance(resonance_graph& r) {
    r.adj.assign(r.vertex_count(), {});
    r.incident.assign(r.vertex_count(), {});
    for (int i = 0; i < r.edge_count(); ++i) {
        const auto& e = r.edges[i];
        r.adj[e.u].push_back(e.v);
        r.adj[e.v].push_back(e.u);
        r.incident[e.u].push_back(i);
        r.incident[e.v].push_back(i);
    }
}

}  // namespace

resonance_graph build_resonance(const plane_graph& g, int cap) {
    resonance_graph r;
    r.graph_id = g.graph_id;
    r.matchings = enumerate_matchings(g, cap);

    std::unordered_map<edge_set, int, edge_set_hash> face_of;
    for (int fid : g.inner_face_ids) {
        auto [it, fresh] = face_of.insert({g.face_edges[fid], fid});
        require(fresh, errc::internal_invariant_violation, "two inner faces with equal edge sets");
    }

    int n = r.vertex_count();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            edge_set diff = r.matchings[i] ^ r.matchings[j];
            auto it = face_of.find(diff);
            if (it != face_of.end()) r.edges.push_back({i, j, it->second});
        }
    finish_resonance(r);
    return r;
}

namespace {

resonance_digraph orient_impl(const plane_graph& g, const resonance_graph& r, bool swap_colors) {
    require(g.graph_id == r.graph_id, errc::invalid_input, "resonance graph built from another graph");
    resonance_digraph d;
    d.graph_id = r.graph_id;
    d.n = r.vertex_count();
    d.out.assign(d.n, {});
    d.in.assign(d.n, {});
    for (const auto& e : r.edges) {
        alternation cls = classify_cycle(g, r.matchings[e.u], g.faces[e.face].boundary);
        if (swap_colors) {
            if (cls == alternation::proper)
                cls = alternation::improper;
            else if (cls == alternation::improper)
                cls = alternation::proper;
        }
        require(cls != alternation::not_alternating, errc::internal_invariant_violation,
                "face-labelled resonance edge must alternate");
        // The twin matching necessarily gets the opposite class.
        int from = cls == alternation::proper ? e.u : e.v;
        int to = cls == alternation::proper ? e.v : e.u;
        d.arcs.push_back({from, to, e.face});
        d.out[from].push_back(to);
        d.in[to].push_back(from);
    }
    return d;
}

}  // namespace

resonance_digraph orient(const plane_graph& g, const resonance_graph& r) {
    return orient_impl(g, r, false);
}

resonance_digraph orient_swapped(const plane_graph& g, const resonance_graph& r) {
    return orient_impl(g, r, true);
}

bool digraph_is_acyclic(const resonance_digraph& d) {
    std::vector<int> indeg(d.n, 0);
    for (const auto& a : d.arcs) indeg[a.to]++;
    std::queue<int> q;
    for (int v = 0; v < d.n; ++v)
        if (indeg[v] == 0) q.push(v);
    int done = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        ++done;
        for (int w : d.out[v])
            if (--indeg[w] == 0) q.push(w);
    }
    return done == d.n;
}

bool order_leq(const resonance_digraph& d, int a, int b) {
    require(a >= 0 && a < d.n && b >= 0 && b < d.n, errc::invalid_input, "matching id out of range");
    require(digraph_is_acyclic(d), errc::cyclic_digraph, "resonance digraph has a directed cycle");
    if (a == b) return true;
    std::vector<char> seen(d.n, 0);
    std::queue<int> q;
    q.push(a);
    seen[a] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : d.out[v]) {
            if (w == b) return true;
            if (!seen[w]) {
                seen[w] = 1;
                q.push(w);
            }
        }
    }
    return false;
}

std::vector<int> digraph_sources(const resonance_digraph& d) {
    std::vector<int> out;
    for (int v = 0; v < d.n; ++v)
        if (d.in[v].empty()) out.push_back(v);
    return out;
}

std::vector<int> digraph_sinks(const resonance_digraph& d) {
    std::vector<int> out;
    for (int v = 0; v < d.n; ++v)
        if (d.out[v].empty()) out.push_back(v);
    return out;
}

resonance_graph cartesian_product(const resonance_graph& r1, const resonance_graph& r2) {
    resonance_graph p;
    int n1 = r1.vertex_count(), n2 = r2.vertex_count();
    p.matchings.assign((size_t)n1 * n2, edge_set());
    for (const auto& e : r1.edges)
        for (int j = 0; j < n2; ++j) p.edges.push_back({e.u * n2 + j, e.v * n2 + j, e.face});
    for (int i = 0; i < n1; ++i)
        for (const auto& e : r2.edges) p.edges.push_back({i * n2 + e.u, i * n2 + e.v, e.face});
    std::sort(p.edges.begin(), p.edges.end(), [](const auto& a, const auto& b) {
        return std::make_pair(a.u, a.v) < std::make_pair(b.u, b.v);
    });
    finish_resonance(p);
    return p;
}

resonance_digraph reverse(const resonance_digraph& d) {
    resonance_digraph r;
    r.graph_id = d.graph_id;
    r.n = d.n;
    r.out.assign(d.n, {});
    r.in.assign(d.n, {});
    for (const auto& a : d.arcs) {
        r.arcs.push_back({a.to, a.from, a.face});
        r.out[a.to].push_back(a.from);
        r.in[a.from].push_back(a.to);
    }
    return r;
}

}  // namespace resg
