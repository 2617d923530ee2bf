#include "resg/comparator.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>

namespace resg {

simple_graph simple_graph::from_resonance(const resonance_graph& r, bool keep_labels) {
    simple_graph g;
    g.n = r.vertex_count();
    g.adj.assign(g.n, {});
    for (const auto& e : r.edges) {
        g.edges.push_back({e.u, e.v});
        g.adj[e.u].push_back(e.v);
        g.adj[e.v].push_back(e.u);
        if (keep_labels) g.edge_labels.push_back(e.face);
    }
    return g;
}

simple_graph simple_graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    simple_graph g;
    g.n = n;
    g.adj.assign(n, {});
    for (auto [u, v] : edges) {
        g.edges.push_back({u, v});
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    return g;
}

bool simple_graph::has_edge(int u, int v) const {
    return std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end();
}

int simple_graph::label_of(int u, int v) const {
    if (edge_labels.empty()) return -1;
    for (size_t i = 0; i < edges.size(); ++i) {
        auto [a, b] = edges[i];
        if ((a == u && b == v) || (a == v && b == u)) return edge_labels[i];
    }
    return -1;
}

simple_digraph simple_digraph::from_resonance(const resonance_digraph& d) {
    simple_digraph g;
    g.n = d.n;
    g.out.assign(d.n, {});
    g.in.assign(d.n, {});
    for (const auto& a : d.arcs) {
        g.arcs.push_back({a.from, a.to});
        g.out[a.from].push_back(a.to);
        g.in[a.to].push_back(a.from);
    }
    return g;
}

simple_digraph simple_digraph::reversed() const {
    simple_digraph g;
    g.n = n;
    g.out.assign(n, {});
    g.in.assign(n, {});
    for (auto [u, v] : arcs) {
        g.arcs.push_back({v, u});
        g.out[v].push_back(u);
        g.in[u].push_back(v);
    }
    return g;
}

bool simple_digraph::has_arc(int u, int v) const {
    return std::find(out[u].begin(), out[u].end(), v) != out[u].end();
}

namespace {

// Iterated neighborhood refinement, run jointly so equal structures receive
// equal colors in both graphs. Neighbor entries carry the edge label and,
// for digraphs, the arc direction.
struct refine_input {
    int n = 0;
    // per vertex: list of (tag, neighbor) where tag encodes label/direction
    std::vector<std::vector<std::pair<int, int>>> nbrs;
};

std::pair<std::vector<int>, std::vector<int>> joint_refine(const refine_input& a,
                                                           const refine_input& b) {
    std::vector<int> ca(a.n, 0), cb(b.n, 0);
    int colors = 1;
    for (int round = 0; round < a.n + b.n + 1; ++round) {
        std::map<std::vector<int>, int> dict;
        auto sig_of = [&](const refine_input& g, const std::vector<int>& col, int v) {
            std::vector<std::pair<int, int>> entries;
            for (auto [tag, w] : g.nbrs[v]) entries.push_back({tag, col[w]});
            std::sort(entries.begin(), entries.end());
            std::vector<int> sig{col[v]};
            for (auto [t, c] : entries) {
                sig.push_back(t);
                sig.push_back(c);
            }
            return sig;
        };
        std::vector<int> na(a.n), nb(b.n);
        for (int v = 0; v < a.n; ++v) {
            auto sig = sig_of(a, ca, v);
            auto it = dict.find(sig);
            na[v] = it == dict.end() ? dict[sig] = (int)dict.size() : it->second;
        }
        for (int v = 0; v < b.n; ++v) {
            auto sig = sig_of(b, cb, v);
            auto it = dict.find(sig);
            nb[v] = it == dict.end() ? dict[sig] = (int)dict.size() : it->second;
        }
        int ncolors = (int)dict.size();
        ca.swap(na);
        cb.swap(nb);
        if (ncolors == colors) break;
        colors = ncolors;
    }
    return {ca, cb};
}

bool same_histogram(const std::vector<int>& ca, const std::vector<int>& cb) {
    std::vector<int> sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    return sa == sb;
}

}  // namespace

iso_verdict graph_iso(const simple_graph& a, const simple_graph& b, long budget) {
    iso_verdict v;
    v.method = "graph_iso";
    require(a.n <= default_iso_vertex_bound && b.n <= default_iso_vertex_bound,
            errc::search_budget_exceeded, "graph too large for isomorphism search");
    if (a.n != b.n || a.edges.size() != b.edges.size()) return v;
    bool labelled = !a.edge_labels.empty() || !b.edge_labels.empty();
    if (labelled && (a.edge_labels.empty() || b.edge_labels.empty())) return v;

    refine_input ra, rb;
    ra.n = a.n;
    rb.n = b.n;
    ra.nbrs.assign(a.n, {});
    rb.nbrs.assign(b.n, {});
    for (size_t i = 0; i < a.edges.size(); ++i) {
        auto [x, y] = a.edges[i];
        int tag = labelled ? a.edge_labels[i] : 0;
        ra.nbrs[x].push_back({tag, y});
        ra.nbrs[y].push_back({tag, x});
    }
    for (size_t i = 0; i < b.edges.size(); ++i) {
        auto [x, y] = b.edges[i];
        int tag = labelled ? b.edge_labels[i] : 0;
        rb.nbrs[x].push_back({tag, y});
        rb.nbrs[y].push_back({tag, x});
    }
    auto [ca, cb] = joint_refine(ra, rb);
    if (!same_histogram(ca, cb)) return v;

    // Static order: rare colors first, then by connectivity to earlier picks.
    std::vector<int> order(a.n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> class_size(a.n + b.n + 1, 0);
    for (int c : ca) class_size[c]++;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        return std::make_pair(class_size[ca[x]], x) < std::make_pair(class_size[ca[y]], y);
    });

    std::vector<int> map_ab(a.n, -1), map_ba(b.n, -1);
    long nodes = budget;
    auto consistent = [&](int x, int w) {
        for (int y = 0; y < a.n; ++y) {
            if (map_ab[y] < 0) continue;
            bool ea = a.has_edge(x, y);
            if (ea != b.has_edge(w, map_ab[y])) return false;
            if (ea && labelled && a.label_of(x, y) != b.label_of(w, map_ab[y])) return false;
        }
        return true;
    };
    std::function<bool(int)> extend = [&](int depth) -> bool {
        if (depth == a.n) return true;
        require(--nodes > 0, errc::search_budget_exceeded, "isomorphism search budget exhausted");
        int x = order[depth];
        for (int w = 0; w < b.n; ++w) {
            if (map_ba[w] >= 0 || cb[w] != ca[x]) continue;
            if (!consistent(x, w)) continue;
            map_ab[x] = w;
            map_ba[w] = x;
            if (extend(depth + 1)) return true;
            map_ab[x] = -1;
            map_ba[w] = -1;
        }
        return false;
    };
    if (!extend(0)) return v;

    // Verify the witness before surfacing it.
    for (auto [x, y] : a.edges) {
        require(b.has_edge(map_ab[x], map_ab[y]), errc::internal_invariant_violation,
                "witness fails to preserve an edge");
        if (labelled)
            require(a.label_of(x, y) == b.label_of(map_ab[x], map_ab[y]),
                    errc::internal_invariant_violation, "witness fails to preserve a label");
    }
    for (auto [x, y] : b.edges)
        require(a.has_edge(map_ba[x], map_ba[y]), errc::internal_invariant_violation,
                "witness image has an extra edge");
    v.isomorphic = true;
    v.witness = map_ab;
    return v;
}

iso_verdict digraph_iso(const simple_digraph& a, const simple_digraph& b, long budget) {
    iso_verdict v;
    v.method = "digraph_iso";
    require(a.n <= default_iso_vertex_bound && b.n <= default_iso_vertex_bound,
            errc::search_budget_exceeded, "digraph too large for isomorphism search");
    if (a.n != b.n || a.arcs.size() != b.arcs.size()) return v;

    refine_input ra, rb;
    ra.n = a.n;
    rb.n = b.n;
    ra.nbrs.assign(a.n, {});
    rb.nbrs.assign(b.n, {});
    for (auto [x, y] : a.arcs) {
        ra.nbrs[x].push_back({1, y});
        ra.nbrs[y].push_back({2, x});
    }
    for (auto [x, y] : b.arcs) {
        rb.nbrs[x].push_back({1, y});
        rb.nbrs[y].push_back({2, x});
    }
    auto [ca, cb] = joint_refine(ra, rb);
    if (!same_histogram(ca, cb)) return v;

    std::vector<int> order(a.n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> class_size(2 * a.n + 1, 0);
    for (int c : ca) class_size[c]++;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        return std::make_pair(class_size[ca[x]], x) < std::make_pair(class_size[ca[y]], y);
    });

    std::vector<int> map_ab(a.n, -1), map_ba(b.n, -1);
    long nodes = budget;
    auto consistent = [&](int x, int w) {
        for (int y = 0; y < a.n; ++y) {
            if (map_ab[y] < 0) continue;
            if (a.has_arc(x, y) != b.has_arc(w, map_ab[y])) return false;
            if (a.has_arc(y, x) != b.has_arc(map_ab[y], w)) return false;
        }
        return true;
    };
    std::function<bool(int)> extend = [&](int depth) -> bool {
        if (depth == a.n) return true;
        require(--nodes > 0, errc::search_budget_exceeded, "isomorphism search budget exhausted");
        int x = order[depth];
        for (int w = 0; w < b.n; ++w) {
            if (map_ba[w] >= 0 || cb[w] != ca[x]) continue;
            if (!consistent(x, w)) continue;
            map_ab[x] = w;
            map_ba[w] = x;
            if (extend(depth + 1)) return true;
            map_ab[x] = -1;
            map_ba[w] = -1;
        }
        return false;
    };
    if (!extend(0)) return v;

    for (auto [x, y] : a.arcs)
        require(b.has_arc(map_ab[x], map_ab[y]), errc::internal_invariant_violation,
                "witness fails to preserve an arc");
    for (auto [x, y] : b.arcs)
        require(a.has_arc(map_ba[x], map_ba[y]), errc::internal_invariant_violation,
                "witness image has an extra arc");
    v.isomorphic = true;
    v.witness = map_ab;
    return v;
}

iso_verdict digraph_iso_modulo_coloring(const resonance_digraph& d1, const resonance_digraph& d2,
                                        long budget) {
    simple_digraph a = simple_digraph::from_resonance(d1);
    simple_digraph b = simple_digraph::from_resonance(d2);
    iso_verdict direct = digraph_iso(a, b, budget);
    if (direct.isomorphic) {
        direct.method = "digraph_iso_modulo_coloring(direct)";
        return direct;
    }
    iso_verdict swapped = digraph_iso(a, b.reversed(), budget);
    swapped.method = swapped.isomorphic ? "digraph_iso_modulo_coloring(color swap)"
                                        : "digraph_iso_modulo_coloring";
    return swapped;
}

bool regularity_signature_t::flag_of(int x, int y, int z) const {
    if (x > z) std::swap(x, z);
    for (const auto& t : triples)
        if (t.x == x && t.y == y && t.z == z) return t.regular;
    fail(errc::invalid_input, "no such adjacent triple");
}

regularity_signature_t regularity_signature(const plane_graph& g) {
    inner_dual_t d = inner_dual(g);
    regularity_signature_t sig;
    for (int yi = 0; yi < d.node_count(); ++yi) {
        const auto& nb = d.adj[yi];
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j) {
                int xi = nb[i], zi = nb[j];
                int x = d.faces[xi], z = d.faces[zi];
                if (x > z) {
                    std::swap(x, z);
                    std::swap(xi, zi);
                }
                adjacent_triple t;
                t.x = x;
                t.y = d.faces[yi];
                t.z = z;
                t.e = d.shared_edge(xi, yi);
                t.f = d.shared_edge(yi, zi);
                t.dist = edge_distance(g, t.e, t.f);
                t.regular = t.dist % 2 == 0;
                sig.triples.push_back(t);
            }
    }
    std::sort(sig.triples.begin(), sig.triples.end(), [](const auto& a, const auto& b) {
        return std::make_tuple(a.y, a.x, a.z) < std::make_tuple(b.y, b.x, b.z);
    });
    return sig;
}

namespace {

std::vector<int> tree_centroids(const inner_dual_t& t) {
    int n = t.node_count();
    if (n == 1) return {0};
    std::vector<int> deg(n), order;
    for (int v = 0; v < n; ++v) deg[v] = (int)t.adj[v].size();
    std::vector<char> removed(n, 0);
    std::queue<int> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) leaves.push(v);
    int remaining = n;
    while (remaining > 2) {
        int layer = (int)leaves.size();
        for (int i = 0; i < layer; ++i) {
            int v = leaves.front();
            leaves.pop();
            removed[v] = 1;
            --remaining;
            for (int w : t.adj[v])
                if (!removed[w] && --deg[w] == 1) leaves.push(w);
        }
    }
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) out.push_back(v);
    return out;
}

// Rooted canonical ids shared between the two trees so equal shapes match.
struct ahu {
    std::map<std::vector<int>, int> dict;

    int canon(const inner_dual_t& t, int v, int parent, std::vector<int>& out) {
        std::vector<int> kids;
        for (int w : t.adj[v])
            if (w != parent) kids.push_back(canon(t, w, v, out));
        std::sort(kids.begin(), kids.end());
        auto it = dict.find(kids);
        int id = it == dict.end() ? dict[kids] = (int)dict.size() : it->second;
        out[v] = id;
        return id;
    }
};

struct tree_matcher {
    const inner_dual_t& t1;
    const inner_dual_t& t2;
    const regularity_signature_t& s1;
    const regularity_signature_t& s2;
    std::vector<int> canon1, canon2;
    std::vector<int> alpha;

    bool match(int v1, int v2, int p1, int p2) {
        if (canon1[v1] != canon2[v2]) return false;
        alpha[v1] = v2;
        std::vector<int> kids1, kids2;
        for (int w : t1.adj[v1])
            if (w != p1) kids1.push_back(w);
        for (int w : t2.adj[v2])
            if (w != p2) kids2.push_back(w);
        if (kids1.size() != kids2.size()) {
            alpha[v1] = -1;
            return false;
        }
        std::vector<char> used(kids2.size(), 0);
        if (assign_children(v1, v2, p1, p2, kids1, kids2, used, 0)) return true;
        alpha[v1] = -1;
        return false;
    }

    bool assign_children(int v1, int v2, int p1, int p2, const std::vector<int>& kids1,
                         const std::vector<int>& kids2, std::vector<char>& used, size_t idx) {
        if (idx == kids1.size()) return true;
        int c1 = kids1[idx];
        for (size_t j = 0; j < kids2.size(); ++j) {
            if (used[j] || canon2[kids2[j]] != canon1[c1]) continue;
            int c2 = kids2[j];
            // Incremental triple checks through the shared center v1/v2.
            bool ok = p1 < 0 || flags_ok_pair(v1, p1, c1, v2, p2, c2);
            for (size_t k = 0; ok && k < idx; ++k) ok = flags_ok_pair(v1, kids1[k], c1, v2, -1, c2);
            if (!ok) continue;
            used[j] = 1;
            if (match(c1, c2, v1, v2) && assign_children(v1, v2, p1, p2, kids1, kids2, used, idx + 1))
                return true;
            unmap_subtree(c1, v1);
            used[j] = 0;
        }
        return false;
    }

    bool flags_ok_pair(int center1, int a1, int b1, int center2, int a2_hint, int b2) {
        int a2 = a2_hint >= 0 ? a2_hint : alpha[a1];
        return s1.flag_of(t1.faces[a1], t1.faces[center1], t1.faces[b1]) ==
               s2.flag_of(t2.faces[a2], t2.faces[center2], t2.faces[b2]);
    }

    void unmap_subtree(int v, int parent) {
        alpha[v] = -1;
        for (int w : t1.adj[v])
            if (w != parent) unmap_subtree(w, v);
    }
};

}  // namespace

iso_verdict fast_iso(const plane_graph& g1, const plane_graph& g2) {
    iso_verdict v;
    v.method = "fast_iso";
    inner_dual_t t1 = inner_dual(g1), t2 = inner_dual(g2);
    if (t1.node_count() != t2.node_count()) return v;
    regularity_signature_t s1 = regularity_signature(g1), s2 = regularity_signature(g2);

    if (t1.node_count() == 1) {
        // Single inner faces: resonance graphs are both K2.
        v.isomorphic = true;
        v.witness = {0};
        return v;
    }

    ahu shared;
    tree_matcher tm{t1, t2, s1, s2, {}, {}, {}};
    tm.canon1.assign(t1.node_count(), -1);
    tm.canon2.assign(t2.node_count(), -1);
    tm.alpha.assign(t1.node_count(), -1);

    std::vector<int> c1s = tree_centroids(t1), c2s = tree_centroids(t2);
    for (int c2 : c2s) {
        std::fill(tm.canon1.begin(), tm.canon1.end(), -1);
        std::fill(tm.canon2.begin(), tm.canon2.end(), -1);
        shared.canon(t1, c1s[0], -1, tm.canon1);
        shared.canon(t2, c2, -1, tm.canon2);
        std::fill(tm.alpha.begin(), tm.alpha.end(), -1);
        if (!tm.match(c1s[0], c2, -1, -1)) continue;

        // Full verification: adjacency and every triple flag.
        const auto& alpha = tm.alpha;
        bool ok = true;
        for (const auto& de : t1.edges) {
            bool adj2 = std::find(t2.adj[alpha[de.a]].begin(), t2.adj[alpha[de.a]].end(),
                                  alpha[de.b]) != t2.adj[alpha[de.a]].end();
            if (!adj2) ok = false;
        }
        for (const auto& tr : s1.triples) {
            int xi = t1.node_of_face(tr.x), yi = t1.node_of_face(tr.y), zi = t1.node_of_face(tr.z);
            if (s2.flag_of(t2.faces[alpha[xi]], t2.faces[alpha[yi]], t2.faces[alpha[zi]]) !=
                tr.regular)
                ok = false;
        }
        require(ok, errc::internal_invariant_violation, "tree witness failed verification");
        v.isomorphic = true;
        v.witness = alpha;
        return v;
    }
    return v;
}

namespace {

// Depth-first search for a pair of aligned decompositions; signature bits are
// collected in strip order.
bool aligned_peel(peeling& p1, peeling& p2, const std::vector<int>& face_alpha,
                  std::vector<std::pair<vertex_color, vertex_color>>& bits) {
    if (p1.cur.inner_face_count() == 1) return true;
    std::vector<int> cands = find_reducible_faces(p1.cur);
    std::sort(cands.begin(), cands.end(),
              [&](int a, int b) { return p1.face_orig[a] < p1.face_orig[b]; });
    for (int f1 : cands) {
        int target_orig = face_alpha[p1.face_orig[f1]];
        int f2 = p2.cur_face_of(target_orig);
        if (f2 < 0) continue;
        if (!is_reducible_face(p2.cur, f2)) continue;
        peeling q1 = p1, q2 = p2;
        rfd_step s1 = q1.peel(f1);
        rfd_step s2 = q2.peel(f2);
        bits.push_back({s1.start_color, s2.start_color});
        if (aligned_peel(q1, q2, face_alpha, bits)) {
            p1 = q1;
            p2 = q2;
            return true;
        }
        bits.pop_back();
    }
    return false;
}

}  // namespace

bool aligned_ear_signatures_compatible(const plane_graph& g1, const plane_graph& g2,
                                       const std::vector<int>& alpha) {
    inner_dual_t t1 = inner_dual(g1), t2 = inner_dual(g2);
    require(alpha.size() == (size_t)t1.node_count(), errc::invalid_input, "alpha size mismatch");
    if (t1.node_count() != t2.node_count()) return false;
    if (t1.node_count() == 1) return true;

    // Face-id translation table through alpha.
    std::vector<int> face_alpha(g1.faces.size(), -1);
    for (int i = 0; i < t1.node_count(); ++i) face_alpha[t1.faces[i]] = t2.faces[alpha[i]];

    peeling p1 = peeling::start(g1), p2 = peeling::start(g2);
    std::vector<std::pair<vertex_color, vertex_color>> bits;
    if (!aligned_peel(p1, p2, face_alpha, bits)) return false;

    bool all_same = true, all_flipped = true;
    for (auto [b1, b2] : bits) {
        if (b1 == b2)
            all_flipped = false;
        else
            all_same = false;
    }
    return all_same || all_flipped;
}

cross_check_report cross_check(const plane_graph& g1, const plane_graph& g2, int cap) {
    cross_check_report rep;
    resonance_graph r1 = build_resonance(g1, cap), r2 = build_resonance(g2, cap);
    resonance_digraph d1 = orient(g1, r1), d2 = orient(g2, r2);

    rep.fast = fast_iso(g1, g2);
    rep.brute = graph_iso(simple_graph::from_resonance(r1), simple_graph::from_resonance(r2));
    rep.brute.method = "graph_iso";
    rep.digraph = digraph_iso_modulo_coloring(d1, d2);

    rep.agree = rep.fast.isomorphic == rep.brute.isomorphic &&
                rep.brute.isomorphic == rep.digraph.isomorphic;
    if (rep.fast.isomorphic && rep.agree) {
        rep.ear_signature_checked = true;
        rep.ear_signature_ok = aligned_ear_signatures_compatible(g1, g2, rep.fast.witness);
    }

    auto yn = [](bool b) { return b ? "isomorphic" : "not isomorphic"; };
    rep.detail = std::string("fast=") + yn(rep.fast.isomorphic) + " brute=" + yn(rep.brute.isomorphic) +
                 " digraph=" + yn(rep.digraph.isomorphic);
    if (!rep.agree)
        fail(errc::disagreement_detected, "isomorphism methods disagree: " + rep.detail);
    if (rep.ear_signature_checked && !rep.ear_signature_ok)
        fail(errc::disagreement_detected,
             "isomorphic pair without matching aligned ear signatures: " + rep.detail);
    return rep;
}

}  // namespace resg
