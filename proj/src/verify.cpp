#include "resg/verify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "resg/decomposition.hpp"
#include "resg/generators.hpp"
#include "resg/theta.hpp"

namespace resg {

namespace {

std::string spec_name(const chain_spec& spec) {
    std::ostringstream os;
    os << "chain[";
    for (size_t i = 0; i < spec.ring_sizes.size(); ++i)
        os << (i ? "," : "") << spec.ring_sizes[i];
    os << "]";
    if (!spec.offsets.empty()) {
        os << "t[";
        for (size_t i = 0; i < spec.offsets.size(); ++i) os << (i ? "," : "") << spec.offsets[i];
        os << "]";
    }
    return os.str();
}

check_result make(const std::string& name, bool pass, const std::string& detail = "") {
    return {name, pass, detail};
}

// ---- individual graph checks ----------------------------------------------

check_result check_embedding(const plane_graph& g) {
    std::vector<int> seen(2 * g.edge_count(), 0);
    int total = 0;
    for (const auto& f : g.faces)
        for (auto [u, v] : f.boundary) {
            ++seen[g.dart_id(u, v)];
            ++total;
        }
    bool ok = total == 2 * g.edge_count();
    for (int c : seen) ok = ok && c == 1;
    ok = ok && (g.vertex_count - g.edge_count() + (int)g.faces.size() == 2);
    for (auto [u, v] : g.edges) ok = ok && g.colors[u] != g.colors[v];
    return make("embedding: dart partition, Euler formula, proper coloring", ok);
}

check_result check_resonance_edges(const plane_graph& g, const resonance_graph& r) {
    bool ok = true;
    for (const auto& e : r.edges) {
        edge_set diff = r.matchings[e.u] ^ r.matchings[e.v];
        ok = ok && diff == g.face_edges[e.face];
        ok = ok && is_resonant(g, r.matchings[e.u], e.face);
    }
    // Completeness: any pair whose difference is a face boundary is an edge.
    int expected = 0;
    for (int i = 0; i < r.vertex_count(); ++i)
        for (int j = i + 1; j < r.vertex_count(); ++j) {
            edge_set diff = r.matchings[i] ^ r.matchings[j];
            for (int f : g.inner_face_ids)
                if (diff == g.face_edges[f]) ++expected;
        }
    ok = ok && expected == r.edge_count();
    return make("resonance: edges are exactly the single-face differences", ok);
}

check_result check_resonance_connected(const resonance_graph& r) {
    if (r.vertex_count() == 0) return make("resonance: connected", false, "no matchings");
    std::vector<char> seen(r.vertex_count(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : r.adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++cnt;
                stack.push_back(w);
            }
    }
    return make("resonance: connected", cnt == r.vertex_count());
}

check_result check_order_structure(const plane_graph& g, const resonance_graph& r) {
    resonance_digraph d = orient(g, r);
    bool ok = digraph_is_acyclic(d);
    auto src = digraph_sources(d), snk = digraph_sinks(d);
    ok = ok && src.size() == 1 && snk.size() == 1;
    auto [m0, m1] = extremal_matchings(g);
    ok = ok && r.matchings[src.front()] == m0 && r.matchings[snk.front()] == m1;
    ok = ok && classify_face_clockwise(g, m0, g.outer_face) == alternation::improper;
    ok = ok && classify_face_clockwise(g, m1, g.outer_face) == alternation::proper;
    for (int v = 0; ok && v < d.n; ++v)
        ok = ok && order_leq(d, src.front(), v) && order_leq(d, v, snk.front());
    // Swapping the coloring must reverse every arc.
    resonance_digraph ds = orient_swapped(g, r);
    resonance_digraph rd = reverse(d);
    ok = ok && ds.arcs.size() == rd.arcs.size();
    for (size_t i = 0; ok && i < ds.arcs.size(); ++i)
        ok = ok && ds.arcs[i].from == rd.arcs[i].from && ds.arcs[i].to == rd.arcs[i].to;
    return make("order: acyclic digraph, unique extremes, swap reverses", ok);
}

check_result check_extremal_cycles(const plane_graph& g, const resonance_graph& r) {
    auto [m0, m1] = extremal_matchings(g);
    bool ok = true;
    for (const auto& f : g.faces) {
        ok = ok && classify_face_clockwise(g, m0, f.id) != alternation::proper;
        ok = ok && classify_face_clockwise(g, m1, f.id) != alternation::improper;
    }
    // Cycles arising as symmetric differences of matchings, one component at
    // a time.
    int n = r.vertex_count();
    for (int i = 0; i < n && ok; ++i)
        for (int j = i + 1; j < n && ok; ++j) {
            edge_set diff = r.matchings[i] ^ r.matchings[j];
            if (diff.none()) continue;
            // Split into cycle components on vertices.
            std::vector<int> comp(g.vertex_count, -1);
            int nc = 0;
            std::vector<std::vector<int>> vedges(g.vertex_count);
            for (int e : diff.bits()) {
                vedges[g.edges[e].first].push_back(e);
                vedges[g.edges[e].second].push_back(e);
            }
            for (int v = 0; v < g.vertex_count; ++v) {
                if (vedges[v].empty() || comp[v] >= 0) continue;
                std::vector<int> stack{v};
                comp[v] = nc;
                while (!stack.empty()) {
                    int x = stack.back();
                    stack.pop_back();
                    for (int e : vedges[x]) {
                        int y = g.edges[e].first == x ? g.edges[e].second : g.edges[e].first;
                        if (comp[y] < 0) {
                            comp[y] = nc;
                            stack.push_back(y);
                        }
                    }
                }
                ++nc;
            }
            for (int c = 0; c < nc && ok; ++c) {
                edge_set cyc = g.empty_edge_set();
                for (int e : diff.bits())
                    if (comp[g.edges[e].first] == c) cyc.set(e);
                if (cyc.none()) continue;
                ok = ok && classify_cycle_clockwise(g, m0, cyc) != alternation::proper;
                ok = ok && classify_cycle_clockwise(g, m1, cyc) != alternation::improper;
            }
        }
    return make("order: minimum admits no clockwise-proper cycle, maximum no improper", ok);
}

check_result check_theta_structure(const plane_graph& g, const resonance_graph& r) {
    bool ok = true;
    std::string detail;
    try {
        theta_classes_t tc = theta_classes(r);
        // Partition with constant labels is validated inside; check the
        // label map is a bijection onto inner faces.
        std::vector<int> faces = tc.class_face;
        std::sort(faces.begin(), faces.end());
        ok = faces == g.inner_face_ids;
        theta_graph_t tg = theta_graph(r, tc);
        inner_dual_t dual = inner_dual(g);
        // Face-label map must be a graph isomorphism onto the inner dual.
        for (const auto& [a, b] : tg.edges) {
            int na = dual.node_of_face(tg.face_of_node[a]);
            int nb = dual.node_of_face(tg.face_of_node[b]);
            bool adj = std::find(dual.adj[na].begin(), dual.adj[na].end(), nb) != dual.adj[na].end();
            ok = ok && adj;
        }
        ok = ok && tg.edges.size() == dual.edges.size();
        ok = ok && tc.class_count() == (int)g.inner_face_ids.size();
    } catch (const graph_error& e) {
        ok = false;
        detail = e.what();
    }
    return make("theta: classes partition with constant labels, tree matches inner dual", ok,
                detail);
}

check_result check_median(const resonance_graph& r, int max_matchings) {
    if (r.vertex_count() > max_matchings)
        return make("median: unique for every vertex triple", true, "skipped (size)");
    distance_table dt = all_pairs_distances(r);
    int n = r.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (medians(r, dt, a, b, c).size() != 1)
                    return make("median: unique for every vertex triple", false,
                                "triple " + std::to_string(a) + "," + std::to_string(b) + "," +
                                    std::to_string(c));
    return make("median: unique for every vertex triple", true);
}

check_result check_rfd_shape(const plane_graph& g, const rfd_t& d) {
    bool ok = d.step_count() == g.inner_face_count();
    std::vector<int> faces;
    for (const auto& st : d.steps) faces.push_back(st.face);
    std::sort(faces.begin(), faces.end());
    ok = ok && faces == g.inner_face_ids;
    ok = ok && d.steps[0].ear_edges.empty();
    // First snapshot is the bare boundary of the first face.
    ok = ok && d.snapshots[0].inner_face_count() == 1 &&
         d.snapshots[0].edge_count() == d.snapshots[0].vertex_count;
    for (int i = 1; i < d.step_count(); ++i) {
        int l = (int)d.steps[i].ear_edges.size();
        ok = ok && l >= 3 && l % 2 == 1;
        ok = ok && (int)d.steps[i].ear_vertices.size() == l + 1;
        ok = ok && d.steps[i].anchor_edge >= 0;
        // Odd ear: endpoint colors differ.
        ok = ok && d.steps[i].start_color != d.steps[i].end_color;
    }
    return make("decomposition: ears odd of length three or more, faces consumed once", ok);
}

check_result check_rebuild(const plane_graph& g, const resonance_graph& r, const rfd_t& d) {
    bool ok = true;
    std::string detail;
    try {
        resonance_graph rb = rebuild_resonance(g, d);
        iso_verdict v = graph_iso(simple_graph::from_resonance(rb, true),
                                  simple_graph::from_resonance(r, true));
        ok = v.isomorphic;
    } catch (const graph_error& e) {
        ok = false;
        detail = e.what();
    }
    return make("decomposition: expansion rebuild matches direct construction with labels", ok,
                detail);
}

check_result check_expansion_condition(const plane_graph& g, const rfd_t& d, int cap) {
    // At every step the end-edge-containing matchings are exactly the
    // resonant ones: the expansion precondition.
    bool ok = true;
    std::string detail;
    try {
        for (int i = 1; i < d.step_count() && ok; ++i) {
            const plane_graph& gi = d.snapshots[i];
            int face_snap = d.face_in_snapshot(i, d.steps[i].face);
            matching_partition part = partition_matchings(gi, face_snap, cap);
            ok = ok && part.plus_nr.empty();
        }
    } catch (const graph_error& e) {
        ok = false;
        detail = e.what();
    }
    (void)g;
    return make("decomposition: every end-edge matching is resonant at its step", ok, detail);
}

// The extremal lifting at one reducible face.
bool lemma_holds_at(const plane_graph& g, int s, std::string& why) {
    auto cp = common_periphery(g, s);
    edge_set internal_alt = g.empty_edge_set(), end_alt = g.empty_edge_set();
    for (size_t k = 0; k < cp.edge_ids.size(); ++k)
        (k % 2 == 0 ? end_alt : internal_alt).set(cp.edge_ids[k]);
    int anchor = -1;
    for (int e : g.face_edges[s].bits()) {
        bool on_ear = std::find(cp.edge_ids.begin(), cp.edge_ids.end(), e) != cp.edge_ids.end();
        if (!on_ear) anchor = e;
    }
    if (anchor < 0) {
        why = "no anchor edge";
        return false;
    }

    std::vector<char> kv(g.vertex_count, 1), ke(g.edge_count(), 1);
    for (size_t i = 1; i + 1 < cp.vertices.size(); ++i) kv[cp.vertices[i]] = 0;
    for (int e : cp.edge_ids) ke[e] = 0;
    subgraph_result sub = build_subgraph(g, kv, ke);

    auto [h0, h1] = extremal_matchings(sub.graph);
    auto to_parent = [&](const edge_set& m) {
        edge_set out = g.empty_edge_set();
        for (int e : m.bits()) out.set(sub.edge_to_parent[e]);
        return out;
    };
    edge_set h0g = to_parent(h0), h1g = to_parent(h1);
    bool in0 = h0g.test(anchor), in1 = h1g.test(anchor);
    if (in0 == in1) {
        why = "anchor edge must lie in exactly one extremal matching of the reduced graph";
        return false;
    }

    auto [g0, g1] = extremal_matchings(g);
    auto lift_keep = [&](const edge_set& m) { return m | internal_alt; };
    auto lift_swap = [&](edge_set m) {
        m.reset(anchor);
        return m | end_alt;
    };
    edge_set lift0 = in0 ? lift_swap(h0g) : lift_keep(h0g);
    edge_set lift1 = in1 ? lift_swap(h1g) : lift_keep(h1g);
    if (lift0 != g0 || lift1 != g1) {
        why = "lifted extremal matchings must be the extremes of the whole graph";
        return false;
    }
    // Cell membership: the swap lift is end-edge-containing and resonant, the
    // keep lift avoids the end edges and is not resonant.
    auto plus_side = [&](const edge_set& m) { return m.contains_all(end_alt); };
    edge_set swap_lift = in0 ? lift0 : lift1;
    edge_set keep_lift = in0 ? lift1 : lift0;
    if (!(plus_side(swap_lift) && is_resonant(g, swap_lift, s))) {
        why = "swap lift must land in the resonant end-edge cell";
        return false;
    }
    if (plus_side(keep_lift) || is_resonant(g, keep_lift, s)) {
        why = "keep lift must land in the non-resonant far cell";
        return false;
    }
    return true;
}

check_result check_lemma(const plane_graph& g, int cap) {
    if (g.inner_face_count() < 2)
        return make("extremal lifting at reducible faces", true, "single face");
    bool ok = true;
    std::string detail;
    try {
        resonance_graph r = build_resonance(g, cap);
        for (int s : find_reducible_faces(g)) {
            std::string why;
            if (!lemma_holds_at(g, s, why)) {
                ok = false;
                detail = "face " + std::to_string(s) + ": " + why;
                break;
            }
            matching_partition part = partition_matchings(g, s, cap);
            // Outerplane expansion condition: every end-edge matching is
            // resonant, at every reducible face.
            if (!part.plus_nr.empty()) {
                ok = false;
                detail = "face " + std::to_string(s) + ": non-resonant end-edge matching";
                break;
            }
            // The far side is the resonance graph of the reduced graph.
            auto cp = common_periphery(g, s);
            std::vector<char> kv(g.vertex_count, 1), ke(g.edge_count(), 1);
            for (size_t i = 1; i + 1 < cp.vertices.size(); ++i) kv[cp.vertices[i]] = 0;
            for (int e : cp.edge_ids) ke[e] = 0;
            subgraph_result sub = build_subgraph(g, kv, ke);
            resonance_graph rh = build_resonance(sub.graph, cap);
            std::vector<int> minus = part.minus_r;
            minus.insert(minus.end(), part.minus_nr.begin(), part.minus_nr.end());
            std::sort(minus.begin(), minus.end());
            std::vector<std::pair<int, int>> induced;
            for (size_t a = 0; a < minus.size(); ++a)
                for (size_t b = a + 1; b < minus.size(); ++b)
                    if (std::find(r.adj[minus[a]].begin(), r.adj[minus[a]].end(), minus[b]) !=
                        r.adj[minus[a]].end())
                        induced.push_back({(int)a, (int)b});
            if (!graph_iso(simple_graph::from_resonance(rh),
                           simple_graph::from_edges((int)minus.size(), induced))
                     .isomorphic) {
                ok = false;
                detail = "face " + std::to_string(s) + ": far side differs from the reduced graph";
                break;
            }
        }
    } catch (const graph_error& e) {
        ok = false;
        detail = e.what();
    }
    return make("extremal lifting at reducible faces", ok, detail);
}

check_result check_strip_product(const plane_graph& g, const resonance_graph& r, int cap) {
    bool ok = true;
    std::string detail;
    try {
        for (int e = 0; e < g.edge_count() && ok; ++e) {
            stripped_components sc = strip_forced_edges(g, e);
            // Induced subgraph of R on the matchings through e.
            std::vector<int> keep;
            for (int i = 0; i < r.vertex_count(); ++i)
                if (r.matchings[i].test(e)) keep.push_back(i);
            simple_graph induced;
            induced.n = (int)keep.size();
            induced.adj.assign(induced.n, {});
            for (int a = 0; a < induced.n; ++a)
                for (int b = a + 1; b < induced.n; ++b)
                    if (std::find(r.adj[keep[a]].begin(), r.adj[keep[a]].end(), keep[b]) !=
                        r.adj[keep[a]].end()) {
                        induced.edges.push_back({a, b});
                        induced.adj[a].push_back(b);
                        induced.adj[b].push_back(a);
                    }
            resonance_graph prod;
            prod.matchings = {edge_set()};
            prod.adj.assign(1, {});
            prod.incident.assign(1, {});
            for (const auto& block : sc.blocks)
                prod = cartesian_product(prod, build_resonance(block, cap));
            ok = graph_iso(simple_graph::from_resonance(prod),
                           simple_graph::from_edges(induced.n, induced.edges))
                     .isomorphic;
            if (!ok) detail = "edge " + std::to_string(e);
        }
    } catch (const graph_error& e2) {
        ok = false;
        detail = e2.what();
    }
    return make("strip: matchings through an edge form the block product", ok, detail);
}

check_result check_mirror_regularity(const plane_graph& g) {
    plane_graph m = mirror_embedding(g);
    regularity_signature_t sg = regularity_signature(g), sm = regularity_signature(m);
    // Faces correspond through their vertex sets; vertex ids are unchanged.
    auto face_key = [](const plane_graph& gr, int f) {
        std::vector<int> vs;
        for (auto [u, v] : gr.faces[f].boundary) vs.push_back(u);
        std::sort(vs.begin(), vs.end());
        return vs;
    };
    std::vector<std::vector<int>> mirror_keys;
    std::vector<int> mirror_ids;
    for (int f : m.inner_face_ids) {
        mirror_keys.push_back(face_key(m, f));
        mirror_ids.push_back(f);
    }
    auto translate = [&](int f) {
        auto key = face_key(g, f);
        for (size_t i = 0; i < mirror_keys.size(); ++i)
            if (mirror_keys[i] == key) return mirror_ids[i];
        return -1;
    };
    bool ok = sg.triples.size() == sm.triples.size();
    for (const auto& t : sg.triples) {
        if (!ok) break;
        int x = translate(t.x), y = translate(t.y), z = translate(t.z);
        ok = x >= 0 && y >= 0 && z >= 0 && sm.flag_of(x, y, z) == t.regular;
    }
    ok = ok && fast_iso(g, m).isomorphic;
    return make("regularity: invariant under the mirror embedding", ok);
}

}  // namespace

std::vector<corpus_entry> chain_corpus(int max_hexagons, int max_rings,
                                       const std::vector<int>& ring_sizes) {
    std::vector<corpus_entry> out;
    for (int n = 1; n <= max_hexagons; ++n)
        for (const auto& spec : all_hexagonal_chains(n))
            out.push_back({"hex" + std::to_string(n) + ":" + spec_name(spec), even_ring_chain(spec)});
    for (int rings = 1; rings <= max_rings; ++rings)
        for (const auto& spec : all_even_ring_chains(rings, ring_sizes)) {
            // Skip the pure hexagon chains already present.
            bool all_hex = std::all_of(spec.ring_sizes.begin(), spec.ring_sizes.end(),
                                       [](int k) { return k == 6; });
            bool hex_turns = std::all_of(spec.offsets.begin(), spec.offsets.end(),
                                         [](int o) { return o >= 2 && o <= 4; });
            if (all_hex && hex_turns && rings <= max_hexagons) continue;
            out.push_back({spec_name(spec), even_ring_chain(spec)});
        }
    return out;
}

std::vector<corpus_entry> extended_corpus(int max_hexagons, int max_rings,
                                          const std::vector<int>& ring_sizes, int max_family) {
    std::vector<corpus_entry> out = chain_corpus(max_hexagons, max_rings, ring_sizes);
    for (int n = max_hexagons + 1; n <= max_family; ++n) {
        out.push_back({"linear" + std::to_string(n), linear_chain(n)});
        out.push_back({"fibonaccene" + std::to_string(n), fibonaccene(n)});
    }
    out.push_back({"random5a", random_chain(5, {4, 6, 8}, 7)});
    out.push_back({"random5b", random_chain(5, {4, 6, 8}, 20260811)});
    return out;
}

std::vector<check_result> run_graph_checks(const plane_graph& g, const verify_options& opts) {
    std::vector<check_result> out;
    resonance_graph r = build_resonance(g, opts.cap);
    out.push_back(check_embedding(g));
    out.push_back(check_resonance_edges(g, r));
    out.push_back(check_resonance_connected(r));
    out.push_back(check_order_structure(g, r));
    out.push_back(check_extremal_cycles(g, r));
    out.push_back(check_theta_structure(g, r));
    out.push_back(check_median(r, opts.median_max_matchings));
    rfd_t d = rfd(g);
    out.push_back(check_rfd_shape(g, d));
    out.push_back(check_rebuild(g, r, d));
    out.push_back(check_expansion_condition(g, d, opts.cap));
    out.push_back(check_lemma(g, opts.cap));
    if (opts.strip_product_check) out.push_back(check_strip_product(g, r, opts.cap));
    out.push_back(check_mirror_regularity(g));
    return out;
}

check_result run_pair_agreement(const std::vector<corpus_entry>& corpus, int cap) {
    long pairs = 0;
    for (const auto& a : corpus)
        for (const auto& b : corpus) {
            ++pairs;
            try {
                cross_check(a.graph, b.graph, cap);
            } catch (const graph_error& e) {
                return make("three-way agreement over all ordered pairs", false,
                            a.name + " vs " + b.name + ": " + e.what());
            }
        }
    return make("three-way agreement over all ordered pairs", true,
                std::to_string(pairs) + " ordered pairs");
}

check_result run_enumeration_oracle(const std::vector<corpus_entry>& corpus, int max_edges) {
    int graphs = 0;
    for (const auto& entry : corpus) {
        const plane_graph& g = entry.graph;
        if (g.edge_count() > max_edges) continue;
        ++graphs;
        std::vector<edge_set> fast = enumerate_matchings(g);
        // Independent subset filter over all 2^|E| edge subsets.
        std::vector<edge_set> slow;
        int m = g.edge_count();
        for (uint64_t mask = 0; mask < (uint64_t(1) << m); ++mask) {
            std::vector<int> deg(g.vertex_count, 0);
            bool ok = true;
            for (int e = 0; e < m && ok; ++e)
                if ((mask >> e) & 1) {
                    if (++deg[g.edges[e].first] > 1 || ++deg[g.edges[e].second] > 1) ok = false;
                }
            if (!ok) continue;
            for (int v = 0; v < g.vertex_count; ++v)
                if (deg[v] != 1) ok = false;
            if (!ok) continue;
            edge_set s = g.empty_edge_set();
            for (int e = 0; e < m; ++e)
                if ((mask >> e) & 1) s.set(e);
            slow.push_back(s);
        }
        if (fast.size() != slow.size())
            return make("enumeration equals the subset-filter oracle", false, entry.name);
        for (const edge_set& s : slow)
            if (std::find(fast.begin(), fast.end(), s) == fast.end())
                return make("enumeration equals the subset-filter oracle", false, entry.name);
    }
    return make("enumeration equals the subset-filter oracle", true,
                std::to_string(graphs) + " graphs");
}

check_result run_family_counts(int max_n) {
    std::vector<long> fib = {2, 3};
    for (int n = 3; n <= max_n; ++n) fib.push_back(fib[n - 2] + fib[n - 3]);
    for (int n = 1; n <= max_n; ++n) {
        if ((long)enumerate_matchings(linear_chain(n)).size() != n + 1)
            return make("family counts: linear n+1, fibonaccene Fibonacci", false,
                        "linear " + std::to_string(n));
        if ((long)enumerate_matchings(fibonaccene(n)).size() != fib[n - 1])
            return make("family counts: linear n+1, fibonaccene Fibonacci", false,
                        "fibonaccene " + std::to_string(n));
    }
    return make("family counts: linear n+1, fibonaccene Fibonacci", true,
                "n up to " + std::to_string(max_n));
}

}  // namespace resg
