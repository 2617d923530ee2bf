#include "resg/json_io.hpp"

#include <sstream>

#include "resg/verify.hpp"

namespace resg {

plane_graph graph_from_json(const nlohmann::json& doc) {
    require(doc.is_object(), errc::invalid_input, "document must be an object");
    for (auto it = doc.begin(); it != doc.end(); ++it)
        require(it.key() == "vertices" || it.key() == "rotations" || it.key() == "outer",
                errc::invalid_input, "unknown key '" + it.key() + "'");
    require(doc.contains("vertices") && doc.contains("rotations") && doc.contains("outer"),
            errc::invalid_input, "need keys vertices, rotations, outer");
    require(doc["vertices"].is_number_integer(), errc::invalid_input, "vertices must be an integer");
    int n = doc["vertices"].get<int>();
    require(n >= 1, errc::invalid_input, "vertices must be positive");
    require(doc["rotations"].is_array() && (int)doc["rotations"].size() == n, errc::invalid_input,
            "rotations must list one neighbor ring per vertex");
    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < n; ++v) {
        require(doc["rotations"][v].is_array(), errc::invalid_input, "rotation must be an array");
        for (const auto& w : doc["rotations"][v]) {
            require(w.is_number_integer(), errc::invalid_input, "neighbor ids must be integers");
            rot[v].push_back(w.get<int>());
        }
    }
    require(doc["outer"].is_array() && doc["outer"].size() == 2, errc::invalid_input,
            "outer must be a directed edge [u, v]");
    int u = doc["outer"][0].get<int>(), w = doc["outer"][1].get<int>();
    return build(rot, {u, w});
}

plane_graph graph_from_json_text(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
    require(!doc.is_discarded(), errc::invalid_input, "malformed JSON");
    return graph_from_json(doc);
}

ordered_json graph_to_json(const plane_graph& g) {
    ordered_json doc;
    doc["vertices"] = g.vertex_count;
    doc["rotations"] = g.rotations;
    auto hint = g.outer().boundary.front();
    doc["outer"] = {hint.first, hint.second};
    return doc;
}

ordered_json resonance_to_json(const resonance_graph& r) {
    ordered_json doc;
    doc["matchings"] = ordered_json::array();
    for (const edge_set& m : r.matchings) doc["matchings"].push_back(m.bits());
    doc["edges"] = ordered_json::array();
    for (const auto& e : r.edges)
        doc["edges"].push_back({{"u", e.u}, {"v", e.v}, {"face", e.face}});
    return doc;
}

ordered_json digraph_to_json(const resonance_digraph& d) {
    ordered_json doc;
    doc["vertices"] = d.n;
    doc["arcs"] = ordered_json::array();
    for (const auto& a : d.arcs)
        doc["arcs"].push_back({{"from", a.from}, {"to", a.to}, {"face", a.face}});
    return doc;
}

ordered_json theta_to_json(const theta_classes_t& tc, const theta_graph_t& tg) {
    ordered_json doc;
    doc["classes"] = ordered_json::array();
    for (int c = 0; c < tc.class_count(); ++c)
        doc["classes"].push_back(
            {{"face", tc.class_face[c]}, {"edges", tc.class_edges[c]}});
    doc["tree_edges"] = ordered_json::array();
    for (auto [a, b] : tg.edges) doc["tree_edges"].push_back({a, b});
    return doc;
}

ordered_json inner_dual_to_json(const inner_dual_t& d) {
    ordered_json doc;
    doc["faces"] = d.faces;
    doc["edges"] = ordered_json::array();
    for (const auto& e : d.edges)
        doc["edges"].push_back({{"a", d.faces[e.a]},
                                {"b", d.faces[e.b]},
                                {"shared_edge", e.shared_edges.front()}});
    return doc;
}

ordered_json rfd_to_json(const rfd_t& d) {
    ordered_json steps = ordered_json::array();
    for (const auto& st : d.steps) {
        ordered_json s;
        s["face"] = st.face;
        s["ear_vertices"] = st.ear_vertices;
        s["ear_edges"] = st.ear_edges;
        if (st.anchor_edge >= 0) {
            s["anchor_edge"] = st.anchor_edge;
            s["start_color"] = st.start_color == vertex_color::white ? "white" : "black";
            s["end_color"] = st.end_color == vertex_color::white ? "white" : "black";
        }
        steps.push_back(s);
    }
    ordered_json doc;
    doc["steps"] = steps;
    return doc;
}

ordered_json regularity_to_json(const regularity_signature_t& sig) {
    ordered_json arr = ordered_json::array();
    for (const auto& t : sig.triples)
        arr.push_back({{"faces", {t.x, t.y, t.z}},
                       {"shared_edges", {t.e, t.f}},
                       {"distance", t.dist},
                       {"regular", t.regular}});
    return arr;
}

std::string resonance_to_dot(const resonance_graph& r) {
    std::ostringstream os;
    os << "graph resonance {\n";
    for (int v = 0; v < r.vertex_count(); ++v) os << "  " << v << " [label=\"M" << v << "\"];\n";
    for (const auto& e : r.edges)
        os << "  " << e.u << " -- " << e.v << " [label=\"f" << e.face << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string digraph_to_dot(const resonance_digraph& d) {
    std::ostringstream os;
    os << "digraph resonance {\n";
    for (int v = 0; v < d.n; ++v) os << "  " << v << " [label=\"M" << v << "\"];\n";
    for (const auto& a : d.arcs)
        os << "  " << a.from << " -> " << a.to << " [label=\"f" << a.face << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string theta_to_dot(const theta_graph_t& tg) {
    std::ostringstream os;
    os << "graph theta_classes {\n";
    for (size_t c = 0; c < tg.face_of_node.size(); ++c)
        os << "  " << c << " [label=\"f" << tg.face_of_node[c] << "\"];\n";
    for (auto [a, b] : tg.edges) os << "  " << a << " -- " << b << ";\n";
    os << "}\n";
    return os.str();
}

std::string inner_dual_to_dot(const inner_dual_t& d) {
    std::ostringstream os;
    os << "graph inner_dual {\n";
    for (size_t i = 0; i < d.faces.size(); ++i)
        os << "  " << i << " [label=\"f" << d.faces[i] << "\"];\n";
    for (const auto& e : d.edges)
        os << "  " << e.a << " -- " << e.b << " [label=\"e" << e.shared_edges.front() << "\"];\n";
    os << "}\n";
    return os.str();
}

ordered_json analysis_report(const plane_graph& g, int cap) {
    ordered_json doc;
    resonance_graph r = build_resonance(g, cap);

    doc["counts"] = {{"vertices", g.vertex_count},
                     {"edges", g.edge_count()},
                     {"faces", (int)g.faces.size()},
                     {"inner_faces", g.inner_face_count()},
                     {"matchings", r.vertex_count()}};

    auto [m0, m1] = extremal_matchings(g);
    int id0 = -1, id1 = -1;
    for (int i = 0; i < r.vertex_count(); ++i) {
        if (r.matchings[i] == m0) id0 = i;
        if (r.matchings[i] == m1) id1 = i;
    }
    doc["extremal"] = {{"minimum", id0}, {"maximum", id1}};

    theta_classes_t tc = theta_classes(r);
    theta_graph_t tg = theta_graph(r, tc);
    ordered_json classes = ordered_json::array();
    for (int c = 0; c < tc.class_count(); ++c)
        classes.push_back({{"class", c},
                           {"face", tc.class_face[c]},
                           {"size", (int)tc.class_edges[c].size()}});
    doc["theta_classes"] = classes;
    doc["inner_dual"] = inner_dual_to_json(inner_dual(g));
    doc["regularity"] = regularity_to_json(regularity_signature(g));
    doc["rfd"] = rfd_to_json(rfd(g));

    verify_options opts;
    opts.cap = cap;
    ordered_json checks = ordered_json::array();
    for (const check_result& c : run_graph_checks(g, opts)) {
        ordered_json entry = {{"name", c.name}, {"pass", c.pass}};
        if (!c.detail.empty()) entry["detail"] = c.detail;
        checks.push_back(entry);
    }
    doc["checks"] = checks;
    return doc;
}

}  // namespace resg
