#include "resg/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "resg/generators.hpp"
#include "resg/json_io.hpp"
#include "resg/verify.hpp"

namespace resg {

namespace {

plane_graph load_graph(const std::string& path) {
    std::stringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        require(in.good(), errc::invalid_input, "cannot open " + path);
        buf << in.rdbuf();
    }
    return graph_from_json_text(buf.str());
}

void emit(std::ostream& out, const ordered_json& doc) { out << doc.dump(2) << "\n"; }

int do_generate(const std::string& family, int n, std::vector<int> sizes, std::vector<int> offsets,
                int rings, std::vector<int> pool, uint64_t seed, std::ostream& out) {
    plane_graph g = [&] {
        if (family == "linear") return linear_chain(n);
        if (family == "fibonaccene") return fibonaccene(n);
        if (family == "chain") return even_ring_chain({sizes, offsets});
        return random_chain(rings, pool, seed);
    }();
    emit(out, graph_to_json(g));
    return 0;
}

int do_analyze(const std::string& path, int cap, std::ostream& out) {
    plane_graph g = load_graph(path);
    ordered_json doc = analysis_report(g, cap);
    emit(out, doc);
    for (const auto& c : doc["checks"])
        if (!c["pass"].get<bool>()) return 2;
    return 0;
}

int do_compare(const std::string& a, const std::string& b, int cap, std::ostream& out) {
    plane_graph g1 = load_graph(a), g2 = load_graph(b);
    ordered_json doc;
    try {
        cross_check_report rep = cross_check(g1, g2, cap);
        doc["answer"] = rep.brute.isomorphic ? "isomorphic" : "not_isomorphic";
        doc["methods"] = {{"fast", rep.fast.isomorphic},
                          {"graph", rep.brute.isomorphic},
                          {"digraph", rep.digraph.isomorphic}};
        if (rep.ear_signature_checked) doc["ear_signatures_compatible"] = rep.ear_signature_ok;
        if (rep.brute.isomorphic) {
            doc["witness"] = {{"resonance_vertices", rep.brute.witness},
                              {"inner_dual_nodes", rep.fast.witness}};
        }
        emit(out, doc);
        return 0;
    } catch (const graph_error& e) {
        if (e.code() != errc::disagreement_detected) throw;
        doc["answer"] = "disagreement";
        doc["error"] = e.what();
        emit(out, doc);
        return 2;
    }
}

int do_verify(int hexagons, int rings, const std::vector<int>& sizes, int cap, std::ostream& out) {
    std::vector<corpus_entry> corpus = chain_corpus(hexagons, rings, sizes);
    out << "corpus: " << corpus.size() << " graphs\n";
    verify_options opts;
    opts.cap = cap;

    bool all_pass = true;
    std::map<std::string, std::pair<int, std::string>> failures;  // name -> (count, first detail)
    std::vector<std::string> order;
    for (const auto& entry : corpus) {
        for (const check_result& c : run_graph_checks(entry.graph, opts)) {
            if (!failures.count(c.name)) {
                order.push_back(c.name);
                failures[c.name] = {0, ""};
            }
            if (!c.pass) {
                if (failures[c.name].first == 0)
                    failures[c.name].second = entry.name + ": " + c.detail;
                failures[c.name].first++;
            }
        }
    }
    for (const std::string& name : order) {
        auto [count, detail] = failures[name];
        if (count == 0) {
            out << "PASS " << name << " (" << corpus.size() << " graphs)\n";
        } else {
            out << "FAIL " << name << " (" << count << " graphs, first: " << detail << ")\n";
            all_pass = false;
        }
    }
    for (const check_result& c : {run_pair_agreement(corpus, cap),
                                  run_enumeration_oracle(corpus), run_family_counts()}) {
        out << (c.pass ? "PASS " : "FAIL ") << c.name
            << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
        all_pass = all_pass && c.pass;
    }
    return all_pass ? 0 : 2;
}

int do_export(const std::string& path, const std::string& what, const std::string& format,
              int cap, std::ostream& out) {
    plane_graph g = load_graph(path);
    if (what == "graph") {
        require(format == "json", errc::invalid_input, "graph export is JSON only");
        emit(out, graph_to_json(g));
        return 0;
    }
    if (what == "dual") {
        inner_dual_t d = inner_dual(g);
        if (format == "dot")
            out << inner_dual_to_dot(d);
        else
            emit(out, inner_dual_to_json(d));
        return 0;
    }
    resonance_graph r = build_resonance(g, cap);
    if (what == "resonance") {
        if (format == "dot")
            out << resonance_to_dot(r);
        else
            emit(out, resonance_to_json(r));
        return 0;
    }
    if (what == "digraph") {
        resonance_digraph d = orient(g, r);
        if (format == "dot")
            out << digraph_to_dot(d);
        else
            emit(out, digraph_to_json(d));
        return 0;
    }
    theta_classes_t tc = theta_classes(r);
    theta_graph_t tg = theta_graph(r, tc);
    if (format == "dot")
        out << theta_to_dot(tg);
    else
        emit(out, theta_to_json(tc, tg));
    return 0;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"resonance graphs of 2-connected outerplane bipartite graphs"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "emit a graph in the JSON input format");
    std::string family;
    int gen_n = 3, gen_rings = 3;
    std::vector<int> gen_sizes, gen_offsets, gen_pool{4, 6, 8};
    uint64_t gen_seed = 1;
    gen->add_option("--family", family, "linear|fibonaccene|chain|random")
        ->required()
        ->check(CLI::IsMember({"linear", "fibonaccene", "chain", "random"}));
    gen->add_option("--n", gen_n, "ring count for linear/fibonaccene");
    gen->add_option("--sizes", gen_sizes, "ring sizes for chain")->delimiter(',');
    gen->add_option("--offsets", gen_offsets, "internal ring offsets for chain")->delimiter(',');
    gen->add_option("--rings", gen_rings, "ring count for random");
    gen->add_option("--pool", gen_pool, "ring size pool for random")->delimiter(',');
    gen->add_option("--seed", gen_seed, "random seed");

    // analyze
    auto* ana = app.add_subcommand("analyze", "full report for one graph");
    std::string ana_file;
    int cap = default_matching_cap;
    ana->add_option("file", ana_file, "graph JSON file")->required();
    ana->add_option("--cap", cap, "matching enumeration cap");

    // compare
    auto* cmp = app.add_subcommand("compare", "three-way isomorphism verdict");
    std::string cmp_a, cmp_b;
    cmp->add_option("a", cmp_a, "first graph JSON file")->required();
    cmp->add_option("b", cmp_b, "second graph JSON file")->required();
    cmp->add_option("--cap", cap, "matching enumeration cap");

    // verify
    auto* ver = app.add_subcommand("verify", "run the theorem suite over a chain corpus");
    int ver_hexagons = 3, ver_rings = 2;
    std::vector<int> ver_sizes{4, 6, 8};
    ver->add_option("--hexagons", ver_hexagons, "max hexagon chain length");
    ver->add_option("--rings", ver_rings, "max ring count for mixed chains");
    ver->add_option("--sizes", ver_sizes, "allowed ring sizes")->delimiter(',');
    ver->add_option("--cap", cap, "matching enumeration cap");

    // export
    auto* exp = app.add_subcommand("export", "emit derived structures");
    std::string exp_file, exp_what = "resonance", exp_format = "dot";
    exp->add_option("file", exp_file, "graph JSON file")->required();
    exp->add_option("--what", exp_what, "graph|resonance|digraph|theta|dual")
        ->check(CLI::IsMember({"graph", "resonance", "digraph", "theta", "dual"}));
    exp->add_option("--format", exp_format, "dot|json")->check(CLI::IsMember({"dot", "json"}));

    std::vector<const char*> argv;
    argv.push_back("resg");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse((int)argv.size(), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (gen->parsed())
            return do_generate(family, gen_n, gen_sizes, gen_offsets, gen_rings, gen_pool, gen_seed,
                               out);
        if (ana->parsed()) return do_analyze(ana_file, cap, out);
        if (cmp->parsed()) return do_compare(cmp_a, cmp_b, cap, out);
        if (ver->parsed()) return do_verify(ver_hexagons, ver_rings, ver_sizes, cap, out);
        if (exp->parsed()) return do_export(exp_file, exp_what, exp_format, cap, out);
    } catch (const graph_error& e) {
        err << "error: " << e.what() << "\n";
        return e.code() == errc::disagreement_detected ? 2 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace resg
