// Acceptance suite: one criterion per section, one pass/fail line each.
// Exit code 0 only when every criterion passes within its time budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "resg/comparator.hpp"
#include "resg/decomposition.hpp"
#include "resg/generators.hpp"
#include "resg/theta.hpp"
#include "resg/verify.hpp"

using namespace resg;

namespace {

struct criterion_outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void report(int index, const std::string& title, double budget_seconds,
            const std::function<criterion_outcome()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    criterion_outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_budget = elapsed < budget_seconds;
    bool pass = out.pass && in_budget;
    if (!pass) ++failures;
    std::printf("criterion %d (%s): %s [%.2fs/%.0fs]%s%s\n", index, title.c_str(),
                pass ? "PASS" : "FAIL", elapsed, budget_seconds,
                out.detail.empty() ? "" : " - ", out.detail.c_str());
    std::fflush(stdout);
}

simple_graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return simple_graph::from_edges(n, e);
}

// Slices the per-graph battery by check name over a corpus.
criterion_outcome battery_over(const std::vector<corpus_entry>& corpus,
                               const std::map<std::string, std::vector<check_result>>& results,
                               const std::vector<std::string>& wanted) {
    for (const auto& entry : corpus) {
        for (const check_result& c : results.at(entry.name)) {
            bool relevant = false;
            for (const std::string& w : wanted) relevant = relevant || c.name.rfind(w, 0) == 0;
            if (relevant && !c.pass)
                return {false, entry.name + ": " + c.name +
                                   (c.detail.empty() ? "" : " (" + c.detail + ")")};
        }
    }
    return {true, std::to_string(corpus.size()) + " graphs"};
}

}  // namespace

int main() {
    // Shared corpora. The chain corpus drives the pairwise criterion; the
    // extended corpus (longer linear chains and fibonaccenes, seeded random
    // chains) drives the structural ones.
    std::vector<corpus_entry> pair_corpus = chain_corpus(4, 3, {4, 6, 8});
    std::vector<corpus_entry> corpus = extended_corpus();

    // The per-graph battery is computed once and sliced per criterion.
    std::map<std::string, std::vector<check_result>> battery;
    auto battery_t0 = std::chrono::steady_clock::now();
    for (const auto& entry : corpus) battery[entry.name] = run_graph_checks(entry.graph);
    double battery_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - battery_t0).count();
    std::printf("battery: %zu graphs in %.2fs\n", corpus.size(), battery_seconds);

    report(1, "figure pair reproduction", 1.0, [&]() -> criterion_outcome {
        plane_graph l3 = linear_chain(3);
        plane_graph f3 = fibonaccene(3);
        resonance_graph r3 = build_resonance(l3);
        resonance_graph rf = build_resonance(f3);

        if (!graph_iso(simple_graph::from_resonance(r3), path_graph(4)).isomorphic)
            return {false, "linear chain resonance graph is not the path on four vertices"};

        abstract_graph cube = fibonacci_cube(3);
        if (cube.n != 5 || cube.edges.size() != 5)
            return {false, "order-3 cube counts"};
        if (rf.vertex_count() != 5)
            return {false, "fibonaccene matchings"};
        if (!graph_iso(simple_graph::from_resonance(rf),
                       simple_graph::from_edges(cube.n, cube.edges))
                 .isomorphic)
            return {false, "fibonaccene resonance graph is not the order-3 cube"};

        for (const plane_graph* g : {&l3, &f3}) {
            inner_dual_t d = inner_dual(*g);
            if (d.node_count() != 3 || d.edges.size() != 2) return {false, "inner dual shape"};
            int leaves = 0;
            for (const auto& a : d.adj) leaves += a.size() == 1;
            if (leaves != 2) return {false, "inner dual is not a path"};
        }

        cross_check_report rep = cross_check(l3, f3);
        if (rep.fast.isomorphic || rep.brute.isomorphic || rep.digraph.isomorphic)
            return {false, "some method called the figure pair isomorphic"};
        return {true, "path on 4 vs order-3 cube, all methods negative"};
    });

    report(2, "three-way agreement over all ordered pairs", 60.0, [&]() -> criterion_outcome {
        check_result res = run_pair_agreement(pair_corpus);
        return {res.pass, res.detail};
    });

    report(3, "theta partition and tree against the inner dual", 30.0, [&]() -> criterion_outcome {
        return battery_over(corpus, battery, {"theta:"});
    });

    report(4, "expansion rebuild and the per-step end-edge condition", 60.0,
           [&]() -> criterion_outcome {
               return battery_over(corpus, battery, {"decomposition:"});
           });

    report(5, "extremal lifting, unique source and sink", 120.0, [&]() -> criterion_outcome {
        return battery_over(corpus, battery, {"extremal lifting", "order:"});
    });

    report(6, "unique medians", 120.0, [&]() -> criterion_outcome {
        return battery_over(corpus, battery, {"median:"});
    });

    report(7, "enumeration oracle and family counts", 60.0, [&]() -> criterion_outcome {
        check_result oracle = run_enumeration_oracle(corpus);
        if (!oracle.pass) return {false, oracle.detail};
        check_result counts = run_family_counts(8);
        if (!counts.pass) return {false, counts.detail};
        return {true, oracle.detail + "; " + counts.detail};
    });

    std::printf("SUMMARY: %d/7 criteria passed\n", 7 - failures);
    return failures == 0 ? 0 : 1;
}
