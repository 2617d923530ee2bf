#pragma once

#include <string>

#include "json.hpp"
#include "resg/comparator.hpp"
#include "resg/decomposition.hpp"
#include "resg/plane_graph.hpp"
#include "resg/resonance.hpp"
#include "resg/theta.hpp"

namespace resg {

using ordered_json = nlohmann::ordered_json;

/// Input document: {"vertices": N, "rotations": [[...], ...], "outer": [u, v]}.
/// Unknown keys are rejected.
plane_graph graph_from_json(const nlohmann::json& doc);
plane_graph graph_from_json_text(const std::string& text);

ordered_json graph_to_json(const plane_graph& g);

ordered_json resonance_to_json(const resonance_graph& r);
ordered_json digraph_to_json(const resonance_digraph& d);
ordered_json theta_to_json(const theta_classes_t& tc, const theta_graph_t& tg);
ordered_json inner_dual_to_json(const inner_dual_t& d);
ordered_json rfd_to_json(const rfd_t& d);
ordered_json regularity_to_json(const regularity_signature_t& sig);

std::string resonance_to_dot(const resonance_graph& r);
std::string digraph_to_dot(const resonance_digraph& d);
std::string theta_to_dot(const theta_graph_t& tg);
std::string inner_dual_to_dot(const inner_dual_t& d);

/// Full analysis document: counts, extremal matchings, class table, inner
/// dual, regularity signature, decomposition trace, and the per-theorem
/// check list.
ordered_json analysis_report(const plane_graph& g, int cap = default_matching_cap);

}  // namespace resg
