#pragma once

#include <stdexcept>
#include <string>

namespace resg {

enum class errc {
    bad_rotation,
    not_bipartite,
    not_two_connected,
    not_outerplane,
    not_plane_embedding,
    odd_inner_face,
    shared_edge_multiplicity,
    usage_on_single_face,
    cap_exceeded,
    cyclic_digraph,
    theta_not_transitive,
    mixed_face_labels,
    not_a_tree,
    not_convex,
    no_reducible_face,
    search_budget_exceeded,
    disagreement_detected,
    invalid_spec,
    invalid_input,
    internal_invariant_violation,
};

const char* errc_name(errc c);

/// Thrown by validation and construction routines; carries a machine-readable code.
class graph_error : public std::runtime_error {
  public:
    graph_error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
    throw graph_error(code, what);
}

inline void require(bool cond, errc code, const std::string& what) {
    if (!cond) fail(code, what);
}

}  // namespace resg
