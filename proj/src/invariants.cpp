#include "ratsing/invariants.hpp"

#include <algorithm>

#include "ratsing/graph_algo.hpp"

namespace ratsing {

LauferTrace laufer(const DualGraph& graph, const VertexSet& support) {
    if (support.empty()) {
        throw GraphError("fundamental cycle of an empty support");
    }
    for (Vertex v : support) {
        if (v >= graph.size()) throw GraphError("support vertex " + std::to_string(v + 1) + " out of range");
    }
    if (!is_connected(graph, support)) {
        throw GraphError("fundamental cycle needs a connected support");
    }
    if (!is_negative_definite(graph, support)) {
        throw GraphError("intersection form is not negative definite on the support");
    }

    LauferTrace trace{Cycle::indicator(graph.size(), support), {}};
    for (;;) {
        auto violating = std::find_if(support.begin(), support.end(), [&](Vertex v) {
            return intersection_with_vertex(graph, trace.cycle, v) > 0;
        });
        if (violating == support.end()) break;
        trace.cycle[*violating] += 1;
        trace.additions.push_back(*violating);
    }
    return trace;
}

Cycle fundamental_cycle(const DualGraph& graph, const VertexSet& support) {
    return laufer(graph, support).cycle;
}

Cycle fundamental_cycle(const DualGraph& graph) { return fundamental_cycle(graph, all_vertices(graph)); }

Singularity::Singularity(DualGraph graph)
    : graph_(std::move(graph)), z0_(fundamental_cycle(graph_)), multiplicity_(-intersection(graph_, z0_, z0_)) {}

void Singularity::require_anti_nef(const Cycle& z) const {
    if (z.size() != graph_.size()) {
        throw DimensionError("cycle has " + std::to_string(z.size()) + " coefficients, graph has " +
                             std::to_string(graph_.size()) + " vertices");
    }
    if (!z.is_positive()) {
        throw PreconditionError("expected a positive cycle, got " + to_string(z));
    }
    if (!is_anti_nef(graph_, z)) {
        throw PreconditionError("cycle " + to_string(z) + " is not anti-nef");
    }
}

Integer Singularity::colength(const Cycle& z) const {
    require_anti_nef(z);
    return 1 - virtual_genus(graph_, z);
}

Integer Singularity::multiplicity(const Cycle& z) const {
    require_anti_nef(z);
    return -intersection(graph_, z, z);
}

Integer Singularity::min_gens(const Cycle& z) const {
    require_anti_nef(z);
    return 1 - intersection(graph_, z, z0_);
}

Integer Singularity::u_invariant(const Cycle& z) const {
    require_anti_nef(z);
    return intersection(graph_, z0_, z) * (virtual_genus(graph_, z) - 1) + intersection(graph_, z, z);
}

Filtration Singularity::filtration(const Cycle& z) const {
    require_anti_nef(z);
    if (!componentwise_le(z0_, z)) {
        // Only reachable on a disconnected or otherwise invalid graph: Z_0 is
        // the minimum of all nonzero anti-nef cycles.
        throw InvariantError("anti-nef cycle " + to_string(z) + " does not dominate Z_0 = " + to_string(z0_));
    }
    Filtration out{z0_, {}};
    Cycle previous = z0_;
    for (Integer k = 1; !componentwise_le(z, k * z0_); ++k) {
        Cycle next = inf_cycles(z, (k + 1) * z0_);
        out.steps.push_back({next - previous, next});
        previous = std::move(next);
    }
    return out;
}

VertexSet Singularity::special_module_indices(const Cycle& z) const {
    const Integer length = colength(z);
    VertexSet out;
    for (Vertex v = 0; v < graph_.size(); ++v) {
        const Integer cap = z0_[v] * length;
        if (z[v] > cap) {
            throw InvariantError("coefficient bound a_i <= n_i * colength fails at vertex " + std::to_string(v + 1) +
                                 " for " + to_string(z) + "; the graph is not rational");
        }
        if (z[v] == cap) out.push_back(v);
    }
    return out;
}

Integer colength(const DualGraph& graph, const Cycle& z) {
    // No Z_0 needed; avoid building a Singularity so this works on any graph.
    if (z.size() != graph.size()) throw DimensionError("cycle size does not match graph");
    if (!z.is_positive() || !is_anti_nef(graph, z)) {
        throw PreconditionError("colength needs a positive anti-nef cycle, got " + to_string(z));
    }
    return 1 - virtual_genus(graph, z);
}

Integer multiplicity(const DualGraph& graph, const Cycle& z) {
    if (z.size() != graph.size()) throw DimensionError("cycle size does not match graph");
    if (!z.is_positive() || !is_anti_nef(graph, z)) {
        throw PreconditionError("multiplicity needs a positive anti-nef cycle, got " + to_string(z));
    }
    return -intersection(graph, z, z);
}

Integer min_gens(const DualGraph& graph, const Cycle& z) { return Singularity(graph).min_gens(z); }

Integer u_invariant(const DualGraph& graph, const Cycle& z) { return Singularity(graph).u_invariant(z); }

Filtration filtration(const DualGraph& graph, const Cycle& z) { return Singularity(graph).filtration(z); }

VertexSet special_module_indices(const DualGraph& graph, const Cycle& z) {
    return Singularity(graph).special_module_indices(z);
}

}  // namespace ratsing
