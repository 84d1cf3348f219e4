#pragma once

// Structural queries on a dual graph restricted to a vertex subset.

#include <vector>

#include "ratsing/lattice.hpp"

namespace ratsing {

VertexSet all_vertices(const DualGraph& graph);

// Connected components of the induced subgraph on `subset`, each sorted, in
// order of their smallest vertex.
std::vector<VertexSet> connected_components(const DualGraph& graph, const VertexSet& subset);

bool is_connected(const DualGraph& graph, const VertexSet& subset);

// Leading principal minors of -M restricted to `subset` (in subset order),
// computed by fraction-free elimination. Stops after the first minor that is
// not positive, so the result is shorter than `subset` exactly when the
// restricted form is not negative definite.
std::vector<Integer> negated_leading_minors(const DualGraph& graph, const VertexSet& subset);

bool is_negative_definite(const DualGraph& graph, const VertexSet& subset);
bool is_negative_definite(const DualGraph& graph);

// det of the full intersection matrix (exact, any sign).
Integer form_determinant(const DualGraph& graph);

}  // namespace ratsing
