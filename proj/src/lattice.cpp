#include "ratsing/lattice.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace ratsing {

namespace {

void require_size(const DualGraph& graph, const Cycle& z) {
    if (z.size() != graph.size()) {
        throw DimensionError("cycle has " + std::to_string(z.size()) + " coefficients, graph has " +
                             std::to_string(graph.size()) + " vertices");
    }
}

void require_same_size(const Cycle& z, const Cycle& w) {
    if (z.size() != w.size()) {
        throw DimensionError("cycles of different length: " + std::to_string(z.size()) + " vs " +
                             std::to_string(w.size()));
    }
}

}  // namespace

DualGraph::DualGraph(std::vector<std::int64_t> weights, std::vector<Edge> edges)
    : weights_(std::move(weights)), adjacency_(weights_.size()) {
    if (weights_.empty()) {
        throw GraphError("a dual graph needs at least one vertex");
    }
    const std::size_t r = weights_.size();
    for (auto [a, b] : edges) {
        if (a >= r || b >= r) {
            throw GraphError("edge {" + std::to_string(a + 1) + "," + std::to_string(b + 1) +
                             "} references a vertex outside 1.." + std::to_string(r));
        }
        if (a == b) {
            throw GraphError("self-loop at vertex " + std::to_string(a + 1));
        }
        edges_.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) {
        throw GraphError("duplicate edge {" + std::to_string(dup->first + 1) + "," +
                         std::to_string(dup->second + 1) + "}");
    }
    for (auto [a, b] : edges_) {
        adjacency_[a].push_back(b);
        adjacency_[b].push_back(a);
    }
    for (auto& nbrs : adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
    }
}

bool DualGraph::adjacent(Vertex a, Vertex b) const {
    const auto& nbrs = adjacency_.at(a);
    return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

std::int64_t DualGraph::form_entry(Vertex a, Vertex b) const {
    if (a == b) return weights_.at(a);
    return adjacent(a, b) ? 1 : 0;
}

Cycle Cycle::unit(std::size_t n, Vertex v) {
    Cycle e = zero(n);
    e[v] = 1;
    return e;
}

Cycle Cycle::indicator(std::size_t n, const VertexSet& vertices) {
    Cycle e = zero(n);
    for (Vertex v : vertices) e[v] = 1;
    return e;
}

bool Cycle::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c == 0; });
}

bool Cycle::is_nonnegative() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c >= 0; });
}

bool Cycle::is_positive() const { return is_nonnegative() && !is_zero(); }

VertexSet Cycle::support() const {
    VertexSet out;
    for (Vertex v = 0; v < coeffs_.size(); ++v) {
        if (coeffs_[v] > 0) out.push_back(v);
    }
    return out;
}

Cycle& Cycle::operator+=(const Cycle& other) {
    require_same_size(*this, other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
}

Cycle& Cycle::operator-=(const Cycle& other) {
    require_same_size(*this, other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    return *this;
}

Cycle& Cycle::operator*=(const Integer& factor) {
    for (auto& c : coeffs_) c *= factor;
    return *this;
}

std::string to_string(const Cycle& z) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (i) os << ',';
        os << z[i];
    }
    os << ')';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cycle& z) { return os << to_string(z); }

std::string to_string(Order order) {
    switch (order) {
        case Order::equal: return "equal";
        case Order::less_eq: return "less_eq";
        case Order::greater_eq: return "greater_eq";
        case Order::incomparable: return "incomparable";
    }
    return "?";
}

Integer intersection_with_vertex(const DualGraph& graph, const Cycle& z, Vertex v) {
    require_size(graph, z);
    Integer sum = z[v] * graph.weight(v);
    for (Vertex u : graph.neighbors(v)) sum += z[u];
    return sum;
}

Integer intersection(const DualGraph& graph, const Cycle& z, const Cycle& w) {
    require_size(graph, z);
    require_size(graph, w);
    Integer sum = 0;
    for (Vertex v = 0; v < graph.size(); ++v) {
        if (w[v] == 0) continue;
        sum += w[v] * intersection_with_vertex(graph, z, v);
    }
    return sum;
}

Integer canonical_degree(const DualGraph& graph, const Cycle& z) {
    require_size(graph, z);
    Integer sum = 0;
    for (Vertex v = 0; v < graph.size(); ++v) {
        sum += z[v] * (-graph.weight(v) - 2);
    }
    return sum;
}

Integer virtual_genus(const DualGraph& graph, const Cycle& z) {
    const Integer twice = intersection(graph, z, z) + canonical_degree(graph, z);
    if (boost::multiprecision::bit_test(twice, 0)) {
        throw InvariantError("Z^2 + K.Z is odd for Z = " + to_string(z));
    }
    return twice / 2 + 1;
}

bool is_anti_nef(const DualGraph& graph, const Cycle& z) {
    require_size(graph, z);
    if (!z.is_nonnegative()) {
        throw PreconditionError("anti-nef test needs a nonnegative cycle, got " + to_string(z));
    }
    for (Vertex v = 0; v < graph.size(); ++v) {
        if (intersection_with_vertex(graph, z, v) > 0) return false;
    }
    return true;
}

Cycle inf_cycles(const Cycle& z, const Cycle& w) {
    require_same_size(z, w);
    Cycle out = z;
    for (Vertex v = 0; v < z.size(); ++v) {
        if (w[v] < out[v]) out[v] = w[v];
    }
    return out;
}

Order compare(const Cycle& z, const Cycle& w) {
    require_same_size(z, w);
    bool le = true;
    bool ge = true;
    for (Vertex v = 0; v < z.size(); ++v) {
        if (z[v] > w[v]) le = false;
        if (z[v] < w[v]) ge = false;
    }
    if (le && ge) return Order::equal;
    if (le) return Order::less_eq;
    if (ge) return Order::greater_eq;
    return Order::incomparable;
}

bool componentwise_le(const Cycle& z, const Cycle& w) {
    const Order o = compare(z, w);
    return o == Order::equal || o == Order::less_eq;
}

}  // namespace ratsing
