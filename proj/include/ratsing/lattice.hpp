#pragma once

// Cycles on the exceptional divisor of a resolution and the intersection
// form on them. A cycle is an integer combination of the exceptional curves
// E_1..E_r; the dual graph fixes the pairing E_i.E_j.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ratsing/error.hpp"

namespace ratsing {

using Integer = boost::multiprecision::cpp_int;

// 0-based vertex index. All text and JSON I/O is 1-based.
using Vertex = std::size_t;

// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<Vertex>;

using Edge = std::pair<Vertex, Vertex>;

/// Weighted simple graph of an exceptional divisor.
///
/// Weights are the self-intersections E_i^2. Any integer is representable so
/// that malformed graphs can be loaded and then reported by `validate`; the
/// minimal-resolution convention (every weight <= -2) is a validation
/// finding, not a construction failure. Construction does reject self-loops,
/// repeated edges and out-of-range endpoints since those have no meaning for
/// a simple graph.
class DualGraph {
public:
    DualGraph(std::vector<std::int64_t> weights, std::vector<Edge> edges);

    std::size_t size() const noexcept { return weights_.size(); }
    std::int64_t weight(Vertex v) const { return weights_.at(v); }
    const std::vector<std::int64_t>& weights() const noexcept { return weights_; }

    // Normalised to first < second, sorted.
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }
    bool adjacent(Vertex a, Vertex b) const;

    // Entry (a, b) of the intersection matrix.
    std::int64_t form_entry(Vertex a, Vertex b) const;

    friend bool operator==(const DualGraph&, const DualGraph&) = default;

private:
    std::vector<std::int64_t> weights_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
};

/// Integer coefficient vector over the vertices of a dual graph.
class Cycle {
public:
    Cycle() = default;
    Cycle(std::initializer_list<Integer> coeffs) : coeffs_(coeffs) {}
    explicit Cycle(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {}

    static Cycle zero(std::size_t n) { return Cycle(std::vector<Integer>(n)); }
    static Cycle unit(std::size_t n, Vertex v);
    static Cycle indicator(std::size_t n, const VertexSet& vertices);

    std::size_t size() const noexcept { return coeffs_.size(); }
    const Integer& operator[](Vertex v) const { return coeffs_.at(v); }
    Integer& operator[](Vertex v) { return coeffs_.at(v); }
    const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const;
    bool is_nonnegative() const;
    // Nonnegative and nonzero.
    bool is_positive() const;

    // {v : coeff_v > 0}
    VertexSet support() const;

    Cycle& operator+=(const Cycle& other);
    Cycle& operator-=(const Cycle& other);
    Cycle& operator*=(const Integer& factor);

    friend Cycle operator+(Cycle a, const Cycle& b) { return a += b; }
    friend Cycle operator-(Cycle a, const Cycle& b) { return a -= b; }
    friend Cycle operator*(const Integer& k, Cycle a) { return a *= k; }

    friend bool operator==(const Cycle&, const Cycle&) = default;
    // Lexicographic on the coefficient vector; used for canonical ordering.
    friend bool operator<(const Cycle& a, const Cycle& b) { return a.coeffs_ < b.coeffs_; }

private:
    std::vector<Integer> coeffs_;
};

std::string to_string(const Cycle& z);
std::ostream& operator<<(std::ostream& os, const Cycle& z);

enum class Order { equal, less_eq, greater_eq, incomparable };

std::string to_string(Order order);

// Z^T M W.
Integer intersection(const DualGraph& graph, const Cycle& z, const Cycle& w);

// Z.E_v without materialising the unit cycle.
Integer intersection_with_vertex(const DualGraph& graph, const Cycle& z, Vertex v);

// K.Z with K.E_i = -E_i^2 - 2.
Integer canonical_degree(const DualGraph& graph, const Cycle& z);

// p_a(Z) = (Z^2 + K.Z)/2 + 1.
Integer virtual_genus(const DualGraph& graph, const Cycle& z);

// Z.E_i <= 0 for every vertex. Requires Z >= 0.
bool is_anti_nef(const DualGraph& graph, const Cycle& z);

Cycle inf_cycles(const Cycle& z, const Cycle& w);

Order compare(const Cycle& z, const Cycle& w);

// Componentwise z <= w.
bool componentwise_le(const Cycle& z, const Cycle& w);

}  // namespace ratsing
