#pragma once

// Graphs and independent reference computations shared by the test suites.
// Nothing here calls into the library's arithmetic: the dense form, the
// pairing and the box enumeration are written from scratch over int64 so
// they can serve as oracles for the implementation.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "ratsing/builders.hpp"
#include "ratsing/lattice.hpp"

namespace ratsing::testing {

using IntVec = std::vector<std::int64_t>;
using DenseMatrix = std::vector<IntVec>;

// Three-armed star: E1 the -3 centre; arms E2-E3, E4-E5, E6-E7 with E2, E4,
// E6 attached to the centre.
inline DualGraph star_graph() {
    return DualGraph({-3, -2, -2, -2, -2, -2, -2}, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
}

inline Cycle star_z0() { return Cycle{1, 1, 1, 1, 1, 1, 1}; }
inline Cycle star_z1() { return Cycle{2, 2, 1, 2, 1, 2, 1}; }
inline Cycle star_z2() { return Cycle{3, 2, 1, 2, 1, 2, 1}; }

inline DualGraph cyclic_7_3() { return build_cyclic(7, 3); }

inline DenseMatrix dense_form(const DualGraph& g) {
    const std::size_t r = g.size();
    DenseMatrix m(r, IntVec(r, 0));
    for (std::size_t i = 0; i < r; ++i) m[i][i] = g.weight(i);
    for (auto [a, b] : g.edges()) {
        m[a][b] = 1;
        m[b][a] = 1;
    }
    return m;
}

inline std::int64_t naive_pair(const DenseMatrix& m, const IntVec& a, const IntVec& b) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) s += a[i] * m[i][j] * b[j];
    return s;
}

inline std::int64_t naive_canonical(const DenseMatrix& m, const IntVec& a) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < m.size(); ++i) s += a[i] * (-m[i][i] - 2);
    return s;
}

inline IntVec to_ints(const Cycle& z) {
    IntVec out;
    for (const auto& c : z.coeffs()) out.push_back(c.convert_to<std::int64_t>());
    return out;
}

inline Cycle from_ints(const IntVec& v) { return Cycle(std::vector<Integer>(v.begin(), v.end())); }

inline bool naive_anti_nef(const DenseMatrix& m, const IntVec& a) {
    for (std::size_t i = 0; i < m.size(); ++i) {
        std::int64_t s = 0;
        for (std::size_t j = 0; j < m.size(); ++j) s += m[i][j] * a[j];
        if (s > 0) return false;
    }
    return true;
}

// Every nonzero anti-nef cycle in [0, k]^r by plain odometer, no pruning.
inline std::vector<IntVec> box_anti_nef(const DualGraph& g, std::int64_t k) {
    const DenseMatrix m = dense_form(g);
    const std::size_t r = g.size();
    std::vector<IntVec> out;
    IntVec a(r, 0);
    for (;;) {
        std::size_t i = 0;
        while (i < r && a[i] == k) a[i++] = 0;
        if (i == r) break;
        ++a[i];
        if (naive_anti_nef(m, a)) out.push_back(a);
    }
    return out;
}

// Tridiagonal continuant: det of the chain matrix with diagonal -b_i, i.e.
// (-1)^r times the numerator of [b_1, ..., b_r].
inline std::int64_t chain_numerator(const IntVec& b) {
    std::int64_t prev = 1;
    std::int64_t cur = b.empty() ? 1 : b[0];
    for (std::size_t i = 1; i < b.size(); ++i) {
        const std::int64_t next = b[i] * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

// Random tree (or forest-free graph) on up to max_vertices vertices. Weights
// are -2 with probability ~1/2, otherwise in [-5, -3].
inline DualGraph random_tree(std::mt19937& rng, std::size_t max_vertices) {
    std::uniform_int_distribution<std::size_t> size_dist(1, max_vertices);
    const std::size_t r = size_dist(rng);
    std::vector<std::int64_t> weights(r);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> heavy(3, 5);
    for (auto& w : weights) w = coin(rng) ? -2 : -heavy(rng);
    std::vector<Edge> edges;
    for (std::size_t v = 1; v < r; ++v) {
        std::uniform_int_distribution<std::size_t> parent(0, v - 1);
        edges.emplace_back(parent(rng), v);
    }
    return DualGraph(std::move(weights), std::move(edges));
}

// Random rational tree (rejection sampling).
inline DualGraph random_rational_tree(std::mt19937& rng, std::size_t max_vertices) {
    for (;;) {
        DualGraph g = random_tree(rng, max_vertices);
        if (validate(g, ValidateOptions{0}).ok()) return g;
    }
}

// Arbitrary simple graph with arbitrary small weights (may be invalid).
inline DualGraph random_simple_graph(std::mt19937& rng, std::size_t max_vertices) {
    std::uniform_int_distribution<std::size_t> size_dist(1, max_vertices);
    const std::size_t r = size_dist(rng);
    std::uniform_int_distribution<int> weight_dist(-6, 1);
    std::bernoulli_distribution edge(0.35);
    std::vector<std::int64_t> weights(r);
    for (auto& w : weights) w = weight_dist(rng);
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = a + 1; b < r; ++b)
            if (edge(rng)) edges.emplace_back(a, b);
    return DualGraph(std::move(weights), std::move(edges));
}

inline Cycle random_cycle(std::mt19937& rng, std::size_t r, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    std::vector<Integer> c(r);
    for (auto& x : c) x = dist(rng);
    return Cycle(std::move(c));
}

// Graphs used by the corpus-wide checks: ADE up to the given index, cyclic
// quotients up to max_n, and the star.
struct NamedGraph {
    std::string name;
    DualGraph graph;
};

inline std::vector<NamedGraph> corpus(int max_ade, std::int64_t max_n) {
    std::vector<NamedGraph> out;
    for (int n = 1; n <= max_ade; ++n) out.push_back({"A" + std::to_string(n), build_ade(AdeFamily::A, n)});
    for (int n = 4; n <= max_ade; ++n) out.push_back({"D" + std::to_string(n), build_ade(AdeFamily::D, n)});
    for (int n = 6; n <= std::min(8, max_ade); ++n) out.push_back({"E" + std::to_string(n), build_ade(AdeFamily::E, n)});
    for (std::int64_t n = 2; n <= max_n; ++n)
        for (std::int64_t q = 1; q < n; ++q)
            if (std::gcd(n, q) == 1)
                out.push_back({"1/" + std::to_string(n) + "(1," + std::to_string(q) + ")", build_cyclic(n, q)});
    out.push_back({"star", star_graph()});
    return out;
}

}  // namespace ratsing::testing
