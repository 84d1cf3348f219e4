#include "ratsing/graph_algo.hpp"

#include <algorithm>
#include <numeric>

namespace ratsing {

VertexSet all_vertices(const DualGraph& graph) {
    VertexSet out(graph.size());
    std::iota(out.begin(), out.end(), Vertex{0});
    return out;
}

std::vector<VertexSet> connected_components(const DualGraph& graph, const VertexSet& subset) {
    std::vector<char> in_subset(graph.size(), 0);
    for (Vertex v : subset) in_subset.at(v) = 1;
    std::vector<char> seen(graph.size(), 0);

    std::vector<VertexSet> components;
    for (Vertex start = 0; start < graph.size(); ++start) {
        if (!in_subset[start] || seen[start]) continue;
        VertexSet component;
        std::vector<Vertex> stack{start};
        seen[start] = 1;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            component.push_back(v);
            for (Vertex u : graph.neighbors(v)) {
                if (in_subset[u] && !seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
            }
        }
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
    }
    return components;
}

bool is_connected(const DualGraph& graph, const VertexSet& subset) {
    return !subset.empty() && connected_components(graph, subset).size() == 1;
}

namespace {

using Matrix = std::vector<std::vector<Integer>>;

Matrix restricted_form(const DualGraph& graph, const VertexSet& subset, int sign) {
    const std::size_t k = subset.size();
    Matrix m(k, std::vector<Integer>(k));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            m[i][j] = sign * graph.form_entry(subset[i], subset[j]);
        }
    }
    return m;
}

}  // namespace

std::vector<Integer> negated_leading_minors(const DualGraph& graph, const VertexSet& subset) {
    // Bareiss without pivoting: after step k the (k,k) entry equals the
    // (k+1)-th leading principal minor, and every division is exact.
    Matrix m = restricted_form(graph, subset, -1);
    const std::size_t k = m.size();
    std::vector<Integer> minors;
    Integer previous = 1;
    for (std::size_t p = 0; p < k; ++p) {
        minors.push_back(m[p][p]);
        if (m[p][p] <= 0) break;
        for (std::size_t i = p + 1; i < k; ++i) {
            for (std::size_t j = p + 1; j < k; ++j) {
                m[i][j] = (m[i][j] * m[p][p] - m[i][p] * m[p][j]) / previous;
            }
        }
        previous = m[p][p];
    }
    return minors;
}

bool is_negative_definite(const DualGraph& graph, const VertexSet& subset) {
    const auto minors = negated_leading_minors(graph, subset);
    return minors.size() == subset.size() &&
           std::all_of(minors.begin(), minors.end(), [](const Integer& d) { return d > 0; });
}

bool is_negative_definite(const DualGraph& graph) {
    return is_negative_definite(graph, all_vertices(graph));
}

Integer form_determinant(const DualGraph& graph) {
    Matrix m = restricted_form(graph, all_vertices(graph), 1);
    const std::size_t k = m.size();
    Integer previous = 1;
    int sign = 1;
    for (std::size_t p = 0; p < k; ++p) {
        if (m[p][p] == 0) {
            std::size_t swap_row = p + 1;
            while (swap_row < k && m[swap_row][p] == 0) ++swap_row;
            if (swap_row == k) return 0;
            std::swap(m[p], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = p + 1; i < k; ++i) {
            for (std::size_t j = p + 1; j < k; ++j) {
                m[i][j] = (m[i][j] * m[p][p] - m[i][p] * m[p][j]) / previous;
            }
        }
        previous = m[p][p];
    }
    return sign * m[k - 1][k - 1];
}

}  // namespace ratsing
