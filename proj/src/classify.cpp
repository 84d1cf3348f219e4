#include "ratsing/classify.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <tuple>

#include "ratsing/graph_algo.hpp"

namespace ratsing {

std::string to_string(CycleKind kind) {
    switch (kind) {
        case CycleKind::special: return "special";
        case CycleKind::ulrich: return "ulrich";
        case CycleKind::both: return "both";
    }
    return "?";
}

bool is_special_cycle(const Singularity& sing, const Cycle& z) { return !sing.special_module_indices(z).empty(); }

bool is_special_cycle(const DualGraph& graph, const Cycle& z) {
    require_rational(graph);
    return is_special_cycle(Singularity(graph), z);
}

bool is_ulrich_cycle(const Singularity& sing, const Cycle& z) {
    if (sing.multiplicity() == 2) return is_special_cycle(sing, z);
    const Integer generators = sing.min_gens(z);
    if (generators <= 2) {
        throw UnsupportedInputError("U criterion needs more than 2 generators; " + to_string(z) + " has " +
                                    generators.str());
    }
    return sing.u_invariant(z) == 0;
}

bool is_ulrich_cycle(const DualGraph& graph, const Cycle& z) {
    require_rational(graph);
    return is_ulrich_cycle(Singularity(graph), z);
}

namespace {

enum class ChainRule { special, ulrich };

// Depth-first search over chains Z_0 < Z_1 < ... with Y_k the fundamental
// cycle of a connected component of {E in Supp(Y_{k-1}) : E.Z_{k-1} = 0}
// and Y_k <= Y_{k-1}. The special rule also tracks the vertices i with
// coeff_i(Y_j) = n_i for every j so far and drops chains where that set
// empties; the Ulrich rule requires K.(Z_0 - Y_k) = 0 instead.
class ChainSearch {
public:
    ChainSearch(const Singularity& sing, ChainRule rule, std::size_t max_steps, bool cap_is_error)
        : sing_(sing), rule_(rule), max_steps_(max_steps), cap_is_error_(cap_is_error) {}

    std::vector<ClassificationEntry> run() {
        const Cycle& z0 = sing_.fundamental();
        record(z0, {}, all_vertices(sing_.graph()));
        State root{z0, z0, all_vertices(sing_.graph())};
        std::vector<FiltrationStep> steps;
        explore(root, steps);

        std::vector<ClassificationEntry> out;
        out.reserve(found_.size());
        for (auto& [cycle, entry] : found_) out.push_back(std::move(entry));
        return out;
    }

private:
    struct State {
        Cycle z;
        Cycle y;
        VertexSet indices;
    };

    struct Candidate {
        Cycle y;
        Cycle z;
        VertexSet indices;
    };

    std::vector<Candidate> candidates(const State& state) const {
        const DualGraph& graph = sing_.graph();
        const Cycle& z0 = sing_.fundamental();

        VertexSet orthogonal;
        for (Vertex v : state.y.support()) {
            if (intersection_with_vertex(graph, state.z, v) == 0) orthogonal.push_back(v);
        }

        std::vector<Candidate> out;
        for (const VertexSet& component : connected_components(graph, orthogonal)) {
            Cycle y = fundamental_cycle(graph, component);
            if (!componentwise_le(y, state.y)) continue;
            if (virtual_genus(graph, y) != 0) {
                throw InvariantError("fundamental cycle " + to_string(y) + " of a component has p_a != 0");
            }
            Cycle z = state.z + y;
            if (!is_anti_nef(graph, z)) continue;

            VertexSet indices;
            if (rule_ == ChainRule::special) {
                for (Vertex i : state.indices) {
                    if (y[i] == z0[i]) indices.push_back(i);
                }
                if (indices.empty()) continue;
            } else if (canonical_degree(graph, z0 - y) != 0) {
                continue;
            }
            out.push_back({std::move(y), std::move(z), std::move(indices)});
        }
        std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) { return a.y < b.y; });
        return out;
    }

    void explore(const State& state, std::vector<FiltrationStep>& steps) {
        for (Candidate& next : candidates(state)) {
            if (steps.size() + 1 > max_steps_) {
                if (cap_is_error_) {
                    throw TruncationError("chain from " + to_string(state.z) + " by " + to_string(next.y) +
                                          " exceeds " + std::to_string(max_steps_) + " steps");
                }
                continue;
            }
            steps.push_back({next.y, next.z});
            record(next.z, steps, next.indices);
            auto key = std::make_tuple(next.z, next.y, next.indices);
            if (visited_.insert(key).second) {
                explore(State{next.z, next.y, next.indices}, steps);
            }
            steps.pop_back();
        }
    }

    // DFS visits children in increasing Y order, so the first chain that
    // reaches a cycle is the lexicographically least one.
    void record(const Cycle& z, const std::vector<FiltrationStep>& steps, const VertexSet& chain_indices) {
        if (found_.count(z)) return;

        ClassificationEntry entry;
        entry.cycle = z;
        entry.colength = sing_.colength(z);
        entry.multiplicity = sing_.multiplicity(z);
        entry.min_gens = sing_.min_gens(z);
        entry.module_indices = sing_.special_module_indices(z);
        entry.chain = Filtration{sing_.fundamental(), steps};

        if (entry.colength != steps.size() + 1) {
            throw InvariantError("colength " + entry.colength.str() + " of " + to_string(z) + " differs from chain length " +
                                 std::to_string(steps.size()) + " + 1");
        }
        if (rule_ == ChainRule::special) {
            if (!std::includes(entry.module_indices.begin(), entry.module_indices.end(), chain_indices.begin(),
                               chain_indices.end())) {
                throw InvariantError("chain indices of " + to_string(z) + " fail the coefficient test");
            }
            entry.kind = is_ulrich_cycle(sing_, z) ? CycleKind::both : CycleKind::special;
        } else {
            if (sing_.u_invariant(z) != 0) {
                throw InvariantError("Ulrich chain produced " + to_string(z) + " with U != 0");
            }
            entry.kind = entry.module_indices.empty() ? CycleKind::ulrich : CycleKind::both;
        }
        found_.emplace(z, std::move(entry));
    }

    const Singularity& sing_;
    ChainRule rule_;
    std::size_t max_steps_;
    bool cap_is_error_;
    std::map<Cycle, ClassificationEntry> found_;
    std::set<std::tuple<Cycle, Cycle, VertexSet>> visited_;
};

}  // namespace

std::vector<ClassificationEntry> enumerate_special(const DualGraph& graph, std::optional<std::size_t> max_colength) {
    require_rational(graph);
    if (max_colength && *max_colength < 1) throw DomainError("max_colength must be at least 1");
    const Singularity sing(graph);
    const std::size_t max_steps = max_colength ? *max_colength - 1 : std::numeric_limits<std::size_t>::max();
    return ChainSearch(sing, ChainRule::special, max_steps, false).run();
}

std::vector<ClassificationEntry> enumerate_ulrich(const DualGraph& graph, std::optional<std::size_t> max_steps) {
    require_rational(graph);
    const Singularity sing(graph);
    const std::size_t cap = max_steps.value_or(10 * graph.size());
    // On rational double points Ulrich and special cycles coincide.
    const ChainRule rule = sing.multiplicity() == 2 ? ChainRule::special : ChainRule::ulrich;
    auto entries = ChainSearch(sing, rule, cap, true).run();
    for (auto& entry : entries) {
        if (rule == ChainRule::special) entry.kind = CycleKind::both;
    }
    return entries;
}

std::vector<Cycle> brute_force_anti_nef(const DualGraph& graph, int bound) {
    if (bound < 1) throw DomainError("brute force bound must be at least 1");
    const Singularity sing(graph);
    const Cycle& z0 = sing.fundamental();
    const std::size_t r = graph.size();

    // Vertices in breadth-first order so that each new vertex has an assigned
    // neighbour and partial sums close early.
    std::vector<Vertex> order{0};
    std::vector<std::size_t> position(r, r);
    position[0] = 0;
    for (std::size_t head = 0; head < order.size(); ++head) {
        for (Vertex u : graph.neighbors(order[head])) {
            if (position[u] == r) {
                position[u] = order.size();
                order.push_back(u);
            }
        }
    }

    std::vector<std::int64_t> cap(r);
    for (Vertex v = 0; v < r; ++v) {
        const Integer c = bound * z0[v];
        if (c > 1'000'000'000) throw DomainError("brute force box too large");
        cap[v] = c.convert_to<std::int64_t>();
    }

    // partial[v] = w_v a_v + sum of assigned neighbours; neighbours only ever
    // add, so partial[v] > 0 can never recover.
    std::vector<std::int64_t> a(r, 0);
    std::vector<std::int64_t> partial(r, 0);
    std::vector<Cycle> out;

    auto descend = [&](auto&& self, std::size_t depth) -> void {
        if (depth == r) {
            if (std::any_of(a.begin(), a.end(), [](std::int64_t x) { return x != 0; })) {
                out.emplace_back(std::vector<Integer>(a.begin(), a.end()));
            }
            return;
        }
        const Vertex v = order[depth];
        const std::int64_t w = graph.weight(v);  // negative: the form is negative definite
        std::int64_t from_assigned = 0;
        std::int64_t hi = cap[v];
        for (Vertex u : graph.neighbors(v)) {
            if (position[u] < depth) {
                from_assigned += a[u];
                hi = std::min(hi, -partial[u]);
            }
        }
        const std::int64_t lo = (from_assigned + (-w) - 1) / (-w);
        for (std::int64_t value = lo; value <= hi; ++value) {
            a[v] = value;
            partial[v] = w * value + from_assigned;
            for (Vertex u : graph.neighbors(v)) {
                if (position[u] < depth) partial[u] += value;
            }
            self(self, depth + 1);
            for (Vertex u : graph.neighbors(v)) {
                if (position[u] < depth) partial[u] -= value;
            }
        }
        a[v] = 0;
        partial[v] = 0;
    };
    descend(descend, 0);

    std::sort(out.begin(), out.end());
    return out;
}

OracleResult oracle_classify(const DualGraph& graph, int bound) {
    require_rational(graph);
    const Singularity sing(graph);
    OracleResult result;
    for (const Cycle& z : brute_force_anti_nef(graph, bound)) {
        const bool special = !sing.special_module_indices(z).empty();
        if (special) result.special.push_back(z);
        const bool ulrich =
            sing.multiplicity() == 2 ? special : (sing.min_gens(z) > 2 && sing.u_invariant(z) == 0);
        if (ulrich) result.ulrich.push_back(z);
    }
    return result;
}

}  // namespace ratsing
