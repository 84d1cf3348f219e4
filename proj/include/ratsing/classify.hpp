#pragma once

// Special and Ulrich cycles on rational resolution graphs.
//
// A positive anti-nef cycle Z is special when some vertex satisfies
// coeff_i(Z) = coeff_i(Z_0) * colength(Z); it is Ulrich when U(Z) = 0
// (multiplicity >= 3) or, on rational double points, exactly when it is
// special. The enumerators build every such cycle as a chain
// Z_0 < Z_1 < ... < Z_s whose increments Y_k are fundamental cycles of
// connected components of {E : E.Z_{k-1} = 0}. The brute-force oracle
// checks the same sets pointwise over a box.

#include <optional>
#include <string>
#include <vector>

#include "ratsing/builders.hpp"
#include "ratsing/invariants.hpp"
#include "ratsing/lattice.hpp"

namespace ratsing {

enum class CycleKind { special, ulrich, both };

std::string to_string(CycleKind kind);

struct ClassificationEntry {
    Cycle cycle;
    Integer colength;
    Integer multiplicity;
    Integer min_gens;
    VertexSet module_indices;
    // Witness chain; chain.length() + 1 == colength.
    Filtration chain;
    CycleKind kind = CycleKind::special;
};

// The Singularity overloads assume the graph was already checked with
// require_rational; the DualGraph overloads check it and throw GraphError.
bool is_special_cycle(const Singularity& sing, const Cycle& z);
bool is_special_cycle(const DualGraph& graph, const Cycle& z);

// On multiplicity-3-or-more graphs throws UnsupportedInputError if
// min_gens(Z) <= 2, which is outside the hypothesis of the U criterion.
bool is_ulrich_cycle(const Singularity& sing, const Cycle& z);
bool is_ulrich_cycle(const DualGraph& graph, const Cycle& z);

// All special cycles with colength <= max_colength (no limit when empty),
// sorted lexicographically, Z_0 first among equals. Each cycle appears once
// with the lexicographically least chain of increments that reaches it.
std::vector<ClassificationEntry> enumerate_special(const DualGraph& graph,
                                                   std::optional<std::size_t> max_colength = std::nullopt);

// All Ulrich cycles, sorted lexicographically. Chains longer than max_steps
// (default 10 * vertex count) raise TruncationError.
std::vector<ClassificationEntry> enumerate_ulrich(const DualGraph& graph,
                                                  std::optional<std::size_t> max_steps = std::nullopt);

// Every anti-nef Z with 0 < Z <= bound * Z_0, sorted. Exhaustive over the box
// with pruning of partial assignments.
std::vector<Cycle> brute_force_anti_nef(const DualGraph& graph, int bound);

struct OracleResult {
    std::vector<Cycle> special;
    std::vector<Cycle> ulrich;
};

// Pointwise filter of brute_force_anti_nef by the coefficient test and the
// U criterion. No chain reasoning; reference for the enumerators.
OracleResult oracle_classify(const DualGraph& graph, int bound);

struct GoldenCycle {
    std::string label;
    Cycle cycle;
    Integer colength;
};

// Closed-form Ulrich cycles of the rational double points, sorted by cycle.
std::vector<GoldenCycle> golden_table(AdeFamily family, int index);

// Number of Ulrich ideals: m, m+1, m+2, m+1 for A_2m, A_2m+1, D_2m, D_2m+1;
// 2, 3, 2 for E6, E7, E8.
std::size_t expected_ulrich_count(AdeFamily family, int index);

struct RdpVerification {
    AdeFamily family = AdeFamily::A;
    int index = 0;
    std::size_t expected_count = 0;
    std::vector<ClassificationEntry> enumerated;
    std::vector<GoldenCycle> golden;
    std::vector<Cycle> missing;     // golden but not enumerated
    std::vector<Cycle> unexpected;  // enumerated but not golden
    std::vector<std::string> colength_mismatches;
    bool count_ok = false;

    bool matches() const noexcept {
        return missing.empty() && unexpected.empty() && colength_mismatches.empty() && count_ok;
    }
};

RdpVerification verify_rdp(AdeFamily family, int index);

}  // namespace ratsing
