#pragma once

// Numerical invariants of anti-nef cycles on the minimal resolution of a
// rational surface singularity: the fundamental cycle, colength of the
// represented ideal, multiplicity, minimal number of generators, the Ulrich
// defect U(Z), the inf-filtration and the special-module index set.

#include <vector>

#include "ratsing/lattice.hpp"

namespace ratsing {

struct LauferTrace {
    Cycle cycle;
    // Vertices incremented after the initial reduced support, in order.
    std::vector<Vertex> additions;
};

// Minimal cycle Z with Supp(Z) = support and Z.E_i <= 0 for i in support.
// Starts from the reduced support and repeatedly adds E_i for the lowest i
// with Z.E_i > 0. Throws GraphError if the support is empty, disconnected,
// or carries a form that is not negative definite (the loop would not
// terminate).
LauferTrace laufer(const DualGraph& graph, const VertexSet& support);
Cycle fundamental_cycle(const DualGraph& graph, const VertexSet& support);
Cycle fundamental_cycle(const DualGraph& graph);

/// One step Z_k = Z_{k-1} + Y_k of a chain of anti-nef cycles.
struct FiltrationStep {
    Cycle increment;  // Y_k
    Cycle cycle;      // Z_k
    friend bool operator==(const FiltrationStep&, const FiltrationStep&) = default;
};

/// Chain Z_0 < Z_1 < ... < Z_s starting at the fundamental cycle.
struct Filtration {
    Cycle base;
    std::vector<FiltrationStep> steps;

    std::size_t length() const noexcept { return steps.size(); }
    const Cycle& top() const { return steps.empty() ? base : steps.back().cycle; }
    friend bool operator==(const Filtration&, const Filtration&) = default;
};

/// A dual graph together with its fundamental cycle, computed once.
///
/// Immutable after construction and safe to share between threads. All
/// cycle-level invariants that need Z_0 live here; the free functions below
/// build a temporary Singularity for one-off calls.
///
/// Every member taking "an anti-nef Z" checks that Z is anti-nef and
/// positive and throws PreconditionError otherwise.
class Singularity {
public:
    explicit Singularity(DualGraph graph);

    const DualGraph& graph() const noexcept { return graph_; }
    const Cycle& fundamental() const noexcept { return z0_; }

    // e = -Z_0^2; 2 exactly for rational double points.
    const Integer& multiplicity() const noexcept { return multiplicity_; }

    // l(A/I_Z) = 1 - p_a(Z).
    Integer colength(const Cycle& z) const;

    // e(I_Z) = -Z^2.
    Integer multiplicity(const Cycle& z) const;

    // mu(I_Z) = 1 - Z.Z_0. Not stated as a formula in the source theory; it
    // is the value that makes U(Z) = (mu - 1) l - e, which is how the
    // generator count enters the Ulrich criterion.
    Integer min_gens(const Cycle& z) const;

    // U(Z) = (Z_0.Z)(p_a(Z) - 1) + Z^2.
    Integer u_invariant(const Cycle& z) const;

    // Z_k = inf(Z, (k+1) Z_0), Y_k = Z_k - Z_{k-1}, for k = 1..s where s is
    // least with Z <= (s+1) Z_0.
    Filtration filtration(const Cycle& z) const;

    // {i : coeff_i(Z) = coeff_i(Z_0) * colength(Z)}. The inequality <= holds
    // for every coefficient on a rational graph; a violation throws
    // InvariantError.
    VertexSet special_module_indices(const Cycle& z) const;

    // Throws PreconditionError unless z is sized to the graph, positive and
    // anti-nef.
    void require_anti_nef(const Cycle& z) const;

private:
    DualGraph graph_;
    Cycle z0_;
    Integer multiplicity_;
};

Integer colength(const DualGraph& graph, const Cycle& z);
Integer multiplicity(const DualGraph& graph, const Cycle& z);
Integer min_gens(const DualGraph& graph, const Cycle& z);
Integer u_invariant(const DualGraph& graph, const Cycle& z);
Filtration filtration(const DualGraph& graph, const Cycle& z);
VertexSet special_module_indices(const DualGraph& graph, const Cycle& z);

}  // namespace ratsing
