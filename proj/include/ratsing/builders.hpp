#pragma once

// Constructing and validating dual graphs: ADE Dynkin diagrams, cyclic
// quotient chains from Hirzebruch-Jung continued fractions, and graphs read
// from the line-oriented text format.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ratsing/lattice.hpp"

namespace ratsing {

enum class AdeFamily { A, D, E };

std::string to_string(AdeFamily family);
std::optional<AdeFamily> parse_ade_family(std::string_view text);

// Throws DomainError unless A: n >= 1, D: n >= 4, E: n in {6,7,8}.
void check_ade_index(AdeFamily family, int index);

// All weights -2.
//   A_n: path E_1 - ... - E_n
//   D_n: path E_1 - ... - E_{n-2}, with E_{n-1} and E_n both on E_{n-2}
//   E_n: path E_1 - ... - E_{n-1}, with E_n on E_3
DualGraph build_ade(AdeFamily family, int index);

// Path with the given self-intersections.
DualGraph chain_graph(const std::vector<std::int64_t>& weights);

// n/q = b_1 - 1/(b_2 - 1/(... - 1/b_r)) with every b_i >= 2.
// Requires 1 <= q < n and gcd(n, q) = 1.
std::vector<std::int64_t> hj_expansion(std::int64_t n, std::int64_t q);

// Minimal resolution chain of the cyclic quotient 1/n(1,q): weights -b_i.
DualGraph build_cyclic(std::int64_t n, std::int64_t q);

// Text format, one directive per line, '#' to end of line is a comment:
//   vertices <r>        required, first directive, r >= 1
//   weight <i> <w>      1-based i, w <= -2, default -2, once per vertex
//   edge <i> <j>        1-based, i != j, once per unordered pair
// Throws ParseError (with line number) on malformed input.
DualGraph parse_graph(std::string_view text);

// Inverse of parse_graph: emits `weight` lines only for weights other
// than -2, edges in sorted order.
std::string serialize_graph(const DualGraph& graph);

struct ValidationReport {
    bool connected = false;
    bool negative_definite = false;
    bool tree = false;
    bool rational = false;    // p_a(Z_0) = 0
    bool gorenstein = false;  // rational and -Z_0^2 = 2
    std::optional<Integer> multiplicity;
    std::vector<std::string> failures;

    // Usable as input for classification: connected, negative definite,
    // rational, and every weight <= -2.
    bool ok() const noexcept { return connected && negative_definite && rational && failures.empty(); }
};

struct ValidateOptions {
    // Additionally check p_a(Z) <= 0 for every positive Z <= 2 Z_0 when the
    // graph has at most this many vertices. 0 disables the check.
    std::size_t genus_spot_check_max_vertices = 8;
};

ValidationReport validate(const DualGraph& graph, const ValidateOptions& options = {});

// Throws GraphError with the report's findings unless validate(graph).ok().
// Skips the genus spot check.
void require_rational(const DualGraph& graph);

}  // namespace ratsing
