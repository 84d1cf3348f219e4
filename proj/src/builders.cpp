#include "ratsing/builders.hpp"

#include <charconv>
#include <numeric>
#include <set>
#include <sstream>

#include "ratsing/graph_algo.hpp"
#include "ratsing/invariants.hpp"

namespace ratsing {

std::string to_string(AdeFamily family) {
    switch (family) {
        case AdeFamily::A: return "A";
        case AdeFamily::D: return "D";
        case AdeFamily::E: return "E";
    }
    return "?";
}

std::optional<AdeFamily> parse_ade_family(std::string_view text) {
    if (text == "A" || text == "a") return AdeFamily::A;
    if (text == "D" || text == "d") return AdeFamily::D;
    if (text == "E" || text == "e") return AdeFamily::E;
    return std::nullopt;
}

void check_ade_index(AdeFamily family, int index) {
    const bool ok = (family == AdeFamily::A && index >= 1) || (family == AdeFamily::D && index >= 4) ||
                    (family == AdeFamily::E && index >= 6 && index <= 8);
    if (!ok) {
        throw DomainError("no Dynkin diagram of type " + to_string(family) + std::to_string(index));
    }
}

DualGraph chain_graph(const std::vector<std::int64_t>& weights) {
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < weights.size(); ++v) edges.emplace_back(v, v + 1);
    return DualGraph(weights, std::move(edges));
}

DualGraph build_ade(AdeFamily family, int index) {
    check_ade_index(family, index);
    const auto n = static_cast<std::size_t>(index);
    std::vector<Edge> edges;
    switch (family) {
        case AdeFamily::A:
            for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
            break;
        case AdeFamily::D:
            for (Vertex v = 0; v + 3 < n; ++v) edges.emplace_back(v, v + 1);
            edges.emplace_back(n - 3, n - 2);
            edges.emplace_back(n - 3, n - 1);
            break;
        case AdeFamily::E:
            for (Vertex v = 0; v + 2 < n; ++v) edges.emplace_back(v, v + 1);
            edges.emplace_back(2, n - 1);
            break;
    }
    return DualGraph(std::vector<std::int64_t>(n, -2), std::move(edges));
}

std::vector<std::int64_t> hj_expansion(std::int64_t n, std::int64_t q) {
    if (q < 1 || q >= n) {
        throw DomainError("continued fraction needs 1 <= q < n, got n=" + std::to_string(n) + " q=" + std::to_string(q));
    }
    if (std::gcd(n, q) != 1) {
        throw DomainError("continued fraction needs gcd(n, q) = 1, got n=" + std::to_string(n) +
                          " q=" + std::to_string(q));
    }
    std::vector<std::int64_t> out;
    while (q > 0) {
        const std::int64_t b = (n + q - 1) / q;
        out.push_back(b);
        const std::int64_t next = b * q - n;
        n = q;
        q = next;
    }
    return out;
}

DualGraph build_cyclic(std::int64_t n, std::int64_t q) {
    std::vector<std::int64_t> weights;
    for (std::int64_t b : hj_expansion(n, q)) weights.push_back(-b);
    return chain_graph(weights);
}

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
    std::vector<std::string_view> words;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) words.push_back(line.substr(i, j - i));
        i = j;
    }
    return words;
}

std::int64_t parse_int(std::string_view word, std::size_t line_no) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc{} || ptr != word.data() + word.size()) {
        throw ParseError(line_no, "expected an integer, got '" + std::string(word) + "'");
    }
    return value;
}

void expect_arity(const std::vector<std::string_view>& words, std::size_t arity, std::size_t line_no) {
    if (words.size() != arity + 1) {
        throw ParseError(line_no, "'" + std::string(words[0]) + "' takes " + std::to_string(arity) + " argument(s)");
    }
}

}  // namespace

DualGraph parse_graph(std::string_view text) {
    std::optional<std::size_t> count;
    std::vector<std::int64_t> weights;
    std::vector<bool> weight_set;
    std::vector<Edge> edges;
    std::set<Edge> seen_edges;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const auto words = split_words(line);
        if (words.empty()) continue;

        const std::string_view directive = words[0];
        if (directive == "vertices") {
            if (count) throw ParseError(line_no, "'vertices' given twice");
            expect_arity(words, 1, line_no);
            const std::int64_t r = parse_int(words[1], line_no);
            if (r < 1) throw ParseError(line_no, "vertex count must be at least 1");
            count = static_cast<std::size_t>(r);
            weights.assign(*count, -2);
            weight_set.assign(*count, false);
            continue;
        }
        if (!count) throw ParseError(line_no, "'vertices' must be the first directive");

        auto vertex = [&](std::string_view word) {
            const std::int64_t i = parse_int(word, line_no);
            if (i < 1 || static_cast<std::size_t>(i) > *count) {
                throw ParseError(line_no, "vertex " + std::string(word) + " outside 1.." + std::to_string(*count));
            }
            return static_cast<Vertex>(i - 1);
        };

        if (directive == "weight") {
            expect_arity(words, 2, line_no);
            const Vertex v = vertex(words[1]);
            const std::int64_t w = parse_int(words[2], line_no);
            if (w > -2) {
                throw ParseError(line_no, "weight " + std::to_string(w) + " > -2 is not allowed on a minimal resolution");
            }
            if (weight_set[v]) throw ParseError(line_no, "weight of vertex " + std::to_string(v + 1) + " given twice");
            weight_set[v] = true;
            weights[v] = w;
        } else if (directive == "edge") {
            expect_arity(words, 2, line_no);
            const Vertex a = vertex(words[1]);
            const Vertex b = vertex(words[2]);
            if (a == b) throw ParseError(line_no, "self-loop at vertex " + std::to_string(a + 1));
            const Edge key{std::min(a, b), std::max(a, b)};
            if (!seen_edges.insert(key).second) {
                throw ParseError(line_no, "duplicate edge {" + std::to_string(key.first + 1) + "," +
                                              std::to_string(key.second + 1) + "}");
            }
            edges.push_back(key);
        } else {
            throw ParseError(line_no, "unknown directive '" + std::string(directive) + "'");
        }
    }
    if (!count) throw ParseError(line_no, "missing 'vertices' directive");
    return DualGraph(std::move(weights), std::move(edges));
}

std::string serialize_graph(const DualGraph& graph) {
    std::ostringstream os;
    os << "vertices " << graph.size() << '\n';
    for (Vertex v = 0; v < graph.size(); ++v) {
        if (graph.weight(v) != -2) os << "weight " << v + 1 << ' ' << graph.weight(v) << '\n';
    }
    for (auto [a, b] : graph.edges()) os << "edge " << a + 1 << ' ' << b + 1 << '\n';
    return os.str();
}

namespace {

// Box sizes above this are skipped by the spot check.
constexpr std::uint64_t kSpotCheckBoxLimit = 200'000'000;

// Odometer over 0 <= Z <= 2 Z_0 with incremental updates of Z^2, K.Z and the
// vector Z.E_v, all in 64-bit arithmetic. Returns the first positive Z with
// p_a(Z) > 0, if any.
std::optional<std::vector<std::int64_t>> find_positive_genus(const DualGraph& graph, const Cycle& z0) {
    const std::size_t r = graph.size();
    std::vector<std::int64_t> hi(r);
    std::uint64_t box = 1;
    for (Vertex v = 0; v < r; ++v) {
        const Integer cap = 2 * z0[v];
        if (cap > 1'000'000) return std::nullopt;
        hi[v] = cap.convert_to<std::int64_t>();
        box *= static_cast<std::uint64_t>(hi[v] + 1);
        if (box > kSpotCheckBoxLimit) return std::nullopt;
    }

    std::vector<std::int64_t> a(r, 0);
    std::vector<std::int64_t> ze(r, 0);
    std::int64_t square = 0;
    std::int64_t canonical = 0;

    auto shift = [&](Vertex v, std::int64_t d) {
        const std::int64_t w = graph.weight(v);
        square += 2 * d * ze[v] + d * d * w;
        canonical += d * (-w - 2);
        ze[v] += d * w;
        for (Vertex u : graph.neighbors(v)) ze[u] += d;
        a[v] += d;
    };

    for (;;) {
        Vertex v = 0;
        while (v < r && a[v] == hi[v]) {
            shift(v, -hi[v]);
            ++v;
        }
        if (v == r) return std::nullopt;
        shift(v, 1);
        // p_a(Z) > 0  <=>  Z^2 + K.Z > -2
        if (square + canonical > -2) return a;
    }
}

}  // namespace

ValidationReport validate(const DualGraph& graph, const ValidateOptions& options) {
    ValidationReport report;
    for (Vertex v = 0; v < graph.size(); ++v) {
        if (graph.weight(v) > -2) {
            report.failures.push_back("vertex " + std::to_string(v + 1) + " has weight " +
                                      std::to_string(graph.weight(v)) + " > -2 (not a minimal resolution)");
        }
    }

    const VertexSet everything = all_vertices(graph);
    report.connected = is_connected(graph, everything);
    if (!report.connected) report.failures.push_back("graph is not connected");

    report.negative_definite = is_negative_definite(graph, everything);
    if (!report.negative_definite) report.failures.push_back("intersection form is not negative definite");

    report.tree = report.connected && graph.edges().size() + 1 == graph.size();

    if (!report.connected || !report.negative_definite) {
        report.failures.push_back("rationality undetermined: needs a connected negative definite graph");
        return report;
    }

    const Cycle z0 = fundamental_cycle(graph);
    report.multiplicity = -intersection(graph, z0, z0);
    const Integer genus = virtual_genus(graph, z0);
    report.rational = genus == 0;
    if (!report.rational) {
        std::ostringstream os;
        os << "not rational: p_a(Z_0) = " << genus << " for Z_0 = " << z0;
        report.failures.push_back(os.str());
    }

    report.gorenstein = report.rational && *report.multiplicity == 2;
    if (*report.multiplicity == 2 && !report.rational) {
        report.failures.push_back("multiplicity 2 on a non-rational graph; Gorenstein test not applicable");
    }

    if (report.rational && graph.size() <= options.genus_spot_check_max_vertices) {
        if (auto bad = find_positive_genus(graph, z0)) {
            std::vector<Integer> coeffs(bad->begin(), bad->end());
            std::ostringstream os;
            os << "positive cycle " << Cycle(std::move(coeffs)) << " <= 2 Z_0 has p_a > 0";
            report.failures.push_back(os.str());
        }
    }
    return report;
}

void require_rational(const DualGraph& graph) {
    const ValidationReport report = validate(graph, ValidateOptions{0});
    if (!report.ok()) {
        std::string message = "graph is not a valid rational resolution graph:";
        for (const auto& f : report.failures) message += "\n  " + f;
        throw GraphError(message);
    }
}

}  // namespace ratsing
