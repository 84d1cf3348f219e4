#include <algorithm>

#include "ratsing/classify.hpp"

namespace ratsing {

namespace {

Cycle from_ints(std::initializer_list<int> values) {
    std::vector<Integer> coeffs(values.begin(), values.end());
    return Cycle(std::move(coeffs));
}

std::string z_label(int k) { return "Z_" + std::to_string(k); }

// A_n: coefficient of E_i (1-based) in Z_k is min(i, n+1-i, k+1).
std::vector<GoldenCycle> golden_a(int n) {
    const int m = n / 2;
    const int top = n % 2 == 0 ? m - 1 : m;
    std::vector<GoldenCycle> out;
    for (int k = 0; k <= top; ++k) {
        std::vector<Integer> coeffs;
        for (int i = 1; i <= n; ++i) coeffs.emplace_back(std::min({i, n + 1 - i, k + 1}));
        out.push_back({z_label(k), Cycle(std::move(coeffs)), k + 1});
    }
    return out;
}

// D_n chain cycles: E_i on the long arm (i <= n-2) gets min(i, 2k+2), both
// fork vertices get k+1.
Cycle d_chain_cycle(int n, int k) {
    std::vector<Integer> coeffs;
    for (int i = 1; i <= n - 2; ++i) coeffs.emplace_back(std::min(i, 2 * k + 2));
    coeffs.emplace_back(k + 1);
    coeffs.emplace_back(k + 1);
    return Cycle(std::move(coeffs));
}

std::vector<GoldenCycle> golden_d(int n) {
    std::vector<GoldenCycle> out;
    const std::size_t r = static_cast<std::size_t>(n);
    const int m = n / 2;
    if (n % 2 == 0) {
        for (int k = 0; k <= m - 2; ++k) out.push_back({z_label(k), d_chain_cycle(n, k), k + 1});
        const Cycle last = d_chain_cycle(n, m - 2);
        out.push_back({z_label(m - 1), last + Cycle::unit(r, r - 2), m});
        out.push_back({"Z'_" + std::to_string(m - 1), last + Cycle::unit(r, r - 1), m});
    } else {
        for (int k = 0; k <= m - 1; ++k) out.push_back({z_label(k), d_chain_cycle(n, k), k + 1});
    }
    out.push_back({"Z'_2", d_chain_cycle(n, 0) + Cycle::unit(r, 0), 2});
    return out;
}

std::vector<GoldenCycle> golden_e(int n) {
    switch (n) {
        case 6:
            return {{"Z_0", from_ints({1, 2, 3, 2, 1, 2}), 1}, {"Z_1", from_ints({2, 3, 4, 3, 2, 2}), 2}};
        case 7:
            return {{"Z_0", from_ints({2, 3, 4, 3, 2, 1, 2}), 1},
                    {"Z_1", from_ints({2, 4, 6, 5, 4, 2, 3}), 2},
                    {"Z_2", from_ints({2, 4, 6, 5, 4, 3, 3}), 3}};
        default:
            return {{"Z_0", from_ints({2, 4, 6, 5, 4, 3, 2, 3}), 1},
                    {"Z_1", from_ints({4, 7, 10, 8, 6, 4, 2, 5}), 2}};
    }
}

}  // namespace

std::vector<GoldenCycle> golden_table(AdeFamily family, int index) {
    check_ade_index(family, index);
    std::vector<GoldenCycle> out;
    switch (family) {
        case AdeFamily::A: out = golden_a(index); break;
        case AdeFamily::D: out = golden_d(index); break;
        case AdeFamily::E: out = golden_e(index); break;
    }
    std::sort(out.begin(), out.end(), [](const GoldenCycle& a, const GoldenCycle& b) { return a.cycle < b.cycle; });
    return out;
}

std::size_t expected_ulrich_count(AdeFamily family, int index) {
    check_ade_index(family, index);
    const auto m = static_cast<std::size_t>(index / 2);
    switch (family) {
        case AdeFamily::A: return index % 2 == 0 ? m : m + 1;
        case AdeFamily::D: return index % 2 == 0 ? m + 2 : m + 1;
        case AdeFamily::E: return index == 7 ? 3 : 2;
    }
    return 0;
}

RdpVerification verify_rdp(AdeFamily family, int index) {
    RdpVerification report;
    report.family = family;
    report.index = index;
    report.expected_count = expected_ulrich_count(family, index);
    report.golden = golden_table(family, index);
    report.enumerated = enumerate_ulrich(build_ade(family, index));

    for (const auto& g : report.golden) {
        auto hit = std::find_if(report.enumerated.begin(), report.enumerated.end(),
                                [&](const ClassificationEntry& e) { return e.cycle == g.cycle; });
        if (hit == report.enumerated.end()) {
            report.missing.push_back(g.cycle);
        } else if (hit->colength != g.colength) {
            report.colength_mismatches.push_back(g.label + " " + to_string(g.cycle) + ": expected colength " +
                                                 g.colength.str() + ", got " + hit->colength.str());
        }
    }
    for (const auto& e : report.enumerated) {
        auto hit = std::find_if(report.golden.begin(), report.golden.end(),
                                [&](const GoldenCycle& g) { return g.cycle == e.cycle; });
        if (hit == report.golden.end()) report.unexpected.push_back(e.cycle);
    }
    report.count_ok =
        report.enumerated.size() == report.expected_count && report.golden.size() == report.expected_count;
    return report;
}

}  // namespace ratsing
