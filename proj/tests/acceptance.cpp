// Acceptance report: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Time limits are part of each criterion.

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "golden_reference.hpp"
#include "property_checks.hpp"
#include "ratsing/classify.hpp"
#include "ratsing/invariants.hpp"

using namespace ratsing;
using namespace ratsing::testing;

namespace {

struct Outcome {
    std::vector<std::string> problems;
    std::string summary;
    void fail(const std::string& msg) { problems.push_back(msg); }
};

std::set<IntVec> cycle_set(const std::vector<ClassificationEntry>& entries) {
    std::set<IntVec> out;
    for (const auto& e : entries) out.insert(to_ints(e.cycle));
    return out;
}

std::set<IntVec> cycle_set(const std::vector<Cycle>& cycles) {
    std::set<IntVec> out;
    for (const auto& c : cycles) out.insert(to_ints(c));
    return out;
}

std::string name(const AdeCase& c) { return to_string(c.family) + std::to_string(c.index); }

std::string show(const std::set<IntVec>& s) {
    std::string out = "{";
    for (const auto& z : s) out += to_string(from_ints(z)) + " ";
    return out + "}";
}

void criterion_golden_tables(Outcome& o) {
    std::size_t n = 0;
    for (const auto& c : ade_cases(12)) {
        ++n;
        const auto expected = reference_golden(c.family, c.index);
        const auto entries = enumerate_ulrich(build_ade(c.family, c.index));
        std::vector<GoldenRow> got;
        for (const auto& e : entries) got.emplace_back(to_ints(e.cycle), e.colength.convert_to<std::int64_t>());
        std::sort(got.begin(), got.end());
        if (got != expected) o.fail(name(c) + ": enumerated Ulrich cycles differ from the closed-form table");
        std::vector<GoldenRow> table;
        for (const auto& g : golden_table(c.family, c.index))
            table.emplace_back(to_ints(g.cycle), g.colength.convert_to<std::int64_t>());
        std::sort(table.begin(), table.end());
        if (table != expected) o.fail(name(c) + ": golden_table differs from the closed-form table");
    }
    o.summary = std::to_string(n) + " ADE graphs";
}

void criterion_counts(Outcome& o) {
    std::size_t n = 0;
    auto check = [&](AdeFamily f, int index, std::size_t expected) {
        ++n;
        const auto got = enumerate_ulrich(build_ade(f, index)).size();
        if (got != expected)
            o.fail(to_string(f) + std::to_string(index) + ": " + std::to_string(got) + " Ulrich cycles, expected " +
                   std::to_string(expected));
    };
    for (std::size_t m = 1; m <= 6; ++m) {
        const int two_m = static_cast<int>(2 * m);
        check(AdeFamily::A, two_m, m);
        check(AdeFamily::A, two_m + 1, m + 1);
        if (two_m >= 4) check(AdeFamily::D, two_m, m + 2);
        if (two_m + 1 >= 4) check(AdeFamily::D, two_m + 1, m + 1);
    }
    check(AdeFamily::E, 6, 2);
    check(AdeFamily::E, 7, 3);
    check(AdeFamily::E, 8, 2);
    o.summary = std::to_string(n) + " graphs (D_n needs n >= 4)";
}

void criterion_cyclic(Outcome& o) {
    std::size_t n_graphs = 0;
    for (std::int64_t n = 3; n <= 50; ++n) {
        for (std::int64_t q = 2; q < n; ++q) {
            if (std::gcd(n, q) != 1) continue;
            const DualGraph g = build_cyclic(n, q);
            const auto& w = g.weights();
            if (std::none_of(w.begin(), w.end(), [](std::int64_t x) { return x <= -3; })) continue;
            ++n_graphs;
            const auto entries = enumerate_ulrich(g);
            const IntVec ones(g.size(), 1);
            if (entries.size() != 1 || to_ints(entries[0].cycle) != ones)
                o.fail("1/" + std::to_string(n) + "(1," + std::to_string(q) + "): " + show(cycle_set(entries)));
        }
    }
    o.summary = std::to_string(n_graphs) + " non-Gorenstein cyclic quotients";
}

void criterion_star(Outcome& o) {
    const DualGraph g = star_graph();
    const auto entries = enumerate_ulrich(g);
    const std::vector<IntVec> expected = {to_ints(star_z0()), to_ints(star_z1()), to_ints(star_z2())};
    const std::int64_t colengths[] = {1, 2, 3};
    const std::int64_t mults[] = {3, 6, 9};
    if (entries.size() != 3) {
        o.fail("expected 3 Ulrich cycles, got " + show(cycle_set(entries)));
        return;
    }
    for (std::size_t k = 0; k < 3; ++k) {
        const auto it = std::find_if(entries.begin(), entries.end(),
                                     [&](const ClassificationEntry& e) { return to_ints(e.cycle) == expected[k]; });
        if (it == entries.end()) {
            o.fail("missing Z_" + std::to_string(k));
            continue;
        }
        if (it->colength != colengths[k] || it->multiplicity != mults[k] || it->min_gens != 4)
            o.fail("invariants of Z_" + std::to_string(k) + " are " + it->colength.str() + "/" +
                   it->multiplicity.str() + "/" + it->min_gens.str());
    }
    const Cycle z0 = fundamental_cycle(g);
    std::set<IntVec> special;
    for (const auto& e : enumerate_special(g))
        if (componentwise_le(e.cycle, Integer(6) * z0)) special.insert(to_ints(e.cycle));
    if (special != cycle_set(entries)) o.fail("special set " + show(special) + " differs from Ulrich set");
    o.summary = "Ulrich = special = " + show(cycle_set(entries));
}

void criterion_cyclic_7_3(Outcome& o) {
    const DualGraph g = cyclic_7_3();
    const std::set<IntVec> special = cycle_set(enumerate_special(g));
    const std::set<IntVec> ulrich = cycle_set(enumerate_ulrich(g));
    if (special != std::set<IntVec>{{1, 1, 1}, {1, 2, 1}}) o.fail("special set " + show(special));
    if (ulrich != std::set<IntVec>{{1, 1, 1}}) o.fail("Ulrich set " + show(ulrich));
    const Integer u = u_invariant(g, Cycle{1, 2, 1});
    if (u == 0) o.fail("U((1,2,1)) = 0");
    o.summary = "special " + show(special) + ", Ulrich " + show(ulrich) + ", U((1,2,1)) = " + u.str();
}

void criterion_oracle(Outcome& o) {
    std::size_t n = 0;
    for (const auto& named : corpus(8, 12)) {
        ++n;
        const DualGraph& g = named.graph;
        const Cycle cap = Integer(6) * fundamental_cycle(g);
        const OracleResult oracle = oracle_classify(g, 6);
        auto restrict = [&](const std::vector<ClassificationEntry>& entries) {
            std::set<IntVec> out;
            for (const auto& e : entries)
                if (componentwise_le(e.cycle, cap)) out.insert(to_ints(e.cycle));
            return out;
        };
        const auto special = restrict(enumerate_special(g));
        const auto ulrich = restrict(enumerate_ulrich(g));
        if (special != cycle_set(oracle.special))
            o.fail(named.name + ": special " + show(special) + " vs oracle " + show(cycle_set(oracle.special)));
        if (ulrich != cycle_set(oracle.ulrich))
            o.fail(named.name + ": Ulrich " + show(ulrich) + " vs oracle " + show(cycle_set(oracle.ulrich)));
    }
    o.summary = std::to_string(n) + " corpus graphs at bound 6";
}

void criterion_properties(Outcome& o) {
    std::size_t total = 0;
    for (const auto& r : run_all_properties(20240611u)) {
        total += r.cases;
        if (!r.ok()) {
            std::string msg = r.name + ": " + std::to_string(r.failure_count) + " failures in " +
                              std::to_string(r.cases) + " cases";
            if (!r.failures.empty()) msg += " (" + r.failures.front() + ")";
            o.fail(msg);
        }
    }
    o.summary = "9 suites, " + std::to_string(total) + " cases";
}

void criterion_rdp_cross_check(Outcome& o) {
    std::size_t n_cycles = 0;
    for (const auto& c : ade_cases(8)) {
        const DualGraph g = build_ade(c.family, c.index);
        const Singularity sing(g);
        for (const auto& z : brute_force_anti_nef(g, 6)) {
            ++n_cycles;
            const bool u_zero = sing.u_invariant(z) == 0;
            if (u_zero != is_special_cycle(sing, z))
                o.fail(name(c) + " " + to_string(z) + ": U = " + sing.u_invariant(z).str() + ", special = " +
                       (is_special_cycle(sing, z) ? "yes" : "no"));
        }
    }
    o.summary = std::to_string(n_cycles) + " anti-nef cycles on ADE graphs n <= 8";
}

struct Criterion {
    int id;
    std::string title;
    double limit_seconds;
    std::function<void(Outcome&)> body;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "ADE Ulrich tables", 1.0, criterion_golden_tables},
        {2, "Ulrich ideal counts", 1.0, criterion_counts},
        {3, "non-Gorenstein cyclic quotients have only Z0", 5.0, criterion_cyclic},
        {4, "three-armed -3 star", 1.0, criterion_star},
        {5, "1/7(1,3) special vs Ulrich", 1.0, criterion_cyclic_7_3},
        {6, "oracle equivalence", 30.0, criterion_oracle},
        {7, "property suites", 60.0, criterion_properties},
        {8, "RDP: U = 0 iff special", 10.0, criterion_rdp_cross_check},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.body(o);
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs >= c.limit_seconds) {
            std::ostringstream os;
            os << "took " << secs << " s, limit " << c.limit_seconds << " s";
            o.fail(os.str());
        }
        const bool pass = o.problems.empty();
        if (!pass) ++failed;
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(3);
        line << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " [" << secs << " s / "
             << c.limit_seconds << " s] " << o.summary;
        std::cout << line.str() << '\n';
        for (std::size_t i = 0; i < o.problems.size() && i < 10; ++i) std::cout << "    " << o.problems[i] << '\n';
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed == 0 ? 0 : 1;
}
