// Acceptance suite: one PASS/FAIL line per criterion. All comparisons are
// exact rational equalities (tolerance zero); the time budgets below are the
// only other thresholds.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <iostream>
#include <sstream>
#include <sys/wait.h>
#include <string>

#include <json.hpp>

#include "mdl/canon.hpp"
#include "mdl/densest.hpp"
#include "mdl/enumerate.hpp"
#include "mdl/fan.hpp"
#include "mdl/graph_io.hpp"
#include "mdl/minor.hpp"
#include "mdl/named.hpp"
#include "mdl/spectrum.hpp"

using namespace mdl;

namespace {

// Time budgets in seconds.
constexpr double kBudgetLowSpectrum = 300;
constexpr double kBudgetOrderedList = 1;
constexpr double kBudgetRank4 = 300;
constexpr double kBudgetBlocks = 10;
constexpr double kBudgetFan = 120;
constexpr double kBudgetFriendship = 120;
constexpr double kBudgetApex = 10;
constexpr double kBudgetMulti = 300;
constexpr double kBudgetBackends = 600;
constexpr double kBudgetNegative = 300;

// Exact sizes named by the criteria.
constexpr int kLowSpectrumMaxN = 8;
constexpr int kRank4MaxN = 8;
constexpr int kFriendshipMaxIndex = 10;
constexpr int kFriendshipMinimalIndex = 4;
constexpr int kApexMaxN = 5;
constexpr int kApexMaxK = 5;
constexpr int kBackendMaxN = 7;

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& name, double budget, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > budget) {
        o.pass = false;
        o.detail += " (over budget " + std::to_string(budget) + "s)";
    }
    if (!o.pass) ++failures;
    std::printf("[%s] %2d %s: %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", id, name.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
}

std::string join(const std::vector<Rational>& values) {
    std::string out;
    for (const Rational& r : values) out += (out.empty() ? "" : ", ") + r.str();
    return out;
}

Outcome low_spectrum() {
    LowSpectrumOptions o;
    o.max_n = kLowSpectrumMaxN;
    const VerificationReport r = verify_low_density_classification(o);
    std::ostringstream d;
    d << r.count("density_minimal") << " density-minimal graphs, " << r.count("distinct_densities")
      << " densities, " << r.count("family_witnesses_checked") << " family witnesses, " << r.counterexamples.size()
      << " counterexamples";
    return {r.pass && r.counterexamples.empty() && r.count("family_witnesses_checked") > 0, d.str()};
}

Outcome ordered_list() {
    // The displayed sequence: six values below 1, then thirteen from 1 on.
    const std::vector<Rational> below{Rational(0), Rational(1, 2), Rational(2, 3), Rational(3, 4), Rational(4, 5),
                                      Rational(5, 6)};
    const std::vector<Rational> above{Rational(1),      Rational(6, 5),   Rational(5, 4),  Rational(9, 7),  Rational(4, 3),
                                      Rational(15, 11), Rational(11, 8),  Rational(18, 13), Rational(7, 5), Rational(24, 17),
                                      Rational(17, 12), Rational(27, 19), Rational(10, 7)};
    const auto got_below = predicted_low_spectrum(static_cast<int>(below.size()));
    const auto got_above = predicted_low_spectrum(static_cast<int>(above.size()), Rational(1));
    const bool ok = got_below == below && got_above == above;
    return {ok, std::to_string(got_below.size() + got_above.size()) + " values: " + join(got_below) + ", ..., " +
                    join(got_above)};
}

Outcome rank4() {
    const VerificationReport r = verify_rank4_lemma(kRank4MaxN);
    const bool witnesses = static_cast<std::int64_t>(r.witnesses.size()) == r.count("graphs");
    bool valid = true;
    for (const auto& [g6, minor] : r.witnesses) {
        const SimpleGraph g = decode_graph6(g6);
        const SimpleGraph h = decode_graph6(minor);
        valid = valid && density(h) >= Rational(3, 2) && is_minor(h, g).has_value();
    }
    return {r.pass && witnesses && valid, std::to_string(r.count("graphs")) + " biconnected rank-4 graphs, " +
                                              std::to_string(r.witnesses.size()) + " witnesses re-validated"};
}

Outcome five_blocks() {
    const VerificationReport r = verify_rank_minimal_blocks();
    std::set<std::string> expected;
    for (const SimpleGraph& g : expected_rank_minimal_blocks()) expected.insert(certificate(g));
    std::set<std::string> found;
    for (const auto& [g6, note] : r.witnesses) found.insert(certificate(decode_graph6(g6)));
    return {r.pass && found == expected && found.size() == 5,
            std::to_string(found.size()) + " graphs (K3, diamond, K4, book:3, P4+apex expected)"};
}

Outcome fan_structure() {
    const VerificationReport r = verify_fan_minimality();
    return {r.pass && r.count("fan_specs") > 0,
            std::to_string(r.count("fan_specs")) + " fan specs agree with brute force, " +
                std::to_string(r.counterexamples.size()) + " mismatches"};
}

Outcome friendship() {
    int exact = 0;
    int minimal = 0;
    bool ok = true;
    MinorSearchOptions wide;
    wide.guardrail = 2 * kFriendshipMinimalIndex + 3;
    for (int i = 1; i <= kFriendshipMaxIndex; ++i) {
        const int p[] = {i};
        const SimpleGraph f = make_named("friendship", p);
        const SimpleGraph fp = make_named("f_prime", p);
        const SimpleGraph fpp = make_named("f_double_prime", p);
        const bool densities = density(f) == Rational(3 * i, 2 * i + 1) && density(fp) == Rational(3 * i + 2, 2 * i + 2) &&
                               density(fpp) == Rational(3 * i + 4, 2 * i + 3);
        ok = ok && densities;
        exact += densities ? 3 : 0;
        if (i <= kFriendshipMinimalIndex)
            for (const SimpleGraph& g : {f, fp, fpp}) {
                const bool m = density_minimal(g, wide);
                ok = ok && m;
                minimal += m;
            }
    }
    return {ok, std::to_string(exact) + "/30 densities exact, " + std::to_string(minimal) + "/12 density-minimal"};
}

Outcome apex() {
    EnumerationFilter f;
    f.max_n = kApexMaxN;
    int checked = 0;
    bool ok = true;
    for (const SimpleGraph& g : enumerate(f)) {
        const std::int64_t n = g.order();
        const std::int64_t m = g.size();
        const Rational ceiling = Rational(1) + Rational(m, n);
        Rational previous(-1);
        for (int k = 1; k <= kApexMaxK; ++k) {
            const ApexFan a = apex_fan(g, k);
            const Rational measured = density(a.fan);
            const Rational formula((m + n) * k, n * k + 1);
            ok = ok && measured == a.predicted_density && measured == formula && measured > previous && measured < ceiling;
            previous = measured;
            ++checked;
        }
    }
    return {ok, std::to_string(checked) + " (G, k) pairs: exact, strictly increasing, below 1 + m/n"};
}

Outcome multigraph() {
    const VerificationReport r = verify_multigraph_classification();
    return {r.pass, std::to_string(r.count("multigraphs")) + " connected multigraphs, " +
                        std::to_string(r.count("density_minimal")) + " density-minimal, " +
                        std::to_string(r.count("random_families")) + " random families"};
}

Outcome backends() {
    EnumerationFilter f;
    f.max_n = kBackendMaxN;
    f.connectivity = Connectivity::Connected;
    MinorSearchOptions closure;
    DensestMemo fresh;
    closure.memo = &fresh;
    MinorSearchOptions branch;
    branch.backend = DensestBackend::BranchSets;
    int graphs = 0;
    int mismatches = 0;
    for_each_graph(f, [&](const SimpleGraph& g) {
        ++graphs;
        if (densest_minor_rank(g, closure).density != densest_minor_rank(g, branch).density) ++mismatches;
    });
    return {mismatches == 0, std::to_string(graphs) + " connected graphs, " + std::to_string(mismatches) + " mismatches"};
}

Outcome negative_control(const std::string& mdl_path) {
    LowSpectrumOptions o;
    o.max_n = kLowSpectrumMaxN;
    o.drop = {Rational(5, 4)};
    const VerificationReport r = verify_low_density_classification(o);
    const bool library = !r.pass && r.counterexamples.size() == 1 &&
                         are_isomorphic(decode_graph6(r.counterexamples[0]), make_named("diamond"));
    std::string detail = "library: " + std::to_string(r.counterexamples.size()) + " counterexample(s)";
    if (mdl_path.empty()) return {library, detail + "; CLI not checked"};

    const std::string cmd = mdl_path + " verify low-spectrum --max-n " + std::to_string(kLowSpectrumMaxN) +
                            " --drop 5/4 --format json --no-timing";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {false, detail + "; could not run CLI"};
    std::string out;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
    const int status = pclose(pipe);
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    const auto j = nlohmann::json::parse(out);
    const auto& ce = j.at("counterexamples");
    const bool cli = code == 1 && !j.at("pass").get<bool>() && ce.size() == 1 &&
                     are_isomorphic(decode_graph6(ce[0].get<std::string>()), make_named("diamond"));
    return {library && cli, detail + "; CLI exit " + std::to_string(code) + ", counterexample " +
                                (ce.empty() ? std::string("none") : ce[0].get<std::string>())};
}

}  // namespace

int main(int argc, char** argv) {
    const std::string mdl_path = argc > 1 ? argv[1] : "";
    criterion(1, "low-density classification", kBudgetLowSpectrum, low_spectrum);
    criterion(2, "ordered list reproduction", kBudgetOrderedList, ordered_list);
    criterion(3, "rank-4 lemma", kBudgetRank4, rank4);
    criterion(4, "five blocks", kBudgetBlocks, five_blocks);
    criterion(5, "fan structure", kBudgetFan, fan_structure);
    criterion(6, "friendship family densities", kBudgetFriendship, friendship);
    criterion(7, "apex-fan formula", kBudgetApex, apex);
    criterion(8, "multigraph classification", kBudgetMulti, multigraph);
    criterion(9, "backend equivalence", kBudgetBackends, backends);
    criterion(10, "negative control", kBudgetNegative, [&] { return negative_control(mdl_path); });
    std::printf("%d/10 criteria passed\n", 10 - failures);
    return failures == 0 ? 0 : 1;
}
