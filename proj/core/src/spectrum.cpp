#include "mdl/spectrum.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>

#include "mdl/canon.hpp"
#include "mdl/enumerate.hpp"
#include "mdl/error.hpp"
#include "mdl/fan.hpp"
#include "mdl/graph_io.hpp"
#include "mdl/multigraph.hpp"
#include "mdl/named.hpp"
#include "mdl/structure.hpp"

namespace mdl {

namespace {

const Rational kThreeHalves(3, 2);

class Stopwatch {
public:
    [[nodiscard]] std::int64_t ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void check_spectrum_guardrail(int max_n, int guardrail) {
    if (max_n < 1) throw InvalidArgument("max_n must be at least 1");
    if (max_n > guardrail)
        throw GuardrailExceeded("max_n " + std::to_string(max_n) + " exceeds guardrail " + std::to_string(guardrail));
}

// Deleting a vertex of degree d leaves (m-d)/(n-1), which is at least m/n
// unless d > m/n.
bool degrees_allow_minimality(const SimpleGraph& g) {
    if (g.order() == 1) return true;
    const std::int64_t m = g.size();
    const std::int64_t n = g.order();
    for (int v = 0; v < g.order(); ++v)
        if (static_cast<std::int64_t>(g.degree(v)) * n <= m) return false;
    return true;
}

std::optional<std::int64_t> solve_index(std::int64_t num, std::int64_t den) {
    if (den == 0) return std::nullopt;
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num % den != 0) return std::nullopt;
    return num / den;
}

}  // namespace

std::vector<Rational> SpectrumReport::densities() const {
    std::vector<Rational> out;
    for (const SpectrumEntry& e : entries)
        if (out.empty() || out.back() != e.density) out.push_back(e.density);
    return out;
}

std::vector<SpectrumEntry> SpectrumReport::below_threshold() const {
    std::vector<SpectrumEntry> out;
    for (const SpectrumEntry& e : entries)
        if (e.density < kThreeHalves) out.push_back(e);
    return out;
}

SpectrumReport enumerate_density_minimal(int max_n, std::optional<Rational> cap, const MinorSearchOptions& options,
                                         int guardrail) {
    check_spectrum_guardrail(max_n, guardrail);
    SpectrumReport report;
    report.max_n = max_n;
    report.cap = cap;
    EnumerationFilter filter;
    filter.max_n = max_n;
    filter.connectivity = Connectivity::Connected;
    if (cap) {
        filter.max_density = *cap;
        filter.strict_density = true;
    }
    for_each_graph(filter, [&](const SimpleGraph& g) {
        ++report.examined;
        if (!degrees_allow_minimality(g)) return;
        if (!density_minimal(g, options)) return;
        report.entries.push_back({density(g), g, encode_graph6(g)});
    });
    std::sort(report.entries.begin(), report.entries.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) {
        if (a.density != b.density) return a.density < b.density;
        if (a.order() != b.order()) return a.order() < b.order();
        return a.graph6 < b.graph6;
    });
    return report;
}

Rational low_family_density(LowFamily family, int i) {
    if (i < low_family_first(family)) throw InvalidArgument("family index out of range");
    switch (family) {
        case LowFamily::Tree: return {i, i + 1};
        case LowFamily::Friendship: return {3 * i, 2 * i + 1};
        case LowFamily::FriendshipPrime: return {3 * i + 2, 2 * i + 2};
        case LowFamily::FriendshipDoublePrime: return {3 * i + 4, 2 * i + 3};
    }
    throw InvalidArgument("unknown family");
}

int low_family_order(LowFamily family, int i) {
    switch (family) {
        case LowFamily::Tree: return i + 1;
        case LowFamily::Friendship: return 2 * i + 1;
        case LowFamily::FriendshipPrime: return 2 * i + 2;
        case LowFamily::FriendshipDoublePrime: return 2 * i + 3;
    }
    throw InvalidArgument("unknown family");
}

int low_family_first(LowFamily family) { return family == LowFamily::Tree ? 0 : 1; }

std::string low_family_name(LowFamily family) {
    switch (family) {
        case LowFamily::Tree: return "path";
        case LowFamily::Friendship: return "friendship";
        case LowFamily::FriendshipPrime: return "f_prime";
        case LowFamily::FriendshipDoublePrime: return "f_double_prime";
    }
    throw InvalidArgument("unknown family");
}

SimpleGraph low_family_witness(LowFamily family, int i) {
    if (family == LowFamily::Tree && i == 0) return SimpleGraph(1);
    const int params[] = {i};
    return make_named(low_family_name(family), params);
}

bool in_low_spectrum(const Rational& r) {
    if (r < Rational(0) || r >= kThreeHalves) return false;
    const std::int64_t p = r.num();
    const std::int64_t q = r.den();
    if (p + 1 == q || p == 0) return true;
    // Solve each family formula for its index and require an integer in range.
    if (auto i = solve_index(p, 3 * q - 2 * p); i && *i >= 1) return true;
    if (auto i = solve_index(2 * q - 2 * p, 2 * p - 3 * q); i && *i >= 1) return true;
    if (auto i = solve_index(4 * q - 3 * p, 2 * p - 3 * q); i && *i >= 1) return true;
    return false;
}

std::vector<Rational> predicted_low_spectrum(int count, const Rational& from) {
    if (count < 1) throw InvalidArgument("count must be at least 1");
    std::vector<Rational> out;
    if (from < Rational(1)) {
        // Trees only: i/(i+1) increases toward 1.
        for (int i = 0; static_cast<int>(out.size()) < count; ++i) {
            Rational r(i, i + 1);
            if (r >= from) out.push_back(r);
        }
        return out;
    }
    for (int top = 8;; top *= 2) {
        // Values up to index `top` are complete below the smallest value any
        // family reaches at index top+1.
        std::set<Rational> values;
        Rational horizon = kThreeHalves;
        for (LowFamily f : kLowFamilies) {
            if (f == LowFamily::Tree) continue;
            for (int i = low_family_first(f); i <= top; ++i) values.insert(low_family_density(f, i));
            horizon = std::min(horizon, low_family_density(f, top + 1));
        }
        values.insert(Rational(1));
        out.clear();
        for (const Rational& r : values)
            if (r >= from && r < horizon) out.push_back(r);
        if (static_cast<int>(out.size()) >= count) {
            out.resize(static_cast<std::size_t>(count));
            return out;
        }
        if (top > (1 << 20)) throw InvalidArgument("count too large");
    }
}

VerificationReport verify_low_density_classification(const LowSpectrumOptions& options) {
    Stopwatch clock;
    VerificationReport report;
    report.check = "low-spectrum";
    report.add_param("max_n", std::to_string(options.max_n));
    report.add_param("cap", "3/2");
    std::string dropped;
    for (const Rational& r : options.drop) dropped += (dropped.empty() ? "" : ",") + r.str();
    if (!dropped.empty()) report.add_param("drop", dropped);

    auto predicted = [&](const Rational& r) {
        return in_low_spectrum(r) && std::find(options.drop.begin(), options.drop.end(), r) == options.drop.end();
    };

    SpectrumReport spectrum = enumerate_density_minimal(options.max_n, kThreeHalves, options.search);
    std::set<std::string> found;
    std::int64_t unexpected = 0;
    for (const SpectrumEntry& e : spectrum.entries) {
        found.insert(e.graph6);
        if (!predicted(e.density)) {
            ++unexpected;
            report.fail(e.graph6);
        }
    }

    std::int64_t checked = 0;
    std::int64_t missing = 0;
    std::map<Rational, int> family_order;
    for (LowFamily f : kLowFamilies) {
        for (int i = low_family_first(f); low_family_order(f, i) <= options.max_n; ++i) {
            const Rational d = low_family_density(f, i);
            if (!predicted(d) || d >= kThreeHalves) continue;
            ++checked;
            auto [it, fresh] = family_order.try_emplace(d, low_family_order(f, i));
            if (!fresh) it->second = std::min(it->second, low_family_order(f, i));
            SimpleGraph witness = canonical_form(low_family_witness(f, i)).graph;
            if (!found.contains(encode_graph6(witness))) {
                ++missing;
                report.fail(encode_graph6(witness));
                report.notes.push_back(low_family_name(f) + ":" + std::to_string(i) + " not found");
            }
        }
    }
    // Densities realized on fewer vertices than their smallest family witness.
    std::set<Rational> early;
    for (const SpectrumEntry& e : spectrum.entries) {
        auto it = family_order.find(e.density);
        if (predicted(e.density) && (it == family_order.end() || e.order() < it->second)) early.insert(e.density);
    }
    for (const Rational& r : early) report.notes.push_back("early realization of " + r.str());

    report.add_count("graphs_examined", spectrum.examined);
    report.add_count("density_minimal", static_cast<std::int64_t>(spectrum.entries.size()));
    report.add_count("distinct_densities", static_cast<std::int64_t>(spectrum.densities().size()));
    report.add_count("family_witnesses_checked", checked);
    report.add_count("unpredicted", unexpected);
    report.add_count("missing_witnesses", missing);
    report.wall_time_ms = clock.ms();
    return report;
}

VerificationReport verify_rank4_lemma(int max_n, const MinorSearchOptions& options) {
    check_spectrum_guardrail(max_n, kSpectrumGuardrail);
    Stopwatch clock;
    VerificationReport report;
    report.check = "rank4";
    report.add_param("max_n", std::to_string(max_n));
    report.add_param("rank", "4");
    report.notes.push_back("rank above four reduces to rank four through a prefix of an ear decomposition");
    EnumerationFilter filter;
    filter.max_n = max_n;
    filter.connectivity = Connectivity::Biconnected;
    filter.exact_rank = 4;
    std::int64_t graphs = 0;
    std::int64_t self_dense = 0;
    for_each_graph(filter, [&](const SimpleGraph& g) {
        ++graphs;
        if (density(g) >= kThreeHalves) {
            ++self_dense;
            report.witnesses.emplace_back(encode_graph6(g), encode_graph6(g));
            return;
        }
        DensestMinor best = densest_minor(g, options);
        if (best.density >= kThreeHalves)
            report.witnesses.emplace_back(encode_graph6(g), encode_graph6(best.minor));
        else
            report.fail(encode_graph6(g));
    });
    report.add_count("graphs", graphs);
    report.add_count("self_dense", self_dense);
    report.add_count("failures", static_cast<std::int64_t>(report.counterexamples.size()));
    report.wall_time_ms = clock.ms();
    return report;
}

std::vector<SimpleGraph> expected_rank_minimal_blocks() {
    SimpleGraph fan(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}});
    return {make_named("complete:3"), make_named("diamond"), make_named("complete:4"), make_named("book:3"), fan};
}

VerificationReport verify_rank_minimal_blocks() {
    Stopwatch clock;
    VerificationReport report;
    report.check = "blocks";
    report.add_param("ranks", "1..3");
    report.add_param("max_n", "2r+1");
    std::set<std::string> expected;
    for (const SimpleGraph& g : expected_rank_minimal_blocks()) expected.insert(encode_graph6(canonical_form(g).graph));
    std::set<std::string> found;
    for (int r = 1; r <= 3; ++r) {
        EnumerationFilter filter;
        filter.max_n = 2 * r + 1;
        filter.connectivity = Connectivity::Biconnected;
        filter.exact_rank = r;
        std::int64_t hits = 0;
        for_each_graph(filter, [&](const SimpleGraph& g) {
            if (!is_rank_minimal(g)) return;
            ++hits;
            found.insert(encode_graph6(g));
            report.witnesses.emplace_back(encode_graph6(g), "rank " + std::to_string(r));
        });
        report.add_count("rank" + std::to_string(r), hits);
    }
    for (const std::string& g6 : found)
        if (!expected.contains(g6)) report.fail(g6);
    for (const std::string& g6 : expected)
        if (!found.contains(g6)) {
            report.fail(g6);
            report.notes.push_back("expected block not found: " + g6);
        }
    report.add_count("found", static_cast<std::int64_t>(found.size()));
    report.wall_time_ms = clock.ms();
    return report;
}

std::optional<Rational> next_density(const Rational& threshold, int max_n, const MinorSearchOptions& options) {
    check_spectrum_guardrail(max_n, kSpectrumGuardrail);
    // Raise an exclusive cap in steps of 1/2 so the first hit is the smallest.
    const Rational densest_possible(max_n - 1, 2);
    for (Rational cap = kThreeHalves;; cap = cap + Rational(1, 2)) {
        if (cap <= threshold) continue;
        std::optional<Rational> best;
        for (const SpectrumEntry& e : enumerate_density_minimal(max_n, cap, options).entries)
            if (e.density > threshold && (!best || e.density < *best)) best = e.density;
        if (best) return best;
        if (cap > densest_possible) return std::nullopt;
    }
}

VerificationReport verify_fan_minimality(const FanCheckLimits& limits, const MinorSearchOptions& options) {
    Stopwatch clock;
    VerificationReport report;
    report.check = "fan-minimality";
    report.add_param("max_base", std::to_string(limits.max_base));
    report.add_param("max_shared", std::to_string(limits.max_shared));
    report.add_param("max_fan", std::to_string(limits.max_fan));
    EnumerationFilter filter;
    filter.max_n = limits.max_base;
    filter.min_n = 2;
    filter.connectivity = Connectivity::Connected;
    std::int64_t specs = 0;
    std::int64_t skipped = 0;
    for_each_graph(filter, [&](const SimpleGraph& base) {
        const VertexMask all = base.vertex_mask();
        std::set<std::string> seen;  // one shared set per orbit class
        for (VertexMask s = 0; s < all; ++s) {
            if (std::popcount(s) > limits.max_shared) continue;
            try {
                check_fan_hypotheses(base, s, true);
            } catch (const FanHypothesisError&) {
                ++skipped;
                continue;
            }
            std::vector<int> colors(static_cast<std::size_t>(base.order()), 0);
            for (int v : mask_to_vector(s)) colors[static_cast<std::size_t>(v)] = 1;
            if (!seen.insert(canonical_form(base, colors).certificate).second) continue;
            for (int k = 1; fan_order(FanSpec{base, s, k}) <= limits.max_fan; ++k) {
                FanSpec spec{base, s, k};
                ++specs;
                const Rational predicted = densest_fan_minor(spec, options.guardrail).density;
                const SimpleGraph fan = build_fan(spec);
                const Rational measured = densest_minor_rank(fan, options).density;
                if (predicted != measured) {
                    report.fail(encode_graph6(fan));
                    report.notes.push_back(encode_graph6(base) + " S=" + std::to_string(s) + " k=" +
                                           std::to_string(k) + ": " + predicted.str() + " vs " + measured.str());
                }
            }
        }
    });
    report.add_count("fan_specs", specs);
    report.add_count("shared_sets_rejected", skipped);
    report.wall_time_ms = clock.ms();
    return report;
}

namespace {

Multigraph random_multigraph(std::mt19937_64& rng, int max_n, int max_m) {
    std::uniform_int_distribution<int> pick_n(1, max_n);
    const int n = pick_n(rng);
    Multigraph g(n);
    std::uniform_int_distribution<int> pick_m(0, max_m);
    std::uniform_int_distribution<int> pick_v(0, n - 1);
    const int m = pick_m(rng);
    for (int e = 0; e < m; ++e) g.add_edges(pick_v(rng), pick_v(rng), 1);
    return g;
}

}  // namespace

VerificationReport verify_multigraph_classification(const MultiCheckLimits& limits) {
    Stopwatch clock;
    VerificationReport report;
    report.check = "multi";
    report.add_param("max_n", std::to_string(limits.max_n));
    report.add_param("max_m", std::to_string(limits.max_m));
    report.add_param("random_sets", std::to_string(limits.random_sets));
    report.add_param("seed", std::to_string(limits.seed));
    std::int64_t graphs = 0;
    std::int64_t minimal = 0;
    std::int64_t classification_failures = 0;
    std::int64_t closure_failures = 0;
    std::int64_t rank_failures = 0;
    for (const Multigraph& g : enumerate_multigraphs(limits.max_n, limits.max_m, true)) {
        ++graphs;
        const bool is_min = mg_is_density_minimal(g);
        minimal += is_min;
        const bool expected = mg_is_tree(g) || g.order() == 1;
        bool bad = false;
        if (is_min != expected) {
            ++classification_failures;
            bad = true;
        }
        const MgDensest closed = mg_densest_minor(g);
        const MgDensest brute = mg_densest_minor_by_closure(g);
        if (closed.density != brute.density || mg_certificate(closed.minor) != mg_certificate(brute.minor)) {
            ++closure_failures;
            bad = true;
        }
        for (const Multigraph& m : mg_one_step_minors(g))
            if (mg_rank(m) > mg_rank(g)) {
                ++rank_failures;
                bad = true;
                break;
            }
        if (bad) {
            report.pass = false;
            report.counterexamples.push_back(format_multigraph(g));
        }
    }
    std::mt19937_64 rng(limits.seed);
    std::uniform_int_distribution<int> pick_count(1, 3);
    std::int64_t family_failures = 0;
    for (int t = 0; t < limits.random_sets; ++t) {
        MgFamilyDescriptor desc;
        const int c = pick_count(rng);
        for (int j = 0; j < c; ++j) desc.generators.push_back(random_multigraph(rng, limits.max_n, limits.max_m));
        const MgFamilyDensity d = mg_component_family_density(desc);
        if (!is_integer_or_superparticular(d.value)) {
            ++family_failures;
            report.pass = false;
            report.counterexamples.push_back(format_multigraph(desc.generators.front()));
        }
    }
    report.notes.push_back("counterexamples are written in multigraph text form");
    report.add_count("multigraphs", graphs);
    report.add_count("density_minimal", minimal);
    report.add_count("classification_failures", classification_failures);
    report.add_count("closure_mismatches", closure_failures);
    report.add_count("rank_increases", rank_failures);
    report.add_count("random_families", limits.random_sets);
    report.add_count("family_failures", family_failures);
    report.wall_time_ms = clock.ms();
    return report;
}

}  // namespace mdl
