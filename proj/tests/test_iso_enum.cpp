#include <gtest/gtest.h>

#include <random>

#include "mdl/canon.hpp"
#include "mdl/enumerate.hpp"
#include "mdl/error.hpp"
#include "mdl/graph_io.hpp"
#include "mdl/named.hpp"
#include "mdl/structure.hpp"
#include "oracles.hpp"

using namespace mdl;

namespace {

SimpleGraph random_graph(std::mt19937_64& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

std::vector<int> random_perm(std::mt19937_64& rng, int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace

TEST(Canon, Examples) {
    const SimpleGraph abc(3, {{0, 1}, {1, 2}});
    const SimpleGraph bac(3, {{1, 0}, {0, 2}});
    EXPECT_EQ(certificate(abc), certificate(bac));
    EXPECT_NE(certificate(make_named("path:3")), certificate(make_named("star:3")));
    EXPECT_EQ(certificate(make_named("f_prime:1")), certificate(make_named("diamond")));
    EXPECT_FALSE(are_isomorphic(make_named("cycle:4"), make_named("star:3")));
    EXPECT_TRUE(are_isomorphic(make_named("theta:2,2,2"), make_named("complete_bipartite:2,3")));
    EXPECT_FALSE(are_isomorphic(make_named("friendship:2"), make_named("diamond")));
}

TEST(Canon, LabelingMapsInputOntoCanonicalGraph) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 300; ++t) {
        const SimpleGraph g = random_graph(rng, 2 + static_cast<int>(rng() % 9), 0.4);
        const CanonicalForm cf = canonical_form(g);
        for (const Edge& e : g.edges())
            EXPECT_TRUE(cf.graph.has_edge(cf.labeling[static_cast<std::size_t>(e.u)], cf.labeling[static_cast<std::size_t>(e.v)]));
        EXPECT_EQ(cf.graph.size(), g.size());
        // Idempotent.
        EXPECT_EQ(canonical_form(cf.graph).graph, cf.graph);
        EXPECT_EQ(certificate(cf.graph), cf.certificate);
    }
}

TEST(Canon, InvariantUnderRelabeling) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 300; ++t) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const SimpleGraph g = random_graph(rng, n, 0.35);
        const SimpleGraph h = g.relabeled(random_perm(rng, n));
        EXPECT_EQ(certificate(g), certificate(h));
    }
}

TEST(Canon, HardRegularCases) {
    // Vertex-transitive graphs stress the automorphism pruning.
    EXPECT_EQ(certificate(make_named("cycle:12")), certificate(make_named("cycle:12").relabeled(std::vector<int>{3, 7, 1, 11, 0, 5, 9, 2, 4, 6, 8, 10})));
    EXPECT_NE(certificate(make_named("cycle:6")), certificate(disjoint_union(make_named("complete:3"), make_named("complete:3"))));
    const SimpleGraph k33 = make_named("complete_bipartite:3,3");
    const SimpleGraph prism(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
    EXPECT_FALSE(are_isomorphic(k33, prism));
    SimpleGraph petersen(10);
    for (int i = 0; i < 5; ++i) {
        petersen.add_edge(i, (i + 1) % 5);
        petersen.add_edge(i, i + 5);
        petersen.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    std::mt19937_64 rng(9);
    for (int t = 0; t < 20; ++t) EXPECT_EQ(certificate(petersen), certificate(petersen.relabeled(random_perm(rng, 10))));
}

TEST(Canon, AgreesWithPermutationOracle) {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 2000; ++t) {
        const int n = 1 + static_cast<int>(rng() % 7);
        const SimpleGraph a = random_graph(rng, n, 0.5);
        // Half the pairs are relabelings, half independent samples.
        const SimpleGraph b = (t % 2) ? a.relabeled(random_perm(rng, n)) : random_graph(rng, n, 0.5);
        EXPECT_EQ(are_isomorphic(a, b), oracle::brute_isomorphic(a, b))
            << encode_graph6(a) << " " << encode_graph6(b);
    }
}

TEST(Canon, ColoredCertificateSeparatesColorings) {
    const SimpleGraph p = make_named("path:2");
    const std::vector<int> end{1, 0, 0};
    const std::vector<int> other_end{0, 0, 1};
    const std::vector<int> middle{0, 1, 0};
    EXPECT_EQ(canonical_form(p, end).certificate, canonical_form(p, other_end).certificate);
    EXPECT_NE(canonical_form(p, end).certificate, canonical_form(p, middle).certificate);
}

TEST(Enumerate, Examples) {
    EnumerationFilter f;
    f.max_n = 4;
    f.min_n = 4;
    f.connectivity = Connectivity::Connected;
    EXPECT_EQ(enumerate(f).size(), 6u);

    EnumerationFilter k1;
    k1.max_n = 1;
    k1.connectivity = Connectivity::Connected;
    ASSERT_EQ(enumerate(k1).size(), 1u);
    EXPECT_EQ(enumerate(k1)[0], SimpleGraph(1));

    EnumerationFilter theta;
    theta.max_n = 5;
    theta.connectivity = Connectivity::Biconnected;
    theta.exact_rank = 2;
    std::set<std::string> expected;
    for (int a = 1; a <= 5; ++a)
        for (int b = a; b <= 5; ++b)
            for (int c = b; c <= 5; ++c)
                if (a + b + c - 1 <= 5 && b >= 2) expected.insert(certificate(make_named("theta:" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c))));
    std::set<std::string> got;
    for (const SimpleGraph& g : enumerate(theta)) got.insert(certificate(g));
    EXPECT_EQ(got, expected);
}

TEST(Enumerate, ConnectedCountsMatchPolyaAndLabeledOracles) {
    const std::vector<std::int64_t> expected = oracle::connected_counts(8);
    EnumerationFilter f;
    f.max_n = 8;
    f.connectivity = Connectivity::Connected;
    std::vector<std::int64_t> got(9, 0);
    for_each_graph(f, [&](const SimpleGraph& g) { ++got[static_cast<std::size_t>(g.order())]; });
    for (int n = 1; n <= 8; ++n) EXPECT_EQ(got[static_cast<std::size_t>(n)], expected[static_cast<std::size_t>(n)]) << "n=" << n;
    // Labeled brute force agrees with the counting formula where feasible.
    for (int n = 1; n <= 6; ++n)
        EXPECT_EQ(static_cast<std::int64_t>(oracle::labeled_classes(n, oracle::brute_connected).size()),
                  expected[static_cast<std::size_t>(n)]);
}

TEST(Enumerate, AllGraphCountsMatchPolya) {
    EnumerationFilter f;
    f.max_n = 7;
    std::vector<std::int64_t> got(8, 0);
    for_each_graph(f, [&](const SimpleGraph& g) { ++got[static_cast<std::size_t>(g.order())]; });
    for (int n = 1; n <= 7; ++n) EXPECT_EQ(got[static_cast<std::size_t>(n)], oracle::polya_graph_count(n)) << "n=" << n;
}

TEST(Enumerate, FiltersMatchLabeledOracle) {
    struct Case {
        Connectivity conn;
        std::optional<int> rank;
        std::optional<Rational> cap;
        bool strict;
        std::optional<int> max_edges;
    };
    const std::vector<Case> cases{
        {Connectivity::Biconnected, std::nullopt, std::nullopt, false, std::nullopt},
        {Connectivity::Connected, 2, std::nullopt, false, std::nullopt},
        {Connectivity::Connected, std::nullopt, Rational(3, 2), true, std::nullopt},
        {Connectivity::Any, std::nullopt, Rational(1), false, std::nullopt},
        {Connectivity::Any, std::nullopt, std::nullopt, false, 4},
        {Connectivity::Biconnected, 3, std::nullopt, false, std::nullopt},
    };
    for (const Case& c : cases) {
        EnumerationFilter f;
        f.max_n = 6;
        f.connectivity = c.conn;
        f.exact_rank = c.rank;
        f.max_density = c.cap;
        f.strict_density = c.strict;
        f.max_edges = c.max_edges;
        std::set<oracle::MinorKey> got;
        for (const SimpleGraph& g : enumerate(f)) {
            EXPECT_TRUE(f.accepts(g));
            EXPECT_TRUE(got.insert({g.order(), oracle::brute_canonical(g)}).second) << "duplicate " << encode_graph6(g);
        }
        std::set<oracle::MinorKey> want;
        for (int n = 1; n <= 6; ++n)
            for (std::uint64_t code : oracle::labeled_classes(n, [&](const SimpleGraph& g) { return f.accepts(g); }))
                want.insert({n, code});
        EXPECT_EQ(got, want);
    }
}

TEST(Enumerate, OrderedByCertificateAndDeterministic) {
    EnumerationFilter f;
    f.max_n = 6;
    f.connectivity = Connectivity::Connected;
    const auto a = enumerate(f);
    const auto b = enumerate(f);
    EXPECT_EQ(a, b);
    for (std::size_t i = 1; i < a.size(); ++i) EXPECT_LT(certificate(a[i - 1]), certificate(a[i]));
}

TEST(Enumerate, Guardrails) {
    EnumerationFilter f;
    f.max_n = 13;
    EXPECT_THROW(enumerate(f), GuardrailExceeded);
    f.max_n = 0;
    EXPECT_THROW(enumerate(f), InvalidArgument);
}
