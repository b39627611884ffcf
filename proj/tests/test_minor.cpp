#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "mdl/canon.hpp"
#include "mdl/densest.hpp"
#include "mdl/enumerate.hpp"
#include "mdl/error.hpp"
#include "mdl/graph_io.hpp"
#include "mdl/minor.hpp"
#include "mdl/named.hpp"
#include "oracles.hpp"

using namespace mdl;

namespace {

std::set<std::string> certs(const std::vector<CanonicalForm>& forms) {
    std::set<std::string> out;
    for (const CanonicalForm& f : forms) out.insert(f.certificate);
    return out;
}

Rational oracle_densest(const SimpleGraph& g) {
    Rational best(0);
    for (const oracle::MinorKey& k : oracle::all_minors(g))
        best = std::max(best, Rational(std::popcount(k.code), k.n));
    return best;
}

}  // namespace

TEST(MinorOps, ContractExamples) {
    EXPECT_TRUE(are_isomorphic(contract_edge(make_named("complete:3"), {0, 1}), make_named("complete:2")));
    EXPECT_TRUE(are_isomorphic(contract_edge(make_named("cycle:4"), {0, 1}), make_named("complete:3")));
    const SimpleGraph diamond = make_named("f_prime:1");
    const SimpleGraph c = contract_edge(diamond, {1, 3});
    EXPECT_TRUE(are_isomorphic(c, make_named("complete:3")));
    EXPECT_EQ(diamond.size() - c.size(), 2);
    EXPECT_THROW(contract_edge(make_named("path:2"), {0, 2}), InvalidArgument);
}

TEST(MinorOps, DeleteExamples) {
    EXPECT_TRUE(are_isomorphic(delete_edge(make_named("complete:4"), {0, 1}), make_named("diamond")));
    EXPECT_TRUE(are_isomorphic(delete_vertex(make_named("complete:3"), 2), make_named("complete:2")));
    EXPECT_TRUE(are_isomorphic(delete_edge(make_named("cycle:3"), {0, 2}), make_named("path:2")));
    EXPECT_THROW(delete_vertex(SimpleGraph(1), 0), InvalidArgument);
    EXPECT_THROW(delete_edge(make_named("path:2"), {0, 2}), InvalidArgument);
}

TEST(MinorOps, OneStepExamples) {
    EXPECT_EQ(certs(one_step_minors(make_named("complete:3"))),
              (std::set<std::string>{certificate(make_named("complete:2")), certificate(make_named("path:2"))}));
    EXPECT_TRUE(one_step_minors(SimpleGraph(1)).empty());
    EXPECT_EQ(certs(one_step_minors(make_named("complete:2"))),
              (std::set<std::string>{certificate(SimpleGraph(1)), certificate(SimpleGraph(2))}));
}

TEST(MinorOps, RankNeverIncreases) {
    EnumerationFilter f;
    f.max_n = 7;
    for (const SimpleGraph& g : enumerate(f))
        for (const MinorStep& s : all_steps(g)) EXPECT_LE(rank(apply_step(g, s).graph), rank(g));
}

TEST(Closure, Examples) {
    const MinorClosure k3 = minor_closure(make_named("complete:3"));
    std::set<std::string> want;
    for (const char* name : {"complete:3", "complete:2", "path:2", "complete:1", "empty:2", "empty:3"})
        want.insert(certificate(make_named(name)));
    want.insert(certificate(SimpleGraph(3, {{0, 1}})));
    std::set<std::string> got;
    for (const auto& [c, d] : k3.members) got.insert(c);
    EXPECT_EQ(got, want);
    EXPECT_EQ(minor_closure(SimpleGraph(1)).members.size(), 1u);
    for (const auto& [c, d] : minor_closure(make_named("friendship:2")).members) EXPECT_LE(d, Rational(6, 5));
}

TEST(Closure, MatchesIndependentClosure) {
    EnumerationFilter f;
    f.max_n = 6;
    f.connectivity = Connectivity::Connected;
    for (const SimpleGraph& g : enumerate(f)) {
        const MinorClosure c = minor_closure(g);
        EXPECT_EQ(c.members.size(), oracle::all_minors(g).size()) << encode_graph6(g);
    }
}

TEST(IsMinor, Examples) {
    EXPECT_TRUE(is_minor(make_named("complete:3"), make_named("cycle:7")));
    EXPECT_TRUE(is_minor(make_named("complete:3"), make_named("theta:2,3,3")));
    EXPECT_TRUE(is_minor(make_named("diamond"), make_named("complete:4")));
    EXPECT_FALSE(is_minor(make_named("complete:4"), make_named("cycle:4")));
    EXPECT_FALSE(is_minor(make_named("complete:3"), make_named("path:6")));
    EXPECT_TRUE(is_minor(SimpleGraph(3), make_named("path:2")));
    EXPECT_FALSE(is_minor(SimpleGraph(4), make_named("path:2")));
}

TEST(IsMinor, WitnessesValidate) {
    const SimpleGraph k5 = make_named("complete:5");
    SimpleGraph petersen(10);
    for (int i = 0; i < 5; ++i) {
        petersen.add_edge(i, (i + 1) % 5);
        petersen.add_edge(i, i + 5);
        petersen.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    const auto w = is_minor(k5, petersen);
    ASSERT_TRUE(w);
    EXPECT_TRUE(is_valid_witness(k5, petersen, *w));
    EXPECT_FALSE(is_valid_witness(k5, petersen, MinorWitness{{1, 2, 4, 8, 16}}));
}

TEST(IsMinor, AgreesWithClosureMembership) {
    EnumerationFilter hosts;
    hosts.max_n = 6;
    hosts.connectivity = Connectivity::Connected;
    EnumerationFilter small;
    small.max_n = 4;
    const auto candidates = enumerate(small);
    int pairs = 0;
    for (const SimpleGraph& g : enumerate(hosts)) {
        const MinorClosure c = minor_closure(g);
        for (const SimpleGraph& h : candidates) {
            const auto w = is_minor(h, g);
            EXPECT_EQ(w.has_value(), c.contains(certificate(h))) << encode_graph6(h) << " in " << encode_graph6(g);
            if (w) EXPECT_TRUE(is_valid_witness(h, g, *w));
            ++pairs;
        }
    }
    EXPECT_GT(pairs, 2000);
}

TEST(IsMinor, SevenVertexHostsAgainstClosure) {
    EnumerationFilter hosts;
    hosts.max_n = 7;
    hosts.min_n = 7;
    hosts.connectivity = Connectivity::Biconnected;
    hosts.max_edges = 10;
    const std::vector<SimpleGraph> candidates{make_named("complete:4"), make_named("book:3"), make_named("theta:2,2,2"),
                                              make_named("friendship:2"), make_named("cycle:6")};
    for (const SimpleGraph& g : enumerate(hosts)) {
        const MinorClosure c = minor_closure(g);
        for (const SimpleGraph& h : candidates)
            EXPECT_EQ(is_minor(h, g).has_value(), c.contains(certificate(h)));
    }
}

TEST(Densest, Examples) {
    const DensestMinor f3 = densest_minor(make_named("friendship:3"));
    EXPECT_EQ(f3.density, Rational(9, 7));
    EXPECT_TRUE(are_isomorphic(f3.minor, make_named("friendship:3")));
    const SimpleGraph tree(6, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {3, 5}});
    EXPECT_TRUE(are_isomorphic(densest_minor(tree).minor, tree));
    EXPECT_EQ(densest_minor(make_named("cycle_of_triangles:3")).density, Rational(3, 2));
    EXPECT_EQ(densest_minor(make_named("cycle:4")).density, Rational(1));
    EXPECT_EQ(densest_minor(make_named("cycle:4")).minor.order(), 3);
}

TEST(Densest, WitnessIsAValidMinorModel) {
    EnumerationFilter f;
    f.max_n = 6;
    f.connectivity = Connectivity::Connected;
    for (const SimpleGraph& g : enumerate(f)) {
        for (DensestBackend b : {DensestBackend::Closure, DensestBackend::BranchSets}) {
            MinorSearchOptions o;
            o.backend = b;
            const DensestMinor d = densest_minor(g, o);
            EXPECT_EQ(d.density, density(d.minor));
            EXPECT_TRUE(is_valid_witness(d.minor, g, d.witness)) << encode_graph6(g);
        }
    }
}

TEST(Densest, BackendsAndOracleAgree) {
    EnumerationFilter f;
    f.max_n = 6;
    f.connectivity = Connectivity::Connected;
    MinorSearchOptions branch;
    branch.backend = DensestBackend::BranchSets;
    for (const SimpleGraph& g : enumerate(f)) {
        const MinorRank a = densest_minor_rank(g);
        const MinorRank b = densest_minor_rank(g, branch);
        EXPECT_EQ(a, b) << encode_graph6(g);
        EXPECT_EQ(a.density, oracle_densest(g)) << encode_graph6(g);
    }
}

TEST(Densest, GuardrailApplies) {
    EXPECT_THROW(densest_minor(make_named("cycle:11")), GuardrailExceeded);
    MinorSearchOptions o;
    o.guardrail = 11;
    EXPECT_EQ(densest_minor(make_named("cycle:11"), o).density, Rational(1));
}

TEST(Minimality, Examples) {
    const MinimalityCertificate f4 = is_density_minimal(make_named("friendship:4"));
    EXPECT_TRUE(f4.verdict);
    EXPECT_EQ(f4.subject_density, Rational(4, 3));
    ASSERT_TRUE(f4.best_proper_minor);
    EXPECT_LT(f4.best_proper_minor->density, Rational(4, 3));

    // F_3 with three extra degree-two vertices across distinct edges, leaving
    // the triangle 0,5,6 bare: dropping it keeps density 3/2.
    SimpleGraph g = make_named("friendship:3");
    SimpleGraph bigger(10);
    for (const Edge& e : g.edges()) bigger.add_edge(e.u, e.v);
    bigger.add_edge(7, 1);
    bigger.add_edge(7, 2);
    bigger.add_edge(8, 0);
    bigger.add_edge(8, 1);
    bigger.add_edge(9, 3);
    bigger.add_edge(9, 4);
    const MinimalityCertificate c = is_density_minimal(bigger);
    EXPECT_FALSE(c.verdict);
    ASSERT_TRUE(c.best_proper_minor);
    EXPECT_EQ(c.best_proper_minor->density, Rational(3, 2));
    EXPECT_LT(c.best_proper_minor->minor.order(), bigger.order());
    EXPECT_TRUE(is_valid_witness(c.best_proper_minor->minor, bigger, c.best_proper_minor->witness));

    // One extra vertex on each triangle: three diamonds at a cut vertex, every
    // contraction loses an edge to a parallel pair, so nothing reaches 3/2.
    SimpleGraph diamonds(10);
    for (const Edge& e : g.edges()) diamonds.add_edge(e.u, e.v);
    for (int t = 0; t < 3; ++t) {
        diamonds.add_edge(7 + t, 1 + 2 * t);
        diamonds.add_edge(7 + t, 2 + 2 * t);
    }
    const MinimalityCertificate d = is_density_minimal(diamonds);
    EXPECT_TRUE(d.verdict);
    ASSERT_TRUE(d.best_proper_minor);
    EXPECT_EQ(d.best_proper_minor->density, Rational(13, 9));

    const MinimalityCertificate k1 = is_density_minimal(SimpleGraph(1));
    EXPECT_TRUE(k1.verdict);
    EXPECT_FALSE(k1.best_proper_minor);
}

TEST(Minimality, FastPathAgreesWithCertificate) {
    EnumerationFilter f;
    f.max_n = 7;
    f.connectivity = Connectivity::Connected;
    f.max_edges = 10;
    for (const SimpleGraph& g : enumerate(f)) EXPECT_EQ(density_minimal(g), is_density_minimal(g).verdict) << encode_graph6(g);
}

TEST(Minimality, BestProperMinorOfTriangle) {
    const auto best = best_proper_minor(make_named("complete:3"));
    ASSERT_TRUE(best);
    EXPECT_EQ(best->density, Rational(2, 3));
    EXPECT_FALSE(best_proper_minor(SimpleGraph(1)));
}

TEST(RankMinimal, Examples) {
    EXPECT_TRUE(is_rank_minimal(make_named("complete:4")));
    EXPECT_FALSE(is_rank_minimal(make_named("cycle:4")));
    EXPECT_TRUE(is_rank_minimal(make_named("diamond")));
    EXPECT_TRUE(is_rank_minimal(SimpleGraph(1)));
}

TEST(RankMinimal, OneStepTestMatchesFullClosure) {
    EnumerationFilter f;
    f.max_n = 6;
    f.connectivity = Connectivity::Connected;
    for (const SimpleGraph& g : enumerate(f)) {
        bool same_rank_proper = false;
        const auto root = oracle::MinorKey{g.order(), oracle::brute_canonical(g)};
        for (const oracle::MinorKey& k : oracle::all_minors(g)) {
            if (k == root) continue;
            // rank of a minor from its code: m - n + components
            SimpleGraph m(k.n);
            int bit = 0;
            for (int i = 0; i < k.n; ++i)
                for (int j = i + 1; j < k.n; ++j, ++bit)
                    if ((k.code >> bit) & 1u) m.add_edge(i, j);
            if (rank(m) == rank(g)) same_rank_proper = true;
        }
        EXPECT_EQ(is_rank_minimal(g), !same_rank_proper) << encode_graph6(g);
    }
}

TEST(Memo, SaveLoadRoundTripAndCorruption) {
    DensestMemo memo;
    MinorSearchOptions o;
    o.memo = &memo;
    const Rational before = densest_minor(make_named("friendship:3"), o).density;
    ASSERT_GT(memo.size(), 0u);
    const auto dir = std::filesystem::temp_directory_path() / "mdl_memo_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "memo.txt";
    memo.save(path);
    DensestMemo loaded;
    ASSERT_TRUE(loaded.load(path));
    EXPECT_EQ(loaded.size(), memo.size());
    o.memo = &loaded;
    const DensestMinor again = densest_minor(make_named("friendship:3"), o);
    EXPECT_EQ(again.density, before);
    EXPECT_TRUE(is_valid_witness(again.minor, make_named("friendship:3"), again.witness));

    std::ofstream(path) << "mdl-densest-memo v1\ngarbage line\n";
    DensestMemo broken;
    EXPECT_FALSE(broken.load(path));
    EXPECT_EQ(broken.size(), 0u);
    std::ofstream(path) << "something else\n";
    EXPECT_FALSE(broken.load(path));
    EXPECT_FALSE(broken.load(dir / "missing.txt"));
    std::filesystem::remove_all(dir);
}
