#include <gtest/gtest.h>

#include <map>
#include <stdexcept>
#include <string>

#include "critgraph/canonical.hpp"
#include "critgraph/coloring.hpp"
#include "critgraph/families.hpp"
#include "critgraph/graph.hpp"
#include "critgraph/patterns.hpp"

using namespace critgraph;

TEST(NamedTest, OrdersFrozen) {
    const std::map<std::string, int> orders{
        {"C5", 5},      {"C7", 7},      {"L1", 8},      {"L2", 9},
        {"fig1-a", 11}, {"grotzsch", 11}, {"fig1-b", 12}, {"fig1-c", 13},
        {"fig1-d", 13}, {"fig1-e", 15}, {"fig1-f", 15}, {"fig1-g", 16},
    };
    for (const auto& [name, order] : orders) EXPECT_EQ(named(name).graph.order(), order) << name;
    EXPECT_EQ(all_named().size(), orders.size());
}

TEST(NamedTest, UnknownNameThrows) {
    EXPECT_THROW(named("fig1-h"), std::invalid_argument);
    EXPECT_THROW(named(""), std::invalid_argument);
}

TEST(NamedTest, AllTagsHold) {
    // the expected-property tags function as a transcription checksum
    for (const auto& ng : all_named()) {
        std::string why;
        EXPECT_TRUE(named_tags_hold(ng, &why)) << ng.name << ": " << why;
    }
}

TEST(NamedTest, TamperedEntryFailsItsTags) {
    const NamedGraph& orig = named("fig1-a");
    auto edges = orig.graph.edges();
    edges.pop_back();
    NamedGraph tampered{orig.name, make_graph(orig.graph.order(), edges), orig.expected_order,
                        orig.expected_critical_k, orig.expected_chromatic_max, orig.expected_free};
    std::string why;
    EXPECT_FALSE(named_tags_hold(tampered, &why));
    EXPECT_FALSE(why.empty());
}

TEST(NamedTest, GrotzschAliasMatchesFig1a) {
    EXPECT_EQ(named("grotzsch").graph, named("fig1-a").graph);
}

TEST(NamedTest, CriticalCorpusPassesIndependentCheckers) {
    std::vector<PatternExpr> f{parse_pattern("P7"), parse_pattern("C3")};
    for (const char* name : {"fig1-a", "fig1-b", "fig1-c", "fig1-d", "fig1-e", "fig1-f", "fig1-g"}) {
        const Graph& g = named(name).graph;
        EXPECT_TRUE(is_k_vertex_critical(g, 4).is_critical) << name;
        EXPECT_TRUE(is_family_free(g, f)) << name;
    }
}

TEST(NamedTest, SeedGraphsAreProperSubstructures) {
    std::vector<PatternExpr> f{parse_pattern("P7"), parse_pattern("C3")};
    for (const char* name : {"L1", "L2"}) {
        const Graph& g = named(name).graph;
        EXPECT_TRUE(is_family_free(g, f)) << name;
        EXPECT_TRUE(k_colorable(g, 3).has_value()) << name;
    }
    // containment facts the search results hinge on
    EXPECT_TRUE(contains_induced(named("fig1-d").graph, named("L1").graph).has_value());
    EXPECT_FALSE(contains_induced(named("fig1-d").graph, named("L2").graph).has_value());
    EXPECT_TRUE(contains_induced(named("fig1-e").graph, named("L1").graph).has_value());
    EXPECT_TRUE(contains_induced(named("fig1-e").graph, named("L2").graph).has_value());
    EXPECT_TRUE(contains_induced(named("fig1-f").graph, named("L1").graph).has_value());
    EXPECT_FALSE(contains_induced(named("fig1-f").graph, named("L2").graph).has_value());
}

TEST(FamilyTest, CirculantShape) {
    EXPECT_THROW(g_k(0), std::invalid_argument);
    Graph g1 = g_k(1);
    EXPECT_EQ(g1.order(), 13);
    for (int v = 0; v < 13; ++v) EXPECT_EQ(g1.degree(v), 4);
    Graph g3 = g_k(3);
    EXPECT_EQ(g3.order(), 19);
    for (int v = 0; v < 19; ++v) EXPECT_EQ(g3.degree(v), 6);
    // neighbor pattern: i +- 1 and i + 5, 8, ..., 5+3k (mod n)
    for (int j = 0; j <= 3; ++j) EXPECT_TRUE(g3.edge(2, (2 + 5 + 3 * j) % 19));
    EXPECT_TRUE(g3.edge(18, 0));
    EXPECT_FALSE(g3.edge(0, 2));
}

TEST(FamilyTest, Fig1cIsTheFirstFamilyMember) {
    EXPECT_EQ(canonical_form(named("fig1-c").graph).certificate,
              canonical_form(g_k(1)).certificate);
}

TEST(FamilyTest, VerifyBundlePasses) {
    for (int k = 1; k <= 8; ++k) {
        GkReport rep = verify_g_k(k);
        EXPECT_TRUE(rep.pass) << "k=" << k;
        for (const auto& c : rep.clauses)
            if (c.claimed) {
                EXPECT_TRUE(c.holds) << "k=" << k << " clause=" << c.name;
            }
    }
}

TEST(FamilyTest, FourK2ClauseScope) {
    // the matching claim starts at k=3; the first two members are evaluated
    // but not claimed, and the second one genuinely contains 4 disjoint edges
    GkReport r1 = verify_g_k(1);
    GkReport r2 = verify_g_k(2);
    GkReport r3 = verify_g_k(3);
    auto clause = [](const GkReport& r, const std::string& name) {
        for (const auto& c : r.clauses)
            if (c.name == name) return c;
        return GkClause{};
    };
    EXPECT_FALSE(clause(r1, "4K2-free").claimed);
    EXPECT_FALSE(clause(r2, "4K2-free").claimed);
    EXPECT_TRUE(clause(r3, "4K2-free").claimed);
    EXPECT_TRUE(clause(r3, "4K2-free").holds);
    EXPECT_FALSE(clause(r2, "4K2-free").holds);  // 16 vertices admit 4 disjoint edges
    EXPECT_TRUE(r1.pass);
    EXPECT_TRUE(r2.pass);
}

TEST(FamilyTest, P10WitnessAccepted) {
    Graph p10 = pattern_base_graph('P', 10);
    for (int k = 4; k <= 8; ++k) {
        Graph g = g_k(k);
        Embedding w{p10_witness(k)};
        EXPECT_TRUE(embedding_valid(g, p10, w)) << "k=" << k;
        EXPECT_TRUE(contains_induced(g, p10).has_value()) << "k=" << k;
    }
    EXPECT_THROW(p10_witness(3), std::invalid_argument);
}
