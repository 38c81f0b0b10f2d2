#pragma once

#include <string>
#include <vector>

#include "critgraph/coloring.hpp"
#include "critgraph/graph.hpp"
#include "critgraph/patterns.hpp"

namespace critgraph {

// Embedded corpus entry. The expected tags double as a transcription
// checksum: a stored adjacency is accepted only if the independent checkers
// reproduce them (see registry_self_check / the test suite).
struct NamedGraph {
    std::string name;
    Graph graph;
    int expected_order = 0;
    int expected_critical_k = 0;    // 0 = no criticality claim
    int expected_chromatic_max = 0; // 0 = no claim; else chromatic <= value
    std::string expected_free;      // comma list of pattern DSL, "" = no claim
};

// Circulant family member: 3k+10 vertices, offsets 1 and 5,8,...,5+3k.
// The offset set is closed under negation: (3k+10)-(5+3j) = 5+3(k-j).
inline Graph g_k(int k) {
    if (k < 1) throw std::invalid_argument("g_k: k must be positive");
    int n = 3 * k + 10;
    std::vector<int> offsets{1};
    for (int j = 0; j <= k; ++j) offsets.push_back(5 + 3 * j);
    return circulant(n, offsets);
}

namespace detail {

using EdgeList = std::vector<std::pair<int, int>>;

inline const std::vector<NamedGraph>& named_registry() {
    static const std::vector<NamedGraph> reg = [] {
        std::vector<NamedGraph> r;
        auto add = [&](std::string name, Graph g, int order, int crit_k, int chr_max,
                       std::string free) {
            r.push_back({std::move(name), std::move(g), order, crit_k, chr_max,
                         std::move(free)});
        };
        add("C5", circulant(5, {1}), 5, 3, 0, "C3");
        add("C7", circulant(7, {1}), 7, 3, 0, "P7,C3");
        // C7 plus one vertex whose cycle neighbors sit two apart around slot 2
        add("L1",
            make_graph(8, {{0, 1}, {0, 6}, {1, 2}, {2, 3}, {3, 4}, {3, 7}, {4, 5}, {5, 6}, {6, 7}}),
            8, 0, 3, "P7,C3");
        // C7 plus an alternating three-neighbor vertex and a pendant on it
        add("L2",
            make_graph(9, {{0, 1}, {0, 6}, {1, 2}, {1, 7}, {2, 3}, {3, 4}, {3, 7}, {4, 5},
                           {5, 6}, {6, 7}, {7, 8}}),
            9, 0, 3, "P7,C3");
        // five-cycle, its mirror, apex on the mirrors
        EdgeList a = {{0, 1}, {0, 4}, {0, 6}, {0, 9}, {1, 2}, {1, 5}, {1, 7}, {2, 3}, {2, 6},
                      {2, 8}, {3, 4}, {3, 7}, {3, 9}, {4, 5}, {4, 8}, {5, 10}, {6, 10},
                      {7, 10}, {8, 10}, {9, 10}};
        add("fig1-a", make_graph(11, a), 11, 4, 0, "P7,C3");
        add("grotzsch", make_graph(11, a), 11, 4, 0, "P7,C3");
        // the Chvatal graph (4-regular, 24 edges)
        add("fig1-b",
            make_graph(12, {{0, 1},  {0, 4},  {0, 5},  {0, 11}, {1, 2}, {1, 8}, {1, 9},
                            {2, 3},  {2, 7},  {2, 10}, {3, 4},  {3, 9}, {3, 11}, {4, 7},
                            {4, 8},  {5, 6},  {5, 9},  {5, 10}, {6, 7}, {6, 8}, {6, 11},
                            {7, 9},  {8, 10}, {10, 11}}),
            12, 4, 0, "P7,C3");
        add("fig1-c", circulant(13, {1, 5, 8}), 13, 4, 0, "P7,C3");
        add("fig1-d",
            make_graph(13, {{0, 1}, {0, 6},  {0, 9},  {0, 12},  {1, 2},   {1, 8},   {2, 3},
                            {2, 7}, {2, 10}, {3, 4},  {3, 6},   {3, 9},   {3, 11},  {4, 5},
                            {4, 12}, {5, 6}, {5, 8},  {5, 10},  {6, 7},   {7, 8},   {7, 12},
                            {8, 9}, {8, 11}, {9, 10}, {10, 11}, {11, 12}}),
            13, 4, 0, "P7,C3");
        add("fig1-e",
            make_graph(15, {{0, 1},   {0, 5},   {0, 8},   {0, 11},  {0, 14},  {1, 2},
                            {1, 4},   {1, 13},  {2, 3},   {2, 6},   {2, 9},   {2, 12},
                            {3, 4},   {3, 8},   {3, 11},  {3, 14},  {4, 5},   {4, 7},
                            {5, 6},   {5, 9},   {5, 12},  {6, 7},   {6, 11},  {6, 14},
                            {7, 8},   {7, 10},  {8, 9},   {8, 12},  {9, 10},  {9, 14},
                            {10, 11}, {10, 13}, {11, 12}, {12, 13}, {13, 14}}),
            15, 4, 0, "P7,C3");
        add("fig1-f",
            make_graph(15, {{0, 1},   {0, 3},   {0, 8},   {0, 12},  {0, 14},  {1, 2},
                            {1, 7},   {1, 10},  {2, 3},   {2, 5},   {2, 9},   {2, 14},
                            {3, 4},   {3, 6},   {3, 11},  {4, 5},   {4, 10},  {4, 13},
                            {5, 6},   {5, 8},   {5, 12},  {6, 7},   {6, 9},   {6, 14},
                            {7, 8},   {7, 13},  {8, 9},   {8, 11},  {9, 10},  {9, 12},
                            {10, 11}, {11, 12}, {11, 14}, {12, 13}, {13, 14}}),
            15, 4, 0, "P7,C3");
        add("fig1-g", circulant(16, {1, 3, 8}), 16, 4, 0, "P7,C3");
        return r;
    }();
    return reg;
}

}  // namespace detail

inline const std::vector<NamedGraph>& all_named() { return detail::named_registry(); }

inline const NamedGraph& named(const std::string& name) {
    for (const auto& ng : detail::named_registry())
        if (ng.name == name) return ng;
    throw std::invalid_argument("named: unknown graph name '" + name + "'");
}

// Re-derive every expected tag of one corpus entry with the independent
// checkers; any mismatch means the stored adjacency is wrong.
inline bool named_tags_hold(const NamedGraph& ng, std::string* why = nullptr) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = ng.name + ": " + msg;
        return false;
    };
    if (ng.graph.order() != ng.expected_order) return fail("order mismatch");
    if (ng.expected_critical_k &&
        !is_k_vertex_critical(ng.graph, ng.expected_critical_k).is_critical)
        return fail("criticality claim fails");
    if (ng.expected_chromatic_max &&
        chromatic_number(ng.graph) > ng.expected_chromatic_max)
        return fail("chromatic bound claim fails");
    if (!ng.expected_free.empty()) {
        std::vector<PatternExpr> fam;
        std::size_t pos = 0;
        const std::string& t = ng.expected_free;
        while (pos < t.size()) {
            std::size_t comma = t.find(',', pos);
            if (comma == std::string::npos) comma = t.size();
            fam.push_back(parse_pattern(t.substr(pos, comma - pos)));
            pos = comma + 1;
        }
        if (!is_family_free(ng.graph, fam)) return fail("freeness claim fails");
    }
    return true;
}

// Explicit induced-P10 witness inside g_k(k): path order
// v_1, v_9, v_{3k+5}, v_3, v_{11}, v_{3k+7}, v_5, v_{13}, v_{3k+9}, v_7
// (0-indexed below). Consecutive differences are offsets, the rest are not.
inline std::vector<int> p10_witness(int k) {
    if (k < 4) throw std::invalid_argument("p10_witness: requires k >= 4");
    return {0, 8, 3 * k + 4, 2, 10, 3 * k + 6, 4, 12, 3 * k + 8, 6};
}

struct GkClause {
    std::string name;
    bool claimed = true;  // false = evaluated but outside the stated scope
    bool holds = false;
};

struct GkReport {
    int k = 0;
    std::vector<GkClause> clauses;
    bool pass = false;  // every claimed clause holds
};

// Full verification bundle for one circulant family member, via the
// independent checkers only. The 4K2 clause is claimed only for k >= 3.
inline GkReport verify_g_k(int k) {
    GkReport rep;
    rep.k = k;
    Graph g = g_k(k);
    auto clause = [&](std::string name, bool claimed, bool holds) {
        rep.clauses.push_back({std::move(name), claimed, holds});
    };
    clause("triangle-free", true, !has_triangle(g));
    clause("4K2-free", k >= 3, is_family_free(g, {parse_pattern("4K2")}));
    clause("P11-free", true, is_family_free(g, {parse_pattern("P11")}));
    clause("chromatic-4", true, chromatic_number(g) == 4);
    bool deletions_ok = true;
    bool witness_ok = true;
    for (int v = 0; v < g.order() && (deletions_ok || witness_ok); ++v) {
        Graph h = delete_vertex(g, v);
        if (!k_colorable(h, 3)) deletions_ok = false;
        if (!is_proper(h, mod3_deletion_coloring(k, v))) witness_ok = false;
    }
    clause("deletions-3-colorable", true, deletions_ok);
    clause("mod3-witness-proper", true, witness_ok);
    rep.pass = true;
    for (const auto& c : rep.clauses)
        if (c.claimed && !c.holds) rep.pass = false;
    return rep;
}

}  // namespace critgraph
