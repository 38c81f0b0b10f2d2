#pragma once

#include <array>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "critgraph/coloring.hpp"
#include "critgraph/graph.hpp"

namespace critgraph {

struct structural_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct not_a_c7 : structural_error {
    not_a_c7() : structural_error("cycle argument does not induce a C7") {}
};

struct unclassifiable : structural_error {
    int vertex;
    explicit unclassifiable(int v)
        : structural_error("vertex " + std::to_string(v) +
                           " matches no cycle-neighborhood class"),
          vertex(v) {}
};

struct invariant_violation : structural_error {
    std::string clause;
    explicit invariant_violation(std::string c)
        : structural_error("decomposition invariant violated: " + c), clause(std::move(c)) {}
};

namespace detail {

inline void require_induced_c7(const Graph& g, const std::vector<int>& cycle) {
    if (cycle.size() != 7) throw not_a_c7();
    for (int i = 0; i < 7; ++i) {
        for (int j = i + 1; j < 7; ++j) {
            if (cycle[i] == cycle[j]) throw not_a_c7();
            bool want = (j - i == 1) || (i == 0 && j == 6);
            if (g.edge(cycle[i], cycle[j]) != want) throw not_a_c7();
        }
    }
}

}  // namespace detail

// Neighbors of the cycle classified by their exact cycle-neighborhood:
// s1[i] sees slots i-1,i+1; s2[i] sees i-2,i+2; s3[i] sees i-2,i,i+2;
// s0 sees nothing. Slots are 0-based here (paper-style 1..7 maps to 0..6).
struct SSetClassification {
    std::vector<int> cycle;
    std::vector<int> s0;
    std::array<std::vector<int>, 7> s1, s2, s3;
};

inline SSetClassification classify_s_sets(const Graph& g, const std::vector<int>& cycle) {
    detail::require_induced_c7(g, cycle);
    SSetClassification out;
    out.cycle = cycle;
    std::vector<bool> in_cycle(g.order(), false);
    for (int c : cycle) in_cycle[c] = true;
    for (int v = 0; v < g.order(); ++v) {
        if (in_cycle[v]) continue;
        unsigned mask = 0;
        for (int i = 0; i < 7; ++i)
            if (g.edge(v, cycle[i])) mask |= 1u << i;
        if (mask == 0) {
            out.s0.push_back(v);
            continue;
        }
        bool placed = false;
        for (int i = 0; i < 7 && !placed; ++i) {
            unsigned m1 = (1u << ((i + 6) % 7)) | (1u << ((i + 1) % 7));
            unsigned m2 = (1u << ((i + 5) % 7)) | (1u << ((i + 2) % 7));
            unsigned m3 = m2 | (1u << i);
            if (mask == m1) {
                out.s1[i].push_back(v);
                placed = true;
            } else if (mask == m2) {
                out.s2[i].push_back(v);
                placed = true;
            } else if (mask == m3) {
                out.s3[i].push_back(v);
                placed = true;
            }
        }
        if (!placed) throw unclassifiable(v);
    }
    return out;
}

// Seven stable sets with complete consecutive joins plus the outside t-sets
// split by completeness to the lower side. Slot indices are 0-based.
struct HeptagramDecomposition {
    Graph graph;
    std::array<std::vector<int>, 7> h, t, t_minus, t_plus;
};

namespace detail {

inline bool anticomplete(const Graph& g, const std::vector<int>& a, const std::vector<int>& b) {
    for (int u : a)
        for (int v : b)
            if (g.edge(u, v)) return false;
    return true;
}

inline bool complete_to(const Graph& g, int v, const std::vector<int>& set) {
    for (int u : set)
        if (!g.edge(v, u)) return false;
    return true;
}

inline bool has_neighbor_in(const Graph& g, int v, const std::vector<int>& set) {
    for (int u : set)
        if (g.edge(v, u)) return true;
    return false;
}

inline void check_decomposition(const HeptagramDecomposition& d) {
    const Graph& g = d.graph;
    auto at = [](int i) { return ((i % 7) + 7) % 7; };
    for (int i = 0; i < 7; ++i) {
        for (std::size_t a = 0; a < d.h[i].size(); ++a)
            for (std::size_t b = a + 1; b < d.h[i].size(); ++b)
                if (g.edge(d.h[i][a], d.h[i][b])) throw invariant_violation("h-stable");
        for (int v : d.h[i]) {
            if (!has_neighbor_in(g, v, d.h[at(i - 1)]) ||
                !has_neighbor_in(g, v, d.h[at(i + 1)]))
                throw invariant_violation("h-neighbor-pattern");
            for (int dlt : {-3, -2, 2, 3})
                if (has_neighbor_in(g, v, d.h[at(i + dlt)]))
                    throw invariant_violation("h-neighbor-pattern");
        }
        for (int v : d.h[i])
            if (!complete_to(g, v, d.h[at(i + 1)]))
                throw invariant_violation("h-consecutive-complete");
    }
    std::vector<bool> covered(g.order(), false);
    for (int i = 0; i < 7; ++i) {
        for (int v : d.h[i]) covered[v] = true;
        for (int v : d.t[i]) covered[v] = true;
    }
    for (int v = 0; v < g.order(); ++v)
        if (!covered[v]) throw invariant_violation("cover");
    for (int i = 0; i < 7; ++i) {
        for (int v : d.t[i]) {
            for (int j = 0; j < 7; ++j) {
                bool allowed = j == i || j == at(i - 2) || j == at(i + 2);
                bool has = has_neighbor_in(g, v, d.h[j]);
                if (allowed && !has) throw invariant_violation("t-support");
                if (!allowed && has) throw invariant_violation("t-support");
            }
            if (!complete_to(g, v, d.h[i])) throw invariant_violation("t-complete-center");
            if (!complete_to(g, v, d.h[at(i - 2)]) && !complete_to(g, v, d.h[at(i + 2)]))
                throw invariant_violation("t-complete-side");
        }
        for (std::size_t a = 0; a < d.t[i].size(); ++a)
            for (std::size_t b = a + 1; b < d.t[i].size(); ++b)
                if (g.edge(d.t[i][a], d.t[i][b])) throw invariant_violation("t-stable");
        if (!anticomplete(g, d.t[i], d.t[at(i + 2)]))
            throw invariant_violation("t-anticomplete-2");
        if (!anticomplete(g, d.t_minus[i], d.t[at(i + 3)]))
            throw invariant_violation("t-minus-anticomplete");
        if (!anticomplete(g, d.t_plus[i], d.t[at(i - 3)]))
            throw invariant_violation("t-plus-anticomplete");
    }
}

}  // namespace detail

// Greedy fixpoint growth of an inclusionwise maximal heptagram around an
// induced C7, then classification of the remainder into the t-sets. Scan
// order is lowest vertex index first, slots in cyclic order, so the result
// is deterministic. Every structural claim used downstream is re-checked;
// a violation means the input graph is outside the intended class.
inline HeptagramDecomposition grow_heptagram(const Graph& g, const std::vector<int>& cycle) {
    detail::require_induced_c7(g, cycle);
    auto at = [](int i) { return ((i % 7) + 7) % 7; };
    HeptagramDecomposition d;
    d.graph = g;
    std::vector<int> slot_of(g.order(), -1);
    for (int i = 0; i < 7; ++i) {
        d.h[i] = {cycle[i]};
        slot_of[cycle[i]] = i;
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < g.order(); ++v) {
            if (slot_of[v] >= 0) continue;
            for (int i = 0; i < 7; ++i) {
                if (detail::has_neighbor_in(g, v, d.h[i])) continue;
                if (!detail::has_neighbor_in(g, v, d.h[at(i - 1)]) ||
                    !detail::has_neighbor_in(g, v, d.h[at(i + 1)]))
                    continue;
                bool clash = false;
                for (int dlt : {-3, -2, 2, 3})
                    if (detail::has_neighbor_in(g, v, d.h[at(i + dlt)])) {
                        clash = true;
                        break;
                    }
                if (clash) continue;
                d.h[i].push_back(v);
                slot_of[v] = i;
                changed = true;
                break;
            }
        }
    }
    for (int v = 0; v < g.order(); ++v) {
        if (slot_of[v] >= 0) continue;
        unsigned sup = 0;
        for (int i = 0; i < 7; ++i)
            if (detail::has_neighbor_in(g, v, d.h[i])) sup |= 1u << i;
        int hit = -1;
        for (int i = 0; i < 7; ++i) {
            unsigned want = (1u << i) | (1u << at(i - 2)) | (1u << at(i + 2));
            if (sup == want) hit = i;
        }
        if (hit < 0) throw invariant_violation("t-support");
        d.t[hit].push_back(v);
    }
    for (int i = 0; i < 7; ++i)
        for (int v : d.t[i]) {
            if (detail::complete_to(g, v, d.h[at(i - 2)]))
                d.t_minus[i].push_back(v);
            else
                d.t_plus[i].push_back(v);
        }
    detail::check_decomposition(d);
    return d;
}

// The explicit 3-coloring around base slot i (1-based to match the usual
// v_1..v_7 notation): color 1 on H_{i-2}, H_i, H_{i+2}, T_{i-1}, T_{i+1};
// color 2 on H_{i-3}, H_{i-1}, T_{i-2}, T_{i+3}, T_i^-;
// color 3 on H_{i+1}, H_{i+3}, T_{i-3}, T_{i+2}, T_i^+.
inline Coloring three_coloring_from_decomposition(const HeptagramDecomposition& d, int base) {
    if (base < 1 || base > 7)
        throw std::invalid_argument("three_coloring_from_decomposition: base must be 1..7");
    auto at = [](int i) { return ((i % 7) + 7) % 7; };
    int i = base - 1;
    Coloring c{3, std::vector<int>(d.graph.order(), 0)};
    auto paint = [&](const std::vector<int>& set, int color) {
        for (int v : set) c.colors[v] = color;
    };
    paint(d.h[at(i - 2)], 1);
    paint(d.h[i], 1);
    paint(d.h[at(i + 2)], 1);
    paint(d.t[at(i - 1)], 1);
    paint(d.t[at(i + 1)], 1);
    paint(d.h[at(i - 3)], 2);
    paint(d.h[at(i - 1)], 2);
    paint(d.t[at(i - 2)], 2);
    paint(d.t[at(i + 3)], 2);
    paint(d.t_minus[i], 2);
    paint(d.h[at(i + 1)], 3);
    paint(d.h[at(i + 3)], 3);
    paint(d.t[at(i - 3)], 3);
    paint(d.t[at(i + 2)], 3);
    paint(d.t_plus[i], 3);
    if (!is_proper(d.graph, c)) throw invariant_violation("coloring-proper");
    return c;
}

// Random test instance realizing the decomposition structure: blocks of the
// given sizes (7 h-block sizes >= 1, then 7 t-class sizes), complete
// consecutive h-joins, t vertices wired per the attachment rules, plus the
// two cross-class t-t edge families that never break the coloring.
inline Graph generate_decomposition_instance(std::uint64_t seed,
                                             const std::array<int, 14>& sizes) {
    auto at = [](int i) { return ((i % 7) + 7) % 7; };
    for (int i = 0; i < 7; ++i)
        if (sizes[i] < 1)
            throw std::invalid_argument("generate_decomposition_instance: h sizes must be >= 1");
    for (int i = 7; i < 14; ++i)
        if (sizes[i] < 0)
            throw std::invalid_argument("generate_decomposition_instance: negative t size");
    std::mt19937_64 rng(seed);
    std::array<std::vector<int>, 7> h;
    int n = 0;
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < sizes[i]; ++j) h[i].push_back(n++);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 7; ++i)
        for (int u : h[i])
            for (int v : h[at(i + 1)]) edges.emplace_back(u, v);
    std::array<std::vector<int>, 7> t_all;
    std::vector<char> sign;  // per t vertex, '-' or '+'
    std::vector<int> t_class;
    for (int i = 0; i < 7; ++i) {
        for (int j = 0; j < sizes[7 + i]; ++j) {
            int v = n++;
            t_all[i].push_back(v);
            t_class.push_back(i);
            const auto& lo = h[at(i - 2)];
            const auto& hi = h[at(i + 2)];
            bool plus = lo.size() >= 2 && (rng() & 1);
            sign.push_back(plus ? '+' : '-');
            for (int u : h[i]) edges.emplace_back(v, u);
            const auto& near = plus ? hi : lo;
            const auto& far = plus ? lo : hi;
            for (int u : near) edges.emplace_back(v, u);
            // keep >= 1 far-side neighbor so the vertex stays a t vertex;
            // a '+' vertex must miss at least one lower-side vertex
            std::size_t cap = plus ? far.size() - 1 : far.size();
            std::size_t cnt = 1 + rng() % std::max<std::size_t>(cap, 1);
            std::vector<int> pick = far;
            for (std::size_t a = 0; a + 1 < pick.size(); ++a)
                std::swap(pick[a], pick[a + rng() % (pick.size() - a)]);
            for (std::size_t a = 0; a < cnt && a < pick.size(); ++a)
                edges.emplace_back(v, pick[a]);
        }
    }
    auto sign_of = [&](int v) { return sign[v - (n - static_cast<int>(sign.size()))]; };
    for (int i = 0; i < 7; ++i) {
        for (int u : t_all[i]) {
            for (int w : t_all[at(i + 1)])
                if (rng() & 1) edges.emplace_back(u, w);
            for (int w : t_all[at(i + 3)])
                if (sign_of(u) == '+' && sign_of(w) == '-' && (rng() & 1))
                    edges.emplace_back(u, w);
        }
    }
    return make_graph(n, edges);
}

}  // namespace critgraph
