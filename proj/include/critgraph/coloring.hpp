#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "critgraph/graph.hpp"

namespace critgraph {

struct Coloring {
    int k = 0;                // palette size
    std::vector<int> colors;  // vertex -> 1..k, total
};

inline bool is_proper(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.colors.size()) != g.order()) return false;
    for (int v = 0; v < g.order(); ++v)
        if (c.colors[v] < 1 || c.colors[v] > c.k) return false;
    for (auto [u, v] : g.edges())
        if (c.colors[u] == c.colors[v]) return false;
    return true;
}

namespace detail {

// Reverse degeneracy elimination order. Elimination repeatedly removes a
// vertex of minimum remaining degree (ties: lower full degree, then higher
// index), so coloring starts from the dense end, descending degree first.
inline std::vector<int> coloring_order(const Graph& g) {
    int n = g.order();
    std::vector<int> rem_deg(n), order;
    std::vector<bool> gone(n, false);
    for (int v = 0; v < n; ++v) rem_deg[v] = g.degree(v);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (gone[v]) continue;
            if (best < 0 || rem_deg[v] < rem_deg[best] ||
                (rem_deg[v] == rem_deg[best] &&
                 (g.degree(v) < g.degree(best) ||
                  (g.degree(v) == g.degree(best) && v > best))))
                best = v;
        }
        gone[best] = true;
        order.push_back(best);
        for (int u = 0; u < n; ++u)
            if (!gone[u] && g.edge(best, u)) --rem_deg[u];
    }
    std::reverse(order.begin(), order.end());
    return order;
}

}  // namespace detail

// Exact backtracking with forward checking and first-use color symmetry
// breaking (color c is tried only after 1..c-1 appear).
inline std::optional<Coloring> k_colorable(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("k_colorable: k must be positive");
    if (k > 64) throw std::invalid_argument("k_colorable: palette cap is 64");
    int n = g.order();
    if (k >= n) {
        Coloring c{k, std::vector<int>(n)};
        std::iota(c.colors.begin(), c.colors.end(), 1);
        return c;
    }
    std::vector<int> order = detail::coloring_order(g);
    std::vector<int> pos(n);  // vertex -> position in order
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    const std::uint64_t full = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
    std::vector<std::uint64_t> avail(n, full);
    std::vector<int> color(n, 0);

    auto rec = [&](auto&& self, int idx, int max_used) -> bool {
        if (idx == n) return true;
        int v = order[idx];
        std::uint64_t cand = avail[v];
        int cap = std::min(max_used + 1, k);
        cand &= cap == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << cap) - 1;
        while (cand) {
            int c = std::countr_zero(cand);
            cand &= cand - 1;
            color[v] = c + 1;
            bool dead = false;
            std::vector<std::pair<int, std::uint64_t>> undo;
            for (int u = 0; u < n && !dead; ++u) {
                if (color[u] || !g.edge(v, u)) continue;
                if (avail[u] & (std::uint64_t{1} << c)) {
                    undo.emplace_back(u, avail[u]);
                    avail[u] &= ~(std::uint64_t{1} << c);
                    if (!avail[u]) dead = true;
                }
            }
            if (!dead && self(self, idx + 1, std::max(max_used, c + 1))) return true;
            for (auto& [u, old] : undo) avail[u] = old;
            color[v] = 0;
        }
        return false;
    };
    if (!rec(rec, 0, 0)) return std::nullopt;
    return Coloring{k, color};
}

inline int greedy_clique_lower_bound(const Graph& g) {
    int n = g.order();
    std::vector<int> by_deg(n);
    std::iota(by_deg.begin(), by_deg.end(), 0);
    std::sort(by_deg.begin(), by_deg.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    std::vector<int> clique;
    for (int v : by_deg) {
        bool ok = true;
        for (int u : clique)
            if (!g.edge(u, v)) {
                ok = false;
                break;
            }
        if (ok) clique.push_back(v);
    }
    return static_cast<int>(clique.size());
}

inline int chromatic_number(const Graph& g) {
    if (g.order() == 0) return 0;
    if (g.edge_count() == 0) return 1;
    for (int k = std::max(2, greedy_clique_lower_bound(g)); k <= g.order(); ++k)
        if (k_colorable(g, k)) return k;
    return g.order();  // unreachable: n colors always suffice
}

struct CriticalityReport {
    int chromatic = 0;
    bool is_critical = false;
    std::vector<Coloring> witnesses;  // (k-1)-coloring of g minus v, per vertex
    int culprit = -1;                 // deletion that stays k-chromatic, if any
};

inline CriticalityReport is_k_vertex_critical(const Graph& g, int k) {
    if (k < 2) throw std::invalid_argument("is_k_vertex_critical: k must be at least 2");
    CriticalityReport r;
    r.chromatic = chromatic_number(g);
    if (r.chromatic != k) return r;
    if (g.order() == 1) return r;  // chromatic 1 < 2 <= k, unreachable
    r.witnesses.resize(g.order());
    for (int v = 0; v < g.order(); ++v) {
        auto c = k_colorable(delete_vertex(g, v), k - 1);
        if (!c) {
            r.culprit = v;
            r.witnesses.clear();
            return r;
        }
        r.witnesses[v] = *c;
    }
    r.is_critical = true;
    return r;
}

// Explicit 3-coloring of the circulant family member minus one vertex:
// position class mod 3 after rotating the deleted vertex to the front.
// Offsets are 1 and 5,8,...,5+3k on 3k+10 vertices, so inside the rotated
// line v_1..v_{n-1} every edge difference is 1 or 2 mod 3; only the removed
// wraparound pair had difference 0 mod 3.
inline Coloring mod3_deletion_coloring(int k, int deleted) {
    if (k < 1) throw std::invalid_argument("mod3_deletion_coloring: k must be positive");
    int n = 3 * k + 10;
    if (deleted < 0 || deleted >= n)
        throw std::invalid_argument("mod3_deletion_coloring: vertex out of range");
    Coloring c{3, std::vector<int>(n - 1)};
    for (int v = 0; v < n; ++v) {
        if (v == deleted) continue;
        int pos = (v - deleted + n) % n;  // 1..n-1
        c.colors[v < deleted ? v : v - 1] = (pos - 1) % 3 + 1;
    }
    return c;
}

}  // namespace critgraph
