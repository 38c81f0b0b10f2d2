#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "critgraph/graph.hpp"

namespace critgraph {

// Isomorphism-invariant certificate: equal bytes iff isomorphic graphs.
struct CanonicalForm {
    std::string certificate;

    bool operator==(const CanonicalForm&) const = default;
    bool operator<(const CanonicalForm& o) const { return certificate < o.certificate; }
};

namespace detail {

// Iterative color refinement: vertex signature is (own color, sorted
// multiset of neighbor colors); new color ids are ranks of sorted unique
// signatures, so the result is label-invariant.
inline int refine_colors(const std::vector<std::uint64_t>& adj, std::vector<int>& colors) {
    int n = static_cast<int>(adj.size());
    int classes = 0;
    while (true) {
        std::vector<std::pair<std::vector<int>, int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> s{colors[v]};
            std::uint64_t x = adj[v];
            while (x) {
                s.push_back(colors[std::countr_zero(x)]);
                x &= x - 1;
            }
            std::sort(s.begin() + 1, s.end());
            sig[v] = {std::move(s), v};
        }
        std::vector<std::pair<std::vector<int>, int>> sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        int next = 0;
        std::vector<int> fresh(n);
        for (int i = 0; i < n; ++i) {
            if (i && sorted[i].first != sorted[i - 1].first) ++next;
            fresh[sorted[i].second] = next;
        }
        int fresh_classes = next + 1;
        colors = std::move(fresh);
        if (fresh_classes == classes) return classes;
        classes = fresh_classes;
        if (classes == n) return classes;
    }
}

inline void canon_rec(const std::vector<std::uint64_t>& adj, std::vector<int> colors,
                      std::string& best) {
    int n = static_cast<int>(adj.size());
    int classes = refine_colors(adj, colors);
    if (classes == n) {
        // colors form a permutation: vertex v takes slot colors[v]
        std::vector<int> inv(n);
        for (int v = 0; v < n; ++v) inv[colors[v]] = v;
        std::string bits;
        bits.reserve((n * (n - 1) / 2 + 7) / 8);
        int acc = 0, nb = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                acc = (acc << 1) | static_cast<int>((adj[inv[i]] >> inv[j]) & 1);
                if (++nb == 8) {
                    bits.push_back(static_cast<char>(acc));
                    acc = 0;
                    nb = 0;
                }
            }
        if (nb) bits.push_back(static_cast<char>(acc << (8 - nb)));
        if (best.empty() || bits < best) best = std::move(bits);
        return;
    }
    // branch on the first non-singleton cell, individualizing each member
    std::vector<int> count(classes, 0);
    for (int v = 0; v < n; ++v) ++count[colors[v]];
    int cell = 0;
    while (count[cell] == 1) ++cell;
    for (int v = 0; v < n; ++v) {
        if (colors[v] != cell) continue;
        std::vector<int> branched = colors;
        branched[v] = classes;  // fresh color splits v out; refine renormalizes
        canon_rec(adj, std::move(branched), best);
    }
}

}  // namespace detail

inline CanonicalForm canonical_form(const Graph& g) {
    int n = g.order();
    if (n > kSearchMaxOrder)
        throw std::invalid_argument("canonical_form: order above search cap");
    std::vector<std::uint64_t> adj(n);
    for (int v = 0; v < n; ++v) adj[v] = g.row(v);
    std::string best;
    detail::canon_rec(adj, std::vector<int>(n, 0), best);
    CanonicalForm cf;
    cf.certificate.push_back(static_cast<char>(n));
    cf.certificate += best;
    return cf;
}

}  // namespace critgraph
