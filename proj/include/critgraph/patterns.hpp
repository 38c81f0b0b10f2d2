#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "critgraph/graph.hpp"

namespace critgraph {

// One term of a forbidden-pattern expression: multiplicity copies of a
// path (P), cycle (C) or clique (K) on `size` vertices.
struct PatternTerm {
    int multiplicity = 1;
    char kind = 'P';
    int size = 1;

    bool operator==(const PatternTerm&) const = default;
};

inline Graph pattern_base_graph(char kind, int size) {
    std::vector<std::pair<int, int>> e;
    switch (kind) {
        case 'P':
            for (int i = 0; i + 1 < size; ++i) e.emplace_back(i, i + 1);
            break;
        case 'C':
            for (int i = 0; i < size; ++i) e.emplace_back(i, (i + 1) % size);
            break;
        case 'K':
            for (int i = 0; i < size; ++i)
                for (int j = i + 1; j < size; ++j) e.emplace_back(i, j);
            break;
        default:
            throw std::invalid_argument("pattern: unknown base kind");
    }
    return make_graph(size, e);
}

struct PatternExpr {
    std::vector<PatternTerm> terms;  // normalized: (kind, size) descending, merged
    Graph expanded;                  // disjoint union in term order

    std::string text() const {
        std::string out;
        for (std::size_t i = 0; i < terms.size(); ++i) {
            if (i) out.push_back('+');
            if (terms[i].multiplicity > 1) out += std::to_string(terms[i].multiplicity);
            out.push_back(terms[i].kind);
            out += std::to_string(terms[i].size);
        }
        return out;
    }

    bool operator==(const PatternExpr& o) const { return terms == o.terms; }
};

inline PatternExpr make_pattern(std::vector<PatternTerm> terms) {
    for (const auto& t : terms) {
        if (t.multiplicity < 1) throw std::invalid_argument("pattern: zero multiplicity");
        if (t.kind != 'P' && t.kind != 'C' && t.kind != 'K')
            throw std::invalid_argument("pattern: unknown base kind");
        int min_size = t.kind == 'C' ? 3 : 1;
        if (t.size < min_size) throw std::invalid_argument("pattern: base size too small");
    }
    std::sort(terms.begin(), terms.end(), [](const PatternTerm& a, const PatternTerm& b) {
        if (a.kind != b.kind) return a.kind > b.kind;
        return a.size > b.size;
    });
    std::vector<PatternTerm> merged;
    for (const auto& t : terms) {
        if (!merged.empty() && merged.back().kind == t.kind && merged.back().size == t.size)
            merged.back().multiplicity += t.multiplicity;
        else
            merged.push_back(t);
    }
    PatternExpr e;
    e.terms = std::move(merged);
    bool first = true;
    for (const auto& t : e.terms) {
        Graph base = pattern_base_graph(t.kind, t.size);
        for (int c = 0; c < t.multiplicity; ++c) {
            e.expanded = first ? base : disjoint_union(e.expanded, base);
            first = false;
        }
    }
    return e;
}

// Grammar: EXPR := TERM ("+" TERM)*; TERM := [multiplicity] BASE;
// BASE := ("P"|"C"|"K") digits. Whitespace is ignored.
inline PatternExpr parse_pattern(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("pattern: empty input");
    std::vector<PatternTerm> terms;
    std::size_t pos = 0;
    auto digits = [&](bool required) -> std::optional<int> {
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) {
            if (required) throw std::invalid_argument("pattern: expected digits");
            return std::nullopt;
        }
        long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos++] - '0');
            if (v > kMaxOrder) throw std::invalid_argument("pattern: size too large");
        }
        return static_cast<int>(v);
    };
    while (true) {
        PatternTerm t;
        if (auto m = digits(false)) t.multiplicity = *m;
        if (pos >= s.size()) throw std::invalid_argument("pattern: missing base");
        t.kind = s[pos++];
        t.size = *digits(true);
        terms.push_back(t);
        if (pos == s.size()) break;
        if (s[pos] != '+') throw std::invalid_argument("pattern: expected '+'");
        ++pos;
        if (pos == s.size()) throw std::invalid_argument("pattern: trailing '+'");
    }
    return make_pattern(std::move(terms));
}

// Injective vertex map pattern -> host with induced semantics.
struct Embedding {
    std::vector<int> map;
};

inline bool embedding_valid(const Graph& host, const Graph& pattern, const Embedding& emb) {
    int p = pattern.order();
    if (static_cast<int>(emb.map.size()) != p) return false;
    for (int a = 0; a < p; ++a)
        for (int b = a + 1; b < p; ++b) {
            if (emb.map[a] == emb.map[b]) return false;
            if (pattern.edge(a, b) != host.edge(emb.map[a], emb.map[b])) return false;
        }
    return true;
}

namespace detail {

// Plain backtracking: repeatedly map the unassigned pattern vertex with the
// most already-assigned neighbors (ties: higher degree, lower index).
// When `anchor_host` >= 0, pattern vertex `anchor_pat` is pre-assigned to it.
inline bool embed_search(const Graph& host, const Graph& pattern, std::vector<int>& map,
                         VertexSet& used, int assigned) {
    int p = pattern.order();
    if (assigned == p) return true;
    int best = -1, best_cnt = -1, best_deg = -1;
    for (int a = 0; a < p; ++a) {
        if (map[a] >= 0) continue;
        int cnt = 0;
        for (int b = 0; b < p; ++b)
            if (map[b] >= 0 && pattern.edge(a, b)) ++cnt;
        int deg = pattern.degree(a);
        if (cnt > best_cnt || (cnt == best_cnt && deg > best_deg)) {
            best = a;
            best_cnt = cnt;
            best_deg = deg;
        }
    }
    for (int h = 0; h < host.order(); ++h) {
        if (used.contains(h)) continue;
        if (host.degree(h) < best_deg) continue;
        bool ok = true;
        for (int b = 0; b < p && ok; ++b)
            if (map[b] >= 0 && pattern.edge(best, b) != host.edge(h, map[b])) ok = false;
        if (!ok) continue;
        map[best] = h;
        used.add(h);
        if (embed_search(host, pattern, map, used, assigned + 1)) return true;
        map[best] = -1;
        used.remove(h);
    }
    return false;
}

}  // namespace detail

inline std::optional<Embedding> contains_induced(const Graph& host, const Graph& pattern) {
    if (pattern.order() > host.order()) return std::nullopt;
    std::vector<int> map(pattern.order(), -1);
    VertexSet used(host.order());
    if (!detail::embed_search(host, pattern, map, used, 0)) return std::nullopt;
    return Embedding{std::move(map)};
}

// Like contains_induced but only embeddings whose image covers host vertex v.
inline std::optional<Embedding> contains_induced_through(const Graph& host, const Graph& pattern,
                                                         int v) {
    if (pattern.order() > host.order()) return std::nullopt;
    for (int a = 0; a < pattern.order(); ++a) {
        if (host.degree(v) < pattern.degree(a)) continue;
        std::vector<int> map(pattern.order(), -1);
        VertexSet used(host.order());
        map[a] = v;
        used.add(v);
        if (detail::embed_search(host, pattern, map, used, 1)) return Embedding{std::move(map)};
    }
    return std::nullopt;
}

// Linear C3 checks: two adjacent vertices sharing a neighbor, via row words.
inline bool has_triangle_through(const Graph& g, int v) {
    for (int i = 0; i < g.words_per_row(); ++i) {
        std::uint64_t x = g.row_words(v)[i];
        while (x) {
            int u = i * 64 + std::countr_zero(x);
            x &= x - 1;
            for (int j = 0; j < g.words_per_row(); ++j)
                if (g.row_words(v)[j] & g.row_words(u)[j]) return true;
        }
    }
    return false;
}

inline bool has_triangle(const Graph& g) {
    for (auto [u, v] : g.edges())
        for (int j = 0; j < g.words_per_row(); ++j)
            if (g.row_words(u)[j] & g.row_words(v)[j]) return true;
    return false;
}

inline bool is_single_triangle_pattern(const PatternExpr& e) {
    return e.terms.size() == 1 && e.terms[0].multiplicity == 1 && e.terms[0].size == 3 &&
           (e.terms[0].kind == 'C' || e.terms[0].kind == 'K');
}

inline bool is_family_free(const Graph& host, const std::vector<PatternExpr>& family) {
    for (const auto& e : family) {
        if (is_single_triangle_pattern(e)) {
            if (has_triangle(host)) return false;
        } else if (contains_induced(host, e.expanded)) {
            return false;
        }
    }
    return true;
}

// Fast path for the search loop: host minus new_vertex is already known to be
// family-free, so any forbidden copy must use new_vertex.
inline bool incremental_free_check(const Graph& host, const std::vector<PatternExpr>& family,
                                   int new_vertex) {
    for (const auto& e : family) {
        if (is_single_triangle_pattern(e)) {
            if (has_triangle_through(host, new_vertex)) return false;
        } else if (contains_induced_through(host, e.expanded, new_vertex)) {
            return false;
        }
    }
    return true;
}

}  // namespace critgraph
