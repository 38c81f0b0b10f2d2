#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace critgraph {

// Hard cap for standalone checkers; search code additionally requires
// order <= 64 so one word holds a whole adjacency row.
inline constexpr int kMaxOrder = 4096;
inline constexpr int kSearchMaxOrder = 64;

struct VertexSet {
    int n = 0;                     // universe size
    std::vector<std::uint64_t> w;  // ceil(n/64) words

    explicit VertexSet(int universe = 0) : n(universe), w((universe + 63) / 64, 0) {}

    bool contains(int v) const { return (w[v >> 6] >> (v & 63)) & 1; }
    void add(int v) { w[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void remove(int v) { w[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    int count() const {
        int c = 0;
        for (auto x : w) c += std::popcount(x);
        return c;
    }

    std::vector<int> members() const {
        std::vector<int> out;
        for (std::size_t i = 0; i < w.size(); ++i) {
            std::uint64_t x = w[i];
            while (x) {
                out.push_back(static_cast<int>(i * 64) + std::countr_zero(x));
                x &= x - 1;
            }
        }
        return out;
    }

    bool operator==(const VertexSet&) const = default;
};

// Immutable simple graph. Adjacency is stored as n rows of ceil(n/64) words;
// all mutation-style operations return a fresh graph.
class Graph {
   public:
    Graph() = default;

    int order() const { return n_; }
    int words_per_row() const { return wpr_; }

    bool edge(int u, int v) const {
        return (w_[static_cast<std::size_t>(u) * wpr_ + (v >> 6)] >> (v & 63)) & 1;
    }

    int degree(int v) const {
        int d = 0;
        for (int i = 0; i < wpr_; ++i)
            d += std::popcount(w_[static_cast<std::size_t>(v) * wpr_ + i]);
        return d;
    }

    // Whole row as a single word; only valid while order <= 64.
    std::uint64_t row(int v) const { return w_[static_cast<std::size_t>(v) * wpr_]; }

    const std::uint64_t* row_words(int v) const {
        return w_.data() + static_cast<std::size_t>(v) * wpr_;
    }

    VertexSet neighbors(int v) const {
        VertexSet s(n_);
        for (int i = 0; i < wpr_; ++i) s.w[i] = row_words(v)[i];
        return s;
    }

    int edge_count() const {
        int m = 0;
        for (int v = 0; v < n_; ++v) m += degree(v);
        return m / 2;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (edge(u, v)) out.emplace_back(u, v);
        return out;
    }

    int min_degree() const {
        int d = n_;
        for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
        return d;
    }

    bool connected() const {
        if (n_ <= 1) return true;
        VertexSet seen(n_);
        std::vector<int> stack{0};
        seen.add(0);
        int cnt = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int i = 0; i < wpr_; ++i) {
                std::uint64_t x = row_words(v)[i] & ~seen.w[i];
                while (x) {
                    int u = i * 64 + std::countr_zero(x);
                    x &= x - 1;
                    seen.add(u);
                    ++cnt;
                    stack.push_back(u);
                }
            }
        }
        return cnt == n_;
    }

    bool operator==(const Graph&) const = default;

    friend Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges);
    friend Graph circulant(int n, const std::vector<int>& offsets);
    friend Graph delete_vertex(const Graph& g, int v);
    friend Graph disjoint_union(const Graph& g, const Graph& h);
    friend Graph extend_with_neighbors(const Graph& g, std::uint64_t nbr_mask);
    friend Graph permuted(const Graph& g, const std::vector<int>& perm);

   private:
    explicit Graph(int n)
        : n_(n), wpr_((n + 63) / 64), w_(static_cast<std::size_t>(n) * ((n + 63) / 64), 0) {}

    void set_edge(int u, int v) {
        w_[static_cast<std::size_t>(u) * wpr_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
        w_[static_cast<std::size_t>(v) * wpr_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    }

    int n_ = 0;
    int wpr_ = 0;
    std::vector<std::uint64_t> w_;
};

inline Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1 || n > kMaxOrder) throw std::invalid_argument("make_graph: order out of range");
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u == v) throw std::invalid_argument("make_graph: self-loop");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("make_graph: vertex out of range");
        g.set_edge(u, v);
    }
    return g;
}

inline Graph circulant(int n, const std::vector<int>& offsets) {
    if (n < 1 || n > kMaxOrder) throw std::invalid_argument("circulant: order out of range");
    Graph g(n);
    for (int d : offsets) {
        if (d < 1 || d >= n) throw std::invalid_argument("circulant: offset out of range");
        for (int i = 0; i < n; ++i) g.set_edge(i, (i + d) % n);
    }
    return g;
}

inline Graph delete_vertex(const Graph& g, int v) {
    int n = g.order();
    if (n < 2) throw std::invalid_argument("delete_vertex: graph has a single vertex");
    if (v < 0 || v >= n) throw std::invalid_argument("delete_vertex: vertex out of range");
    Graph out(n - 1);
    for (int u = 0; u < n; ++u) {
        if (u == v) continue;
        int uu = u < v ? u : u - 1;
        for (int x = u + 1; x < n; ++x) {
            if (x == v || !g.edge(u, x)) continue;
            int xx = x < v ? x : x - 1;
            out.set_edge(uu, xx);
        }
    }
    return out;
}

inline Graph disjoint_union(const Graph& g, const Graph& h) {
    int n = g.order() + h.order();
    if (n > kMaxOrder) throw std::invalid_argument("disjoint_union: order overflow");
    Graph out(n);
    for (auto [u, v] : g.edges()) out.set_edge(u, v);
    for (auto [u, v] : h.edges()) out.set_edge(g.order() + u, g.order() + v);
    return out;
}

// V(G) minus N(u), N(v), {u,v}.
inline VertexSet common_non_neighbors(const Graph& g, int u, int v) {
    if (u == v) throw std::invalid_argument("common_non_neighbors: u = v");
    VertexSet s(g.order());
    for (int x = 0; x < g.order(); ++x)
        if (x != u && x != v && !g.edge(u, x) && !g.edge(v, x)) s.add(x);
    return s;
}

// Search-path helper: append one vertex adjacent to exactly nbr_mask.
// Requires the result to still fit in single-word rows.
inline Graph extend_with_neighbors(const Graph& g, std::uint64_t nbr_mask) {
    int n = g.order();
    if (n + 1 > kSearchMaxOrder)
        throw std::invalid_argument("extend_with_neighbors: search order cap exceeded");
    Graph out(n + 1);
    for (int v = 0; v < n; ++v) out.w_[v] = g.w_[v];
    std::uint64_t m = nbr_mask;
    while (m) {
        int v = std::countr_zero(m);
        m &= m - 1;
        if (v >= n) throw std::invalid_argument("extend_with_neighbors: mask out of range");
        out.set_edge(v, n);
    }
    return out;
}

// Relabeled copy: vertex v of g becomes perm[v].
inline Graph permuted(const Graph& g, const std::vector<int>& perm) {
    int n = g.order();
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("permuted: permutation size mismatch");
    Graph out(n);
    for (auto [u, v] : g.edges()) out.set_edge(perm[u], perm[v]);
    return out;
}

}  // namespace critgraph
