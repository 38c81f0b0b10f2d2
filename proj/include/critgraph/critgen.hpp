#pragma once

#include <atomic>
#include <chrono>
#include <cstdio>
#include <mutex>
#include <optional>
#include <thread>
#include <unordered_set>
#include <vector>

#include "critgraph/canonical.hpp"
#include "critgraph/coloring.hpp"
#include "critgraph/graph.hpp"
#include "critgraph/patterns.hpp"

namespace critgraph {

struct RuleToggles {
    bool comparable_vertex = true;  // R3
    bool deficiency = true;         // R4
};

struct SearchConfig {
    int k = 4;
    std::optional<int> n_max;  // nullopt = unbounded
    std::vector<PatternExpr> family;
    Graph seed;
    RuleToggles rules;
    std::uint64_t budget_nodes = 0;  // 0 = no budget
    int jobs = 1;
    std::uint64_t progress_every = 0;  // stderr cadence in nodes, 0 = silent
};

struct SearchStats {
    std::uint64_t nodes = 0;  // nodes entered (dedup hits included)
    std::uint64_t dedup_hits = 0;
    std::uint64_t children_family_rejected = 0;  // R1 at child generation
    std::uint64_t pruned_comparable = 0;         // R3
    std::uint64_t pruned_deficiency = 0;         // R4
    double wall_seconds = 0;
};

struct SearchOutcome {
    std::vector<Graph> criticals;  // sorted by (order, certificate bytes)
    int largest_unpruned_order = 0;
    bool inconclusive = false;
    SearchStats stats;
};

enum class PruneReason { family, comparable_vertex, deficiency };

// R3: some saturated vertex u has its whole neighborhood inside a
// non-neighbor's (a k-critical target never contains such a pair, and once
// deg(u) >= k-1 the anchored expansion is not forced to separate them).
inline bool comparable_vertex_prunable(const Graph& g, int k) {
    int n = g.order();
    for (int u = 0; u < n; ++u) {
        if (g.degree(u) < k - 1) continue;
        std::uint64_t ru = g.row(u);
        for (int v = 0; v < n; ++v) {
            if (v == u || g.edge(u, v)) continue;
            if ((ru & ~g.row(v)) == 0) return true;
        }
    }
    return false;
}

// R4: saturating a deficient vertex needs one fresh neighbor per missing
// degree, so any target containing g has order at least
// |g| + (k-1-deg(v)); prune when that already overshoots the bound.
inline bool deficiency_prunable(const Graph& g, int k, int n_max) {
    for (int v = 0; v < g.order(); ++v) {
        int d = g.degree(v);
        if (d < k - 1 && g.order() + (k - 1 - d) > n_max) return true;
    }
    return false;
}

inline std::optional<PruneReason> prune(const Graph& g, int k,
                                        const std::vector<PatternExpr>& family,
                                        std::optional<int> n_max,
                                        const RuleToggles& rules = {}) {
    if (!is_family_free(g, family)) return PruneReason::family;
    if (rules.comparable_vertex && comparable_vertex_prunable(g, k))
        return PruneReason::comparable_vertex;
    if (rules.deficiency && n_max && deficiency_prunable(g, k, *n_max))
        return PruneReason::deficiency;
    return std::nullopt;
}

namespace detail {

// Subsets of V(g) that the new vertex may attach to: always containing the
// anchor when one is given, nonempty otherwise; independent sets only when
// the family forbids triangles (the new vertex's neighborhood closing a
// triangle is exactly a dependent subset).
inline void enumerate_attach_masks(const Graph& g, int anchor, bool independent_only,
                                   std::vector<std::uint64_t>& out) {
    int n = g.order();
    std::uint64_t base = anchor >= 0 ? std::uint64_t{1} << anchor : 0;
    auto rec = [&](auto&& self, int v, std::uint64_t mask) -> void {
        if (v == n) {
            if (mask) out.push_back(mask);
            return;
        }
        if (v == anchor) {
            self(self, v + 1, mask);
            return;
        }
        self(self, v + 1, mask);
        if (!independent_only || (g.row(v) & mask) == 0) self(self, v + 1, mask | (std::uint64_t{1} << v));
    };
    rec(rec, 0, base);
}

}  // namespace detail

// One-vertex extensions of a family-free (k-1)-colorable graph, each allowed
// by the expansion rule and individually family-free. When an unsaturated
// vertex exists the lowest-degree one (ties: lowest index) anchors every
// extension; otherwise any nonempty subset may be attached.
inline std::vector<Graph> expand(const Graph& g, int k, const std::vector<PatternExpr>& family,
                                 SearchStats* stats = nullptr) {
    int n = g.order();
    if (n + 1 > kSearchMaxOrder) return {};
    int anchor = -1;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) >= k - 1) continue;
        if (anchor < 0 || g.degree(v) < g.degree(anchor)) anchor = v;
    }
    bool triangle_forbidden = false;
    for (const auto& e : family)
        if (is_single_triangle_pattern(e)) triangle_forbidden = true;
    std::vector<std::uint64_t> masks;
    detail::enumerate_attach_masks(g, anchor, triangle_forbidden, masks);
    std::vector<Graph> out;
    out.reserve(masks.size());
    for (std::uint64_t m : masks) {
        Graph child = extend_with_neighbors(g, m);
        if (incremental_free_check(child, family, n))
            out.push_back(std::move(child));
        else if (stats)
            ++stats->children_family_rejected;
    }
    return out;
}

namespace detail {

struct SearchCtx {
    const SearchConfig* cfg;
    std::mutex store_mu;
    std::unordered_set<std::string> store;
    std::mutex emit_mu;
    std::vector<std::pair<std::string, Graph>> emitted;  // cert, graph
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<std::uint64_t> dedup_hits{0};
    std::atomic<std::uint64_t> family_rejected{0};
    std::atomic<std::uint64_t> pruned_comparable{0};
    std::atomic<std::uint64_t> pruned_deficiency{0};
    std::atomic<int> largest_unpruned{0};
    std::atomic<bool> out_of_budget{false};
    std::atomic<bool> order_cap_hit{false};

    bool enter_node() {
        std::uint64_t c = nodes.fetch_add(1) + 1;
        if (cfg->budget_nodes && c > cfg->budget_nodes) {
            out_of_budget.store(true);
            return false;
        }
        if (cfg->progress_every && c % cfg->progress_every == 0) {
            std::fprintf(stderr, "progress nodes=%llu criticals=%zu\n",
                         static_cast<unsigned long long>(c), emitted.size());
        }
        return true;
    }

    void raise_unpruned(int order) {
        int cur = largest_unpruned.load();
        while (order > cur && !largest_unpruned.compare_exchange_weak(cur, order)) {
        }
    }
};

// Processes one node; children that still need recursion land in `kids`.
inline void process_node(const Graph& g, SearchCtx& ctx, std::vector<Graph>& kids) {
    kids.clear();
    if (ctx.out_of_budget.load(std::memory_order_relaxed)) return;
    if (!ctx.enter_node()) return;
    std::string cert = canonical_form(g).certificate;
    {
        std::lock_guard lk(ctx.store_mu);
        if (!ctx.store.insert(cert).second) {
            ctx.dedup_hits.fetch_add(1, std::memory_order_relaxed);
            return;
        }
    }
    const SearchConfig& cfg = *ctx.cfg;
    if (cfg.rules.comparable_vertex && comparable_vertex_prunable(g, cfg.k)) {
        ctx.pruned_comparable.fetch_add(1, std::memory_order_relaxed);
        return;
    }
    if (cfg.rules.deficiency && cfg.n_max && deficiency_prunable(g, cfg.k, *cfg.n_max)) {
        ctx.pruned_deficiency.fetch_add(1, std::memory_order_relaxed);
        return;
    }
    ctx.raise_unpruned(g.order());
    if (k_colorable(g, cfg.k - 1)) {
        if (!cfg.n_max || g.order() < *cfg.n_max) {
            if (g.order() + 1 > kSearchMaxOrder) {
                // cannot expand further, so completeness is no longer certified
                ctx.order_cap_hit.store(true);
                return;
            }
            SearchStats local{};
            kids = expand(g, cfg.k, cfg.family, &local);
            ctx.family_rejected.fetch_add(local.children_family_rejected,
                                          std::memory_order_relaxed);
        }
        return;
    }
    if (is_k_vertex_critical(g, cfg.k).is_critical) {
        std::lock_guard lk(ctx.emit_mu);
        ctx.emitted.emplace_back(std::move(cert), g);
    }
}

inline void dfs(const Graph& g, SearchCtx& ctx) {
    std::vector<Graph> kids;
    process_node(g, ctx, kids);
    for (auto& child : kids) dfs(child, ctx);
}

}  // namespace detail

inline SearchOutcome generate(const SearchConfig& cfg) {
    if (cfg.k < 2) throw std::invalid_argument("generate: k must be at least 2");
    if (cfg.seed.order() < 1) throw std::invalid_argument("generate: empty seed");
    if (!is_family_free(cfg.seed, cfg.family))
        throw std::invalid_argument("generate: seed is not family-free");
    if (cfg.n_max && *cfg.n_max < cfg.seed.order())
        throw std::invalid_argument("generate: n_max below seed order");
    if (!k_colorable(cfg.seed, cfg.k - 1) &&
        !is_k_vertex_critical(cfg.seed, cfg.k).is_critical)
        throw std::invalid_argument(
            "generate: degenerate seed (neither (k-1)-colorable nor k-vertex-critical)");

    auto t0 = std::chrono::steady_clock::now();
    detail::SearchCtx ctx;
    ctx.cfg = &cfg;

    int jobs = std::max(1, cfg.jobs);
    if (jobs == 1) {
        detail::dfs(cfg.seed, ctx);
    } else {
        // widen a frontier single-threaded, then fan the subtrees out
        std::vector<Graph> frontier{cfg.seed};
        std::size_t want = static_cast<std::size_t>(4) * jobs;
        std::size_t head = 0;
        while (head < frontier.size() && frontier.size() - head < want) {
            std::vector<Graph> kids;
            detail::process_node(frontier[head++], ctx, kids);
            for (auto& k : kids) frontier.push_back(std::move(k));
        }
        std::atomic<std::size_t> next{head};
        auto worker = [&] {
            for (std::size_t i; (i = next.fetch_add(1)) < frontier.size();)
                detail::dfs(frontier[i], ctx);
        };
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    SearchOutcome out;
    out.inconclusive = ctx.out_of_budget.load() || ctx.order_cap_hit.load();
    out.largest_unpruned_order = ctx.largest_unpruned.load();
    std::sort(ctx.emitted.begin(), ctx.emitted.end(), [](const auto& a, const auto& b) {
        if (a.second.order() != b.second.order()) return a.second.order() < b.second.order();
        return a.first < b.first;
    });
    for (auto& [cert, g] : ctx.emitted) out.criticals.push_back(std::move(g));
    out.stats.nodes = ctx.nodes.load();
    out.stats.dedup_hits = ctx.dedup_hits.load();
    out.stats.children_family_rejected = ctx.family_rejected.load();
    out.stats.pruned_comparable = ctx.pruned_comparable.load();
    out.stats.pruned_deficiency = ctx.pruned_deficiency.load();
    out.stats.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

}  // namespace critgraph
