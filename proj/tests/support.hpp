#pragma once

// Shared brute-force oracle for the search tests: exhaustive isomorph-free
// enumeration of connected triangle-free graphs by one-vertex augmentation
// with independent attach sets. Deliberately independent of the search
// module's expansion/pruning machinery.

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "critgraph/canonical.hpp"
#include "critgraph/graph.hpp"

namespace testsupport {

using critgraph::Graph;

inline std::vector<std::vector<Graph>> connected_triangle_free_by_order(int n_max) {
    std::vector<std::vector<Graph>> by_order(n_max + 1);
    if (n_max < 1) return by_order;
    by_order[1].push_back(critgraph::make_graph(1, {}));
    for (int n = 2; n <= n_max; ++n) {
        std::unordered_set<std::string> seen;
        for (const Graph& g : by_order[n - 1]) {
            int m = g.order();
            for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
                bool independent = true;
                for (int v = 0; v < m && independent; ++v)
                    if (((mask >> v) & 1) && (g.row(v) & mask)) independent = false;
                if (!independent) continue;  // dependent set closes a triangle
                Graph child = critgraph::extend_with_neighbors(g, mask);
                if (seen.insert(critgraph::canonical_form(child).certificate).second)
                    by_order[n].push_back(child);
            }
        }
    }
    return by_order;
}

}  // namespace testsupport
