#pragma once

#include <string>
#include <string_view>

#include "critgraph/graph.hpp"

namespace critgraph {

// graph6 text codec. Header encodes n (one char below 63, '~' + three chars
// up to 258047); body is the upper triangle in column order, 6 bits per
// printable char offset by 63.

inline std::string to_graph6(const Graph& g) {
    int n = g.order();
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

inline Graph from_graph6(std::string_view s) {
    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= s.size()) throw std::invalid_argument("graph6: truncated input");
        unsigned char c = static_cast<unsigned char>(s[pos++]);
        if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range");
        return c - 63;
    };
    if (s.empty()) throw std::invalid_argument("graph6: empty input");
    long long n;
    if (s[0] != '~') {
        n = next();
    } else {
        ++pos;
        if (pos < s.size() && s[pos] == '~')
            throw std::invalid_argument("graph6: order beyond supported range");
        n = 0;
        for (int i = 0; i < 3; ++i) n = (n << 6) | next();
    }
    if (n < 1 || n > kMaxOrder) throw std::invalid_argument("graph6: order out of range");
    std::vector<std::pair<int, int>> edges;
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (nbits == 0) {
                acc = next();
                nbits = 6;
            }
            if ((acc >> 5) & 1) edges.emplace_back(u, v);
            acc = (acc << 1) & 63;
            --nbits;
        }
    }
    if (nbits && acc != 0) throw std::invalid_argument("graph6: nonzero padding bits");
    if (pos != s.size()) throw std::invalid_argument("graph6: trailing garbage");
    return make_graph(static_cast<int>(n), edges);
}

}  // namespace critgraph
