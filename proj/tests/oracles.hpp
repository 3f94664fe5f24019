#pragma once

// Test-only oracles, independent of the library's query implementations.

#include <array>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "cgx/graph.hpp"

namespace oracle {

// Half-unit BFS: subdivide every weight-2 edge through a midpoint vertex so
// plain breadth-first search counts half-units directly. Independent of the
// bucket-queue implementation in the library.
inline std::vector<std::int64_t> half_unit_bfs(
    const cgx::graphcore::WeightedAdjacency& g, cgx::graphcore::VertexId source) {
    using namespace cgx::graphcore;
    std::size_t n = g.size();
    // Assign midpoint ids after the real vertices.
    std::map<std::pair<VertexId, VertexId>, std::size_t> midpoint;
    std::size_t next = n;
    for (VertexId v = 0; v < n; ++v)
        for (auto [u, w] : g.adj[v])
            if (w == 2 && v < u) midpoint[{v, u}] = next++;
    std::vector<std::vector<std::size_t>> adj(next);
    for (VertexId v = 0; v < n; ++v)
        for (auto [u, w] : g.adj[v]) {
            if (w == 1) {
                adj[v].push_back(u);
            } else if (v < u) {
                std::size_t m = midpoint[{v, u}];
                adj[v].push_back(m);
                adj[m].push_back(v);
                adj[u].push_back(m);
                adj[m].push_back(u);
            }
        }
    std::vector<std::int64_t> dist(next, -1);
    std::deque<std::size_t> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        std::size_t v = queue.front();
        queue.pop_front();
        for (std::size_t u : adj[v])
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
    }
    dist.resize(n);
    return dist;
}

// Subtractive Euclid trace on a width pair: the sequence of (loser-is-first,
// widths-after) steps, stopping at equality.
struct EuclidStep {
    bool first_loses;
    std::int64_t w1, w2;
};

inline std::vector<EuclidStep> subtractive_euclid(std::int64_t p, std::int64_t q) {
    std::vector<EuclidStep> steps;
    while (p != q) {
        if (p > q) {
            p -= q;
            steps.push_back({false, p, q});  // second band loses
        } else {
            q -= p;
            steps.push_back({true, p, q});
        }
    }
    return steps;
}

// Continued-fraction update product for the rotation pair (p, q): the
// subtractive steps multiply elementary matrices on the left; entry (i, j)
// counts passages of current band i over original band j.
inline std::array<std::array<std::int64_t, 2>, 2> euclid_passage_product(
    std::int64_t p, std::int64_t q) {
    std::array<std::array<std::int64_t, 2>, 2> m{{{1, 0}, {0, 1}}};
    while (p != q) {
        std::size_t loser, winner;
        if (p > q) {
            p -= q;
            loser = 1;
            winner = 0;
        } else {
            q -= p;
            loser = 0;
            winner = 1;
        }
        for (int j = 0; j < 2; ++j) m[loser][j] += m[winner][j];
    }
    return m;
}

}  // namespace oracle
