#pragma once

// Shared builders for test graphs and random instances.

#include <string>
#include <utility>
#include <vector>

#include "cgx/graph.hpp"
#include "cgx/rng.hpp"

namespace helpers {

using cgx::graphcore::Graph;
using cgx::graphcore::SubsetFamily;

inline std::vector<std::string> vertex_names(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    return names;
}

inline Graph path_graph(std::size_t n) {
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 0; i + 1 < n; ++i)
        edges.emplace_back("v" + std::to_string(i), "v" + std::to_string(i + 1));
    return Graph(vertex_names(n), edges);
}

inline Graph cycle_graph(std::size_t n) {
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 0; i < n; ++i)
        edges.emplace_back("v" + std::to_string(i), "v" + std::to_string((i + 1) % n));
    return Graph(vertex_names(n), edges);
}

// Uniform random labelled tree via a Pruefer-style attachment.
inline Graph random_tree(std::size_t n, cgx::SplitMix64& rng) {
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 1; i < n; ++i) {
        std::size_t parent = rng.next_below(i);
        edges.emplace_back("v" + std::to_string(i), "v" + std::to_string(parent));
    }
    return Graph(vertex_names(n), edges);
}

// Connected random graph: a random tree plus extra random edges.
inline Graph random_connected_graph(std::size_t n, std::size_t extra_edges,
                                    cgx::SplitMix64& rng) {
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 1; i < n; ++i)
        edges.emplace_back("v" + std::to_string(i),
                           "v" + std::to_string(rng.next_below(i)));
    for (std::size_t k = 0; k < extra_edges; ++k) {
        std::size_t a = rng.next_below(n);
        std::size_t b = rng.next_below(n);
        if (a == b) continue;
        edges.emplace_back("v" + std::to_string(a), "v" + std::to_string(b));
    }
    return Graph(vertex_names(n), edges);
}

inline SubsetFamily random_family(const Graph& g, std::size_t members,
                                  cgx::SplitMix64& rng) {
    std::vector<std::pair<std::string, std::vector<std::string>>> fam;
    for (std::size_t m = 0; m < members; ++m) {
        std::size_t size = 1 + rng.next_below(std::max<std::size_t>(
                                   1, g.vertex_count() / 2));
        std::vector<std::string> vs;
        for (std::size_t i = 0; i < size; ++i)
            vs.push_back(g.name(static_cast<cgx::graphcore::VertexId>(
                rng.next_below(g.vertex_count()))));
        fam.emplace_back("Y" + std::to_string(m), vs);
    }
    return SubsetFamily(g, fam);
}

}  // namespace helpers
