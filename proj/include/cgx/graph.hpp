#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cgx/errors.hpp"

namespace cgx::graphcore {

using VertexId = std::uint32_t;
inline constexpr VertexId kNoVertex = static_cast<VertexId>(-1);

// Adjacency with half-unit edge weights. Base edges weigh 2, cone edges 1.
struct WeightedAdjacency {
    std::vector<std::vector<std::pair<VertexId, std::uint8_t>>> adj;

    std::size_t size() const { return adj.size(); }
};

// Finite simple graph with named vertices and unit-length edges.
// Immutable after construction; every query is pure.
class Graph {
public:
    Graph() = default;
    Graph(std::vector<std::string> names,
          const std::vector<std::pair<std::string, std::string>>& edges);

    std::size_t vertex_count() const { return names_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const std::string& name(VertexId v) const { return names_[v]; }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<VertexId> find(const std::string& name) const;
    VertexId require(const std::string& name) const;

    const std::vector<VertexId>& neighbors(VertexId v) const { return adj_[v]; }
    bool has_edge(VertexId u, VertexId v) const;

    // Sorted canonical edge list (u < v).
    const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }

    // Half-unit weighted view: every edge has weight 2.
    WeightedAdjacency weighted() const;

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, VertexId> index_;
    std::vector<std::vector<VertexId>> adj_;
    std::vector<std::pair<VertexId, VertexId>> edges_;
};

// Indexed family of vertex subsets. Members may repeat as sets; identity is
// the index, and set-level deduplication happens only where the counting
// semantics ask for it.
class SubsetFamily {
public:
    struct Member {
        std::string label;
        std::vector<VertexId> vertices;  // sorted, unique
    };

    SubsetFamily() = default;

    // Validates every member against the graph and refuses empty members.
    SubsetFamily(const Graph& g,
                 const std::vector<std::pair<std::string, std::vector<std::string>>>& members);

    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const Member& member(std::size_t i) const { return members_[i]; }
    const std::vector<Member>& members() const { return members_; }

private:
    std::vector<Member> members_;
};

// Base graph plus one cone vertex per family member, joined to the member's
// vertices by half-length edges. Vertex ids 0..n-1 are the base vertices,
// n+i is the cone over member i.
class ElectrifiedGraph {
public:
    ElectrifiedGraph(Graph base, SubsetFamily family);

    const Graph& base() const { return base_; }
    const SubsetFamily& family() const { return family_; }

    std::size_t base_vertex_count() const { return base_.vertex_count(); }
    std::size_t total_vertex_count() const {
        return base_.vertex_count() + family_.size();
    }
    VertexId cone_vertex(std::size_t member_index) const {
        return static_cast<VertexId>(base_.vertex_count() + member_index);
    }
    bool is_cone(VertexId v) const { return v >= base_.vertex_count(); }

    // Half-unit weighted view over base + cone vertices.
    const WeightedAdjacency& weighted() const { return weighted_; }

private:
    Graph base_;
    SubsetFamily family_;
    WeightedAdjacency weighted_;
};

ElectrifiedGraph electrify(const Graph& g, const SubsetFamily& family);

// A (possibly partial) vertex bijection. Total maps that preserve edges are
// graph automorphisms; partial maps arise as windows onto automorphisms of an
// infinite model restricted to a generated ball. Entries are kNoVertex where
// the image falls outside the window.
class VertexMap {
public:
    VertexMap() = default;
    explicit VertexMap(std::vector<VertexId> forward, std::string label = "");

    static VertexMap identity(std::size_t n);

    const std::string& label() const { return label_; }
    std::size_t size() const { return forward_.size(); }

    bool defined(VertexId v) const { return forward_[v] != kNoVertex; }
    VertexId apply(VertexId v) const { return forward_[v]; }
    VertexId apply_inverse(VertexId v) const { return inverse_[v]; }
    bool total() const { return total_; }

    // Injectivity plus edge preservation wherever both endpoints are defined.
    // Throws NotAutomorphismError with the offending location otherwise.
    void validate(const Graph& g) const;

    // True when the map sends every fully-covered family member onto another
    // member, as a set.
    bool permutes_family(const SubsetFamily& family) const;

    VertexMap compose_after(const VertexMap& first) const;  // this∘first

private:
    std::vector<VertexId> forward_;
    std::vector<VertexId> inverse_;
    std::string label_;
    bool total_ = false;
};

}  // namespace cgx::graphcore
