#include "cgx/graph.hpp"

#include <algorithm>
#include <set>

namespace cgx::graphcore {

Graph::Graph(std::vector<std::string> names,
             const std::vector<std::pair<std::string, std::string>>& edges)
    : names_(std::move(names)) {
    index_.reserve(names_.size());
    for (VertexId v = 0; v < names_.size(); ++v) {
        auto [it, fresh] = index_.emplace(names_[v], v);
        if (!fresh) throw Error("duplicate vertex name: " + names_[v]);
    }
    adj_.resize(names_.size());
    std::set<std::pair<VertexId, VertexId>> seen;
    for (const auto& [a, b] : edges) {
        VertexId u = require(a);
        VertexId v = require(b);
        if (u == v) throw Error("self-loop at vertex: " + a);
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second) continue;  // ignore duplicate edge rows
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        edges_.push_back(key);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
    std::sort(edges_.begin(), edges_.end());
}

std::optional<VertexId> Graph::find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

VertexId Graph::require(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw UnknownVertexError(name);
    return it->second;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

WeightedAdjacency Graph::weighted() const {
    WeightedAdjacency w;
    w.adj.resize(vertex_count());
    for (VertexId v = 0; v < vertex_count(); ++v) {
        w.adj[v].reserve(adj_[v].size());
        for (VertexId u : adj_[v]) w.adj[v].push_back({u, 2});
    }
    return w;
}

SubsetFamily::SubsetFamily(
    const Graph& g,
    const std::vector<std::pair<std::string, std::vector<std::string>>>& members) {
    members_.reserve(members.size());
    for (const auto& [label, names] : members) {
        if (names.empty()) throw Error("empty family member: " + label);
        Member m;
        m.label = label;
        m.vertices.reserve(names.size());
        for (const auto& n : names) m.vertices.push_back(g.require(n));
        std::sort(m.vertices.begin(), m.vertices.end());
        m.vertices.erase(std::unique(m.vertices.begin(), m.vertices.end()),
                         m.vertices.end());
        members_.push_back(std::move(m));
    }
}

ElectrifiedGraph::ElectrifiedGraph(Graph base, SubsetFamily family)
    : base_(std::move(base)), family_(std::move(family)) {
    weighted_ = base_.weighted();
    weighted_.adj.resize(total_vertex_count());
    for (std::size_t i = 0; i < family_.size(); ++i) {
        VertexId cone = cone_vertex(i);
        for (VertexId v : family_.member(i).vertices) {
            weighted_.adj[v].push_back({cone, 1});
            weighted_.adj[cone].push_back({v, 1});
        }
    }
}

ElectrifiedGraph electrify(const Graph& g, const SubsetFamily& family) {
    for (const auto& m : family.members()) {
        for (VertexId v : m.vertices) {
            if (v >= g.vertex_count())
                throw UnknownVertexError("family member '" + m.label +
                                         "' references vertex id " + std::to_string(v));
        }
    }
    return ElectrifiedGraph(g, family);
}

VertexMap::VertexMap(std::vector<VertexId> forward, std::string label)
    : forward_(std::move(forward)), label_(std::move(label)) {
    inverse_.assign(forward_.size(), kNoVertex);
    total_ = true;
    for (VertexId v = 0; v < forward_.size(); ++v) {
        VertexId w = forward_[v];
        if (w == kNoVertex) {
            total_ = false;
            continue;
        }
        if (w >= forward_.size()) throw Error("vertex map image out of range");
        if (inverse_[w] != kNoVertex)
            throw NotAutomorphismError("vertex map not injective at image " +
                                       std::to_string(w));
        inverse_[w] = v;
    }
}

VertexMap VertexMap::identity(std::size_t n) {
    std::vector<VertexId> f(n);
    for (VertexId v = 0; v < n; ++v) f[v] = v;
    return VertexMap(std::move(f), "id");
}

void VertexMap::validate(const Graph& g) const {
    if (forward_.size() != g.vertex_count())
        throw NotAutomorphismError("vertex map size mismatch");
    for (const auto& [u, v] : g.edges()) {
        VertexId fu = forward_[u];
        VertexId fv = forward_[v];
        if (fu == kNoVertex || fv == kNoVertex) continue;
        if (!g.has_edge(fu, fv))
            throw NotAutomorphismError("map '" + label_ + "' breaks edge {" +
                                       g.name(u) + "," + g.name(v) + "}");
    }
    // A total injective edge-preserving self-map is an automorphism; partial
    // maps are accepted as automorphism windows.
}

bool VertexMap::permutes_family(const SubsetFamily& family) const {
    std::set<std::vector<VertexId>> sets;
    for (const auto& m : family.members()) sets.insert(m.vertices);
    for (const auto& m : family.members()) {
        std::vector<VertexId> image;
        image.reserve(m.vertices.size());
        bool covered = true;
        for (VertexId v : m.vertices) {
            if (forward_[v] == kNoVertex) {
                covered = false;
                break;
            }
            image.push_back(forward_[v]);
        }
        if (!covered) continue;
        std::sort(image.begin(), image.end());
        if (!sets.count(image)) return false;
    }
    return true;
}

VertexMap VertexMap::compose_after(const VertexMap& first) const {
    std::vector<VertexId> f(first.size(), kNoVertex);
    for (VertexId v = 0; v < first.size(); ++v) {
        VertexId mid = first.forward_[v];
        if (mid == kNoVertex || mid >= forward_.size()) continue;
        f[v] = forward_[mid];
    }
    return VertexMap(std::move(f), label_ + "*" + first.label_);
}

}  // namespace cgx::graphcore
