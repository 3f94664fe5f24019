#include "cgx/graph_json.hpp"

#include <fstream>

namespace cgx::graphcore {

using nlohmann::json;

GraphBundle graph_from_json(const json& j) {
    if (!j.is_object()) throw SchemaError("graph file: top level must be an object");
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw SchemaError("graph file: missing 'vertices' array");
    if (!j.contains("edges") || !j["edges"].is_array())
        throw SchemaError("graph file: missing 'edges' array");

    std::vector<std::string> names;
    for (const auto& v : j["vertices"]) {
        if (!v.is_string()) throw SchemaError("graph file: vertices must be strings");
        names.push_back(v.get<std::string>());
    }
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            throw SchemaError("graph file: each edge must be a 2-element string list");
        edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    Graph graph(std::move(names), edges);

    std::vector<std::pair<std::string, std::vector<std::string>>> fam;
    if (j.contains("families")) {
        if (!j["families"].is_array())
            throw SchemaError("graph file: 'families' must be an array");
        for (const auto& f : j["families"]) {
            if (!f.is_object() || !f.contains("members") || !f["members"].is_array())
                throw SchemaError("graph file: family needs a 'members' array");
            std::string label =
                f.contains("label") ? f["label"].get<std::string>() : "";
            std::vector<std::string> members;
            for (const auto& m : f["members"]) {
                if (!m.is_string())
                    throw SchemaError("graph file: family members must be strings");
                members.push_back(m.get<std::string>());
            }
            fam.emplace_back(label, members);
        }
    }
    SubsetFamily family(graph, fam);
    return GraphBundle{std::move(graph), std::move(family)};
}

GraphBundle load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open graph file: " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        // parse_error.byte gives the offset; surface it for line-level triage.
        throw SchemaError("graph file " + path + ": " + e.what());
    }
    return graph_from_json(j);
}

json graph_to_json(const Graph& g, const SubsetFamily& family) {
    json j;
    j["vertices"] = json::array();
    for (const auto& n : g.names()) j["vertices"].push_back(n);
    j["edges"] = json::array();
    for (const auto& [u, v] : g.edges())
        j["edges"].push_back(json::array({g.name(u), g.name(v)}));
    j["families"] = json::array();
    for (const auto& m : family.members()) {
        json f;
        f["label"] = m.label;
        f["members"] = json::array();
        for (VertexId v : m.vertices) f["members"].push_back(g.name(v));
        j["families"].push_back(f);
    }
    return j;
}

}  // namespace cgx::graphcore
