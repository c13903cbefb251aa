#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "burge/crystal.hpp"
#include "burge/graph.hpp"
#include "burge/partition.hpp"
#include "burge/tableau.hpp"

namespace burge {

using Json = nlohmann::ordered_json;

inline Json partition_to_json(const Partition& p) { return Json(p.parts()); }

inline Partition partition_from_json(const Json& j) {
    if (!j.is_array())
        throw std::invalid_argument("partition JSON must be an array of integers");
    return Partition(j.get<std::vector<int>>());
}

inline Json tableau_to_json(const Tableau& t) { return Json(t.rows()); }

inline Tableau tableau_from_json(const Json& j) {
    if (!j.is_array())
        throw std::invalid_argument("tableau JSON must be an array of rows");
    return Tableau(j.get<std::vector<std::vector<int>>>());
}

inline Json word_to_json(const Word& w) { return Json(w); }

inline Word word_from_json(const Json& j) {
    if (!j.is_array())
        throw std::invalid_argument("word JSON must be an array of integers");
    return j.get<Word>();
}

inline Json graph_to_json(const SimpleGraph& g) {
    Json edges = Json::array();
    // Lexicographic edge listing, independent of the Burge column order.
    std::vector<std::pair<int, int>> pairs;
    for (const Edge& e : g.edges())
        pairs.emplace_back(e.hi, e.lo);
    std::sort(pairs.begin(), pairs.end());
    for (auto [hi, lo] : pairs)
        edges.push_back(Json::array({hi, lo}));
    return Json{{"n", g.vertex_count()}, {"edges", edges}};
}

inline SimpleGraph graph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("graph JSON must be an object with \"n\" and \"edges\"");
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("graph edges must be two-element arrays");
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
    return SimpleGraph(n, edges);
}

inline Json burge_array_to_json(const BurgeArray& a) {
    return Json{{"top", a.top()}, {"bottom", a.bottom()}};
}

inline BurgeArray burge_array_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("top") || !j.contains("bottom"))
        throw std::invalid_argument("Burge array JSON must be an object with \"top\" and \"bottom\"");
    return BurgeArray::from_rows(j.at("top").get<std::vector<int>>(),
                                 j.at("bottom").get<std::vector<int>>());
}

template <typename Obj, typename VertexWriter>
Json crystal_to_json(const CrystalGraph<Obj>& c, VertexWriter&& write_vertex) {
    Json vertices = Json::array();
    for (const auto& v : c.vertices)
        vertices.push_back(write_vertex(v));
    Json edges = Json::array();
    for (const auto& e : c.edges)
        edges.push_back(Json::array({e.src, e.dst, e.label}));
    Json weights = Json::array();
    for (const auto& w : c.weights)
        weights.push_back(Json(w));
    return Json{{"vertices", vertices}, {"edges", edges}, {"weights", weights}};
}

// DOT rendering with one node per object and edges labelled and coloured by i.
template <typename Obj, typename KeyFn>
std::string crystal_to_dot(const CrystalGraph<Obj>& c, KeyFn&& key) {
    static const char* palette[] = {"blue", "red", "green", "orange",
                                    "purple", "brown", "cyan", "magenta"};
    std::string out = "digraph crystal {\n  rankdir=TB;\n  node [shape=box];\n";
    for (std::size_t v = 0; v < c.vertices.size(); ++v)
        out += "  n" + std::to_string(v) + " [label=\"" + key(c.vertices[v]) + "\"];\n";
    for (const auto& e : c.edges)
        out += "  n" + std::to_string(e.src) + " -> n" + std::to_string(e.dst) + " [label=\"" +
               std::to_string(e.label) + "\", color=\"" +
               palette[(e.label - 1) % 8] + "\"];\n";
    out += "}\n";
    return out;
}

} // namespace burge
