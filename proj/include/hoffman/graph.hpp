#pragma once

#include <nlohmann/json_fwd.hpp>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hoffman/rational.hpp"

namespace hoffman {

using VertexId = std::string;
using VertexPair = std::pair<VertexId, VertexId>;
using EdgeSet = std::set<VertexPair>;

inline VertexPair make_pair_sorted(const VertexId& a, const VertexId& b) {
    return a < b ? VertexPair{a, b} : VertexPair{b, a};
}

// Unsigned simple graph; houses U(S), block graphs and trees.
struct PlainGraph {
    std::vector<VertexId> vertices;
    EdgeSet edges;

    bool has_vertex(const VertexId& v) const;
    bool adjacent(const VertexId& a, const VertexId& b) const;
    std::vector<VertexId> neighbors(const VertexId& v) const;
    void add_edge(const VertexId& a, const VertexId& b);
    void validate() const;  // throws InputError on self-loop / unknown endpoint
    bool connected() const;

    static PlainGraph from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

// Graph with a distinguished coclique of fat vertices.
struct HoffmanGraph {
    std::vector<VertexId> slim_vertices;
    std::vector<VertexId> fat_vertices;
    EdgeSet edges;

    bool is_slim_vertex(const VertexId& v) const;
    bool is_fat_vertex(const VertexId& v) const;
    bool has_vertex(const VertexId& v) const;
    bool adjacent(const VertexId& a, const VertexId& b) const;
    void add_edge(const VertexId& a, const VertexId& b);

    std::vector<VertexId> slim_neighbors(const VertexId& x) const;
    std::vector<VertexId> fat_neighbors(const VertexId& x) const;
    std::vector<VertexId> common_fat_neighbors(const VertexId& x, const VertexId& y) const;

    // Invariants: disjoint roles, no self-loops, fat coclique, no isolated fat vertex.
    void validate() const;

    static HoffmanGraph from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

struct EdgeSignedGraph {
    std::vector<VertexId> vertices;
    EdgeSet plus_edges;
    EdgeSet minus_edges;

    bool has_vertex(const VertexId& v) const;
    bool is_plus(const VertexId& a, const VertexId& b) const;
    bool is_minus(const VertexId& a, const VertexId& b) const;
    void validate() const;

    PlainGraph underlying() const;  // U(S)

    bool operator==(const EdgeSignedGraph& o) const;

    static EdgeSignedGraph from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

struct InducedSubgraphResult {
    HoffmanGraph graph;
    std::vector<VertexId> dropped_fat_vertices;  // fats isolated by the restriction
};

InducedSubgraphResult induced_hoffman_subgraph(const HoffmanGraph& h,
                                               const std::set<VertexId>& keep);

// (slim neighbors, fat neighbors) of x.
std::pair<std::vector<VertexId>, std::vector<VertexId>>
neighbors(const HoffmanGraph& h, const VertexId& x);

// Every slim vertex has a fat neighbor.
bool is_fat(const HoffmanGraph& h);

// Number of induced Hoffman subgraphs isomorphic to K_{1,2}:
// sum over slim v of C(|fat_neighbors(v)|, 2).
long long fat_pair_count(const HoffmanGraph& h);

}  // namespace hoffman
