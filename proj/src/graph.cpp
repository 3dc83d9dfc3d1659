#include "hoffman/graph.hpp"

#include <algorithm>
#include <map>
#include <nlohmann/json.hpp>

namespace hoffman {

namespace {

std::vector<VertexId> parse_vertex_list(const nlohmann::json& j, const std::string& key) {
    std::vector<VertexId> out;
    if (!j.contains(key)) return out;
    if (!j.at(key).is_array()) throw InputError("'" + key + "' must be an array");
    std::set<VertexId> seen;
    for (size_t i = 0; i < j.at(key).size(); ++i) {
        const auto& e = j.at(key)[i];
        if (!e.is_string())
            throw InputError("'" + key + "[" + std::to_string(i) + "]' must be a string");
        VertexId v = e.get<VertexId>();
        if (!seen.insert(v).second)
            throw InputError("duplicate vertex '" + v + "' in '" + key + "'");
        out.push_back(v);
    }
    return out;
}

EdgeSet parse_edge_list(const nlohmann::json& j, const std::string& key) {
    EdgeSet out;
    if (!j.contains(key)) return out;
    if (!j.at(key).is_array()) throw InputError("'" + key + "' must be an array");
    for (size_t i = 0; i < j.at(key).size(); ++i) {
        const auto& e = j.at(key)[i];
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            throw InputError("'" + key + "[" + std::to_string(i) +
                             "]' must be a pair of vertex ids");
        VertexId a = e[0].get<VertexId>(), b = e[1].get<VertexId>();
        if (a == b)
            throw InputError("self-loop at '" + a + "' in '" + key + "[" +
                             std::to_string(i) + "]'");
        out.insert(make_pair_sorted(a, b));
    }
    return out;
}

nlohmann::json edges_to_json(const EdgeSet& edges) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [a, b] : edges) arr.push_back({a, b});
    return arr;
}

void check_edge_endpoints(const EdgeSet& edges, const std::set<VertexId>& known,
                          const std::string& what) {
    for (const auto& [a, b] : edges) {
        if (a == b) throw InputError(what + ": self-loop at '" + a + "'");
        if (!known.count(a)) throw InputError(what + ": unknown vertex '" + a + "'");
        if (!known.count(b)) throw InputError(what + ": unknown vertex '" + b + "'");
    }
}

}  // namespace

// ---------------------------------------------------------------- PlainGraph

bool PlainGraph::has_vertex(const VertexId& v) const {
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

bool PlainGraph::adjacent(const VertexId& a, const VertexId& b) const {
    return edges.count(make_pair_sorted(a, b)) > 0;
}

std::vector<VertexId> PlainGraph::neighbors(const VertexId& v) const {
    std::vector<VertexId> out;
    for (const auto& [a, b] : edges) {
        if (a == v) out.push_back(b);
        else if (b == v) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

void PlainGraph::add_edge(const VertexId& a, const VertexId& b) {
    edges.insert(make_pair_sorted(a, b));
}

void PlainGraph::validate() const {
    std::set<VertexId> known(vertices.begin(), vertices.end());
    if (known.size() != vertices.size()) throw InputError("graph: duplicate vertex id");
    check_edge_endpoints(edges, known, "graph");
}

bool PlainGraph::connected() const {
    if (vertices.empty()) return true;
    std::set<VertexId> seen{vertices.front()};
    std::vector<VertexId> stack{vertices.front()};
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (const auto& w : neighbors(v))
            if (seen.insert(w).second) stack.push_back(w);
    }
    return seen.size() == vertices.size();
}

PlainGraph PlainGraph::from_json(const nlohmann::json& j) {
    PlainGraph g;
    g.vertices = parse_vertex_list(j, "vertices");
    g.edges = parse_edge_list(j, "edges");
    g.validate();
    return g;
}

nlohmann::json PlainGraph::to_json() const {
    return {{"vertices", vertices}, {"edges", edges_to_json(edges)}};
}

// -------------------------------------------------------------- HoffmanGraph

bool HoffmanGraph::is_slim_vertex(const VertexId& v) const {
    return std::find(slim_vertices.begin(), slim_vertices.end(), v) != slim_vertices.end();
}

bool HoffmanGraph::is_fat_vertex(const VertexId& v) const {
    return std::find(fat_vertices.begin(), fat_vertices.end(), v) != fat_vertices.end();
}

bool HoffmanGraph::has_vertex(const VertexId& v) const {
    return is_slim_vertex(v) || is_fat_vertex(v);
}

bool HoffmanGraph::adjacent(const VertexId& a, const VertexId& b) const {
    return edges.count(make_pair_sorted(a, b)) > 0;
}

void HoffmanGraph::add_edge(const VertexId& a, const VertexId& b) {
    edges.insert(make_pair_sorted(a, b));
}

std::vector<VertexId> HoffmanGraph::slim_neighbors(const VertexId& x) const {
    std::vector<VertexId> out;
    for (const auto& v : slim_vertices)
        if (v != x && adjacent(x, v)) out.push_back(v);
    return out;
}

std::vector<VertexId> HoffmanGraph::fat_neighbors(const VertexId& x) const {
    std::vector<VertexId> out;
    for (const auto& v : fat_vertices)
        if (v != x && adjacent(x, v)) out.push_back(v);
    return out;
}

std::vector<VertexId> HoffmanGraph::common_fat_neighbors(const VertexId& x,
                                                         const VertexId& y) const {
    std::vector<VertexId> out;
    for (const auto& f : fat_vertices)
        if (adjacent(x, f) && adjacent(y, f)) out.push_back(f);
    return out;
}

void HoffmanGraph::validate() const {
    std::set<VertexId> slims(slim_vertices.begin(), slim_vertices.end());
    std::set<VertexId> fats(fat_vertices.begin(), fat_vertices.end());
    if (slims.size() != slim_vertices.size())
        throw InputError("Hoffman graph: duplicate slim vertex id");
    if (fats.size() != fat_vertices.size())
        throw InputError("Hoffman graph: duplicate fat vertex id");
    for (const auto& v : slims)
        if (fats.count(v))
            throw InputError("Hoffman graph: vertex '" + v + "' is both slim and fat");
    std::set<VertexId> known = slims;
    known.insert(fats.begin(), fats.end());
    check_edge_endpoints(edges, known, "Hoffman graph");
    for (const auto& [a, b] : edges)
        if (fats.count(a) && fats.count(b))
            throw InputError("Hoffman graph: edge {" + a + "," + b +
                             "} joins two fat vertices (fat set must be a coclique)");
    for (const auto& f : fat_vertices) {
        bool isolated = true;
        for (const auto& [a, b] : edges)
            if (a == f || b == f) { isolated = false; break; }
        if (isolated)
            throw InputError("Hoffman graph: fat vertex '" + f + "' is isolated");
    }
}

HoffmanGraph HoffmanGraph::from_json(const nlohmann::json& j) {
    HoffmanGraph h;
    h.slim_vertices = parse_vertex_list(j, "slim");
    h.fat_vertices = parse_vertex_list(j, "fat");
    h.edges = parse_edge_list(j, "edges");
    h.validate();
    return h;
}

nlohmann::json HoffmanGraph::to_json() const {
    return {{"slim", slim_vertices},
            {"fat", fat_vertices},
            {"edges", edges_to_json(edges)}};
}

// ------------------------------------------------------------ EdgeSignedGraph

bool EdgeSignedGraph::has_vertex(const VertexId& v) const {
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

bool EdgeSignedGraph::is_plus(const VertexId& a, const VertexId& b) const {
    return plus_edges.count(make_pair_sorted(a, b)) > 0;
}

bool EdgeSignedGraph::is_minus(const VertexId& a, const VertexId& b) const {
    return minus_edges.count(make_pair_sorted(a, b)) > 0;
}

void EdgeSignedGraph::validate() const {
    std::set<VertexId> known(vertices.begin(), vertices.end());
    if (known.size() != vertices.size())
        throw InputError("signed graph: duplicate vertex id");
    check_edge_endpoints(plus_edges, known, "signed graph (+)-edges");
    check_edge_endpoints(minus_edges, known, "signed graph (-)-edges");
    for (const auto& e : plus_edges)
        if (minus_edges.count(e))
            throw InputError("signed graph: edge {" + e.first + "," + e.second +
                             "} is both a (+)-edge and a (-)-edge");
}

PlainGraph EdgeSignedGraph::underlying() const {
    PlainGraph g;
    g.vertices = vertices;
    g.edges = plus_edges;
    g.edges.insert(minus_edges.begin(), minus_edges.end());
    return g;
}

bool EdgeSignedGraph::operator==(const EdgeSignedGraph& o) const {
    std::set<VertexId> a(vertices.begin(), vertices.end());
    std::set<VertexId> b(o.vertices.begin(), o.vertices.end());
    return a == b && plus_edges == o.plus_edges && minus_edges == o.minus_edges;
}

EdgeSignedGraph EdgeSignedGraph::from_json(const nlohmann::json& j) {
    EdgeSignedGraph s;
    s.vertices = parse_vertex_list(j, "vertices");
    s.plus_edges = parse_edge_list(j, "plus");
    s.minus_edges = parse_edge_list(j, "minus");
    s.validate();
    return s;
}

nlohmann::json EdgeSignedGraph::to_json() const {
    return {{"vertices", vertices},
            {"plus", edges_to_json(plus_edges)},
            {"minus", edges_to_json(minus_edges)}};
}

// ---------------------------------------------------------------- operations

InducedSubgraphResult induced_hoffman_subgraph(const HoffmanGraph& h,
                                               const std::set<VertexId>& keep) {
    for (const auto& v : keep)
        if (!h.has_vertex(v))
            throw InputError("induced subgraph: unknown vertex '" + v + "'");
    InducedSubgraphResult res;
    HoffmanGraph& g = res.graph;
    for (const auto& v : h.slim_vertices)
        if (keep.count(v)) g.slim_vertices.push_back(v);
    std::vector<VertexId> fats;
    for (const auto& v : h.fat_vertices)
        if (keep.count(v)) fats.push_back(v);
    for (const auto& e : h.edges)
        if (keep.count(e.first) && keep.count(e.second)) g.edges.insert(e);
    // Fat vertices isolated by the restriction are dropped and reported.
    for (const auto& f : fats) {
        bool isolated = true;
        for (const auto& e : g.edges)
            if (e.first == f || e.second == f) { isolated = false; break; }
        if (isolated)
            res.dropped_fat_vertices.push_back(f);
        else
            g.fat_vertices.push_back(f);
    }
    g.validate();
    return res;
}

std::pair<std::vector<VertexId>, std::vector<VertexId>>
neighbors(const HoffmanGraph& h, const VertexId& x) {
    if (!h.has_vertex(x)) throw InputError("neighbors: unknown vertex '" + x + "'");
    return {h.slim_neighbors(x), h.fat_neighbors(x)};
}

bool is_fat(const HoffmanGraph& h) {
    for (const auto& v : h.slim_vertices)
        if (h.fat_neighbors(v).empty()) return false;
    return true;
}

long long fat_pair_count(const HoffmanGraph& h) {
    long long total = 0;
    for (const auto& v : h.slim_vertices) {
        long long k = static_cast<long long>(h.fat_neighbors(v).size());
        total += k * (k - 1) / 2;
    }
    return total;
}

}  // namespace hoffman
