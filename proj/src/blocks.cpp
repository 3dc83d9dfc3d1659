#include "hoffman/blocks.hpp"

#include <algorithm>
#include <map>
#include <nlohmann/json.hpp>
#include <queue>

namespace hoffman {

namespace {

struct BlockDfs {
    const std::vector<VertexId>& verts;
    std::map<VertexId, std::vector<VertexId>> adj;
    std::map<VertexId, int> disc, low;
    std::map<VertexId, int> child_count;
    std::set<VertexId> cuts;
    std::vector<VertexPair> edge_stack;
    std::vector<std::set<VertexId>> blocks;
    int timer = 0;

    void pop_block(const VertexPair& until) {
        std::set<VertexId> block;
        while (!edge_stack.empty()) {
            VertexPair e = edge_stack.back();
            edge_stack.pop_back();
            block.insert(e.first);
            block.insert(e.second);
            if (e == until) break;
        }
        blocks.push_back(std::move(block));
    }

    void dfs(const VertexId& u, const VertexId* parent) {
        disc[u] = low[u] = ++timer;
        for (const auto& v : adj[u]) {
            if (parent && v == *parent) continue;
            if (!disc.count(v)) {
                child_count[u]++;
                VertexPair e = make_pair_sorted(u, v);
                edge_stack.push_back(e);
                dfs(v, &u);
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= disc[u]) {
                    if (parent) cuts.insert(u);
                    pop_block(e);
                }
            } else if (disc[v] < disc[u]) {
                edge_stack.push_back(make_pair_sorted(u, v));
                low[u] = std::min(low[u], disc[v]);
            }
        }
    }
};

std::map<VertexId, int> bfs_distances(const PlainGraph& g, const VertexId& src) {
    std::map<VertexId, int> dist{{src, 0}};
    std::queue<VertexId> q;
    q.push(src);
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        for (const auto& w : g.neighbors(v))
            if (!dist.count(w)) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    return dist;
}

}  // namespace

BlockStructure blocks_and_cut_vertices(const PlainGraph& g) {
    g.validate();
    BlockStructure bs;
    BlockDfs dfs{g.vertices};
    for (const auto& [a, b] : g.edges) {
        dfs.adj[a].push_back(b);
        dfs.adj[b].push_back(a);
    }
    for (const auto& v : g.vertices) {
        if (dfs.disc.count(v)) continue;
        dfs.dfs(v, nullptr);
        if (dfs.child_count[v] >= 2) dfs.cuts.insert(v);
        if (dfs.adj[v].empty()) {
            bs.isolated_blocks.push_back(dfs.blocks.size());
            dfs.blocks.push_back({v});
        }
    }
    bs.blocks = std::move(dfs.blocks);
    bs.cut_vertices = std::move(dfs.cuts);
    for (size_t i = 0; i < bs.blocks.size(); ++i)
        bs.block_graph.vertices.push_back(std::to_string(i));
    for (size_t i = 0; i < bs.blocks.size(); ++i)
        for (size_t j = i + 1; j < bs.blocks.size(); ++j) {
            std::vector<VertexId> shared;
            std::set_intersection(bs.blocks[i].begin(), bs.blocks[i].end(),
                                  bs.blocks[j].begin(), bs.blocks[j].end(),
                                  std::back_inserter(shared));
            if (!shared.empty())
                bs.block_graph.add_edge(std::to_string(i), std::to_string(j));
        }
    return bs;
}

nlohmann::json BlockStructure::to_json() const {
    nlohmann::json jb = nlohmann::json::array();
    for (const auto& b : blocks) jb.push_back(std::vector<VertexId>(b.begin(), b.end()));
    return {{"blocks", jb},
            {"cut_vertices", std::vector<VertexId>(cut_vertices.begin(), cut_vertices.end())},
            {"isolated_blocks", isolated_blocks},
            {"block_graph", block_graph.to_json()}};
}

namespace {

std::optional<ForbiddenWitness> find_claw(const PlainGraph& g) {
    for (const auto& c : g.vertices) {
        auto nb = g.neighbors(c);
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j)
                for (size_t k = j + 1; k < nb.size(); ++k)
                    if (!g.adjacent(nb[i], nb[j]) && !g.adjacent(nb[i], nb[k]) &&
                        !g.adjacent(nb[j], nb[k]))
                        return ForbiddenWitness{"K_{1,3}", {c, nb[i], nb[j], nb[k]}};
    }
    return std::nullopt;
}

std::optional<ForbiddenWitness> find_diamond(const PlainGraph& g) {
    for (const auto& [u, v] : g.edges) {
        std::vector<VertexId> common;
        for (const auto& w : g.neighbors(u))
            if (w != v && g.adjacent(w, v)) common.push_back(w);
        for (size_t i = 0; i < common.size(); ++i)
            for (size_t j = i + 1; j < common.size(); ++j)
                if (!g.adjacent(common[i], common[j]))
                    return ForbiddenWitness{"K_{1,1,2}", {u, v, common[i], common[j]}};
    }
    return std::nullopt;
}

std::optional<ForbiddenWitness> find_long_induced_cycle(const PlainGraph& g) {
    int n = static_cast<int>(g.vertices.size());
    if (n > 20) throw InputError("induced-cycle search: graph too large");
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) < 4) continue;
        std::vector<VertexId> sub;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) sub.push_back(g.vertices[i]);
        bool cycle = true;
        for (const auto& v : sub) {
            int deg = 0;
            for (const auto& w : sub)
                if (w != v && g.adjacent(v, w)) ++deg;
            if (deg != 2) { cycle = false; break; }
        }
        if (!cycle) continue;
        // 2-regular induced subgraph; connected means a single cycle.
        PlainGraph h;
        h.vertices = sub;
        for (const auto& v : sub)
            for (const auto& w : sub)
                if (v < w && g.adjacent(v, w)) h.add_edge(v, w);
        if (h.connected())
            return ForbiddenWitness{"C_" + std::to_string(sub.size()), sub};
    }
    return std::nullopt;
}

bool is_clique(const PlainGraph& g, const std::set<VertexId>& vs) {
    for (auto it = vs.begin(); it != vs.end(); ++it)
        for (auto jt = std::next(it); jt != vs.end(); ++jt)
            if (!g.adjacent(*it, *jt)) return false;
    return true;
}

}  // namespace

ClawFreeBlockGraphResult is_claw_free_block_graph(const PlainGraph& g) {
    auto claw = find_claw(g);
    if (claw) return {false, claw};
    auto bs = blocks_and_cut_vertices(g);
    bool all_cliques = true;
    for (const auto& b : bs.blocks)
        if (!is_clique(g, b)) { all_cliques = false; break; }
    if (all_cliques) return {true, std::nullopt};
    // A non-clique block forces an induced diamond or long cycle.
    if (auto d = find_diamond(g)) return {false, d};
    if (auto c = find_long_induced_cycle(g)) return {false, c};
    throw InternalError("non-clique block without diamond or induced long cycle");
}

LineTreeResult line_tree_reconstruct(const PlainGraph& g) {
    if (!g.connected()) throw InputError("line_tree_reconstruct: graph is disconnected");
    if (g.vertices.empty()) throw InputError("line_tree_reconstruct: empty graph");
    auto cf = is_claw_free_block_graph(g);
    if (!cf.ok)
        throw InputError("line_tree_reconstruct: not a claw-free block graph (witness " +
                         cf.witness->pattern + ")");

    LineTreeResult res;
    if (g.vertices.size() == 1) {
        res.tree.vertices = {"t0", "t1"};
        res.tree.add_edge("t0", "t1");
        res.edge_map[make_pair_sorted("t0", "t1")] = g.vertices.front();
        return res;
    }

    auto bs = blocks_and_cut_vertices(g);
    // Tree nodes: one per block, one leaf per non-cut vertex.
    for (size_t i = 0; i < bs.blocks.size(); ++i)
        res.tree.vertices.push_back("B" + std::to_string(i));
    for (size_t i = 0; i < bs.blocks.size(); ++i)
        for (const auto& v : bs.blocks[i])
            if (!bs.cut_vertices.count(v)) {
                VertexId leaf = "L_" + v;
                res.tree.vertices.push_back(leaf);
                res.tree.add_edge("B" + std::to_string(i), leaf);
                res.edge_map[make_pair_sorted("B" + std::to_string(i), leaf)] = v;
            }
    for (const auto& [bi, bj] : bs.block_graph.edges) {
        std::vector<VertexId> shared;
        const auto& a = bs.blocks[std::stoul(bi)];
        const auto& b = bs.blocks[std::stoul(bj)];
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                              std::back_inserter(shared));
        if (shared.size() != 1)
            throw InternalError("adjacent blocks sharing " + std::to_string(shared.size()) +
                                " vertices");
        res.tree.add_edge("B" + bi, "B" + bj);
        res.edge_map[make_pair_sorted("B" + bi, "B" + bj)] = shared.front();
    }

    // Verify: tree, and L(tree) = g through edge_map.
    if (res.tree.edges.size() + 1 != res.tree.vertices.size() || !res.tree.connected())
        throw InternalError("block graph did not produce a tree");
    if (res.edge_map.size() != g.vertices.size())
        throw InternalError("edge map is not a bijection");
    for (auto it = res.edge_map.begin(); it != res.edge_map.end(); ++it)
        for (auto jt = std::next(it); jt != res.edge_map.end(); ++jt) {
            const auto& [e1, v1] = *it;
            const auto& [e2, v2] = *jt;
            bool share = e1.first == e2.first || e1.first == e2.second ||
                         e1.second == e2.first || e1.second == e2.second;
            if (share != g.adjacent(v1, v2))
                throw InternalError("L(T) adjacency mismatch at '" + v1 + "','" + v2 + "'");
        }
    return res;
}

BlockDistanceResult block_distance_check(const PlainGraph& g, size_t b1, size_t b2,
                                         const VertexId& v1, const VertexId& v2) {
    auto cf = is_claw_free_block_graph(g);
    if (!cf.ok)
        throw InputError("block_distance_check: not a claw-free block graph");
    auto bs = blocks_and_cut_vertices(g);
    if (b1 >= bs.blocks.size() || b2 >= bs.blocks.size())
        throw InputError("block_distance_check: block index out of range");
    const auto& B1 = bs.blocks[b1];
    const auto& B2 = bs.blocks[b2];
    for (const auto& v : B1)
        if (B2.count(v))
            throw InputError("block_distance_check: blocks share vertex '" + v + "'");
    if (!B1.count(v1)) throw InputError("block_distance_check: '" + v1 + "' not in block b1");
    if (!B2.count(v2)) throw InputError("block_distance_check: '" + v2 + "' not in block b2");

    // Unique shortest path (block graphs have unique shortest paths).
    auto d_from = bfs_distances(g, v1);
    auto d_to = bfs_distances(g, v2);
    if (!d_from.count(v2)) throw InputError("block_distance_check: vertices not connected");
    int k = d_from.at(v2);
    std::vector<VertexId> path{v1};
    VertexId cur = v1;
    for (int step = 1; step <= k; ++step) {
        std::vector<VertexId> nexts;
        for (const auto& w : g.neighbors(cur))
            if (d_from.at(w) == step && d_to.at(w) == k - step) nexts.push_back(w);
        if (nexts.size() != 1)
            throw InternalError("shortest path is not unique at step " + std::to_string(step));
        cur = nexts.front();
        path.push_back(cur);
    }

    int s = 0;
    for (const auto& v : path)
        if (B1.count(v) || B2.count(v)) ++s;
    if (s < 2 || s > 4)
        throw InternalError("unexpected path/block intersection size " + std::to_string(s));

    auto bd = bfs_distances(bs.block_graph, std::to_string(b1));
    if (!bd.count(std::to_string(b2)))
        throw InternalError("blocks not connected in block graph");
    int dB = bd.at(std::to_string(b2));
    if (dB != k + (3 - s))
        throw InternalError("block distance relation failed: d_B=" + std::to_string(dB) +
                            ", d_G=" + std::to_string(k) + ", s=" + std::to_string(s));
    return {dB, k, s, path};
}

const char* block_kind_name(BlockKind::Kind k) {
    switch (k) {
        case BlockKind::Kind::PlusClique: return "PlusClique";
        case BlockKind::Kind::MinusEdge: return "MinusEdge";
        case BlockKind::Kind::TStar: return "TStar";
        case BlockKind::Kind::Other: return "Other";
    }
    return "?";
}

BlockKind classify_block(const EdgeSignedGraph& s, const std::set<VertexId>& block,
                         const std::optional<VertexId>& marked) {
    auto bs = blocks_and_cut_vertices(s.underlying());
    bool found = false;
    for (size_t i = 0; i < bs.blocks.size(); ++i)
        if (bs.blocks[i] == block) {
            if (std::find(bs.isolated_blocks.begin(), bs.isolated_blocks.end(), i) !=
                bs.isolated_blocks.end())
                throw InputError("classify_block: singleton blocks are not classified");
            found = true;
        }
    if (!found) throw InputError("classify_block: vertex set is not a block of U(S)");

    std::vector<VertexId> vs(block.begin(), block.end());
    bool all_plus = true;
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (!s.is_plus(vs[i], vs[j])) all_plus = false;
    if (all_plus && vs.size() >= 2)
        return {BlockKind::Kind::PlusClique, static_cast<int>(vs.size()), {}, {}};
    if (vs.size() == 2 && s.is_minus(vs[0], vs[1]))
        return {BlockKind::Kind::MinusEdge, 0, vs[0], vs[1]};  // vs sorted: sigma+ is smaller id
    if (vs.size() == 3 && marked && block.count(*marked)) {
        std::vector<VertexId> rest;
        for (const auto& v : vs)
            if (v != *marked) rest.push_back(v);
        if (s.is_plus(rest[0], rest[1]) && s.is_minus(*marked, rest[0]) &&
            s.is_minus(*marked, rest[1]))
            return {BlockKind::Kind::TStar, 0, {}, {}};
    }
    return {BlockKind::Kind::Other, 0, {}, {}};
}

}  // namespace hoffman
