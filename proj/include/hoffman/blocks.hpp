#pragma once

#include <map>
#include <optional>
#include <string>

#include "hoffman/graph.hpp"

namespace hoffman {

struct BlockStructure {
    std::vector<std::set<VertexId>> blocks;      // maximal 2-connected subgraphs
    std::set<VertexId> cut_vertices;
    std::vector<size_t> isolated_blocks;         // indices of singleton blocks
    PlainGraph block_graph;                      // vertices "0","1",... by block index

    nlohmann::json to_json() const;
};

BlockStructure blocks_and_cut_vertices(const PlainGraph& g);

struct ForbiddenWitness {
    std::string pattern;              // "K_{1,3}", "K_{1,1,2}", or "C_n"
    std::vector<VertexId> vertices;
};

struct ClawFreeBlockGraphResult {
    bool ok;
    std::optional<ForbiddenWitness> witness;
};

// True iff every block is a clique and there is no induced K_{1,3}.
ClawFreeBlockGraphResult is_claw_free_block_graph(const PlainGraph& g);

struct LineTreeResult {
    PlainGraph tree;
    // edge of tree -> vertex of g; L(tree) is isomorphic to g via this map.
    std::map<VertexPair, VertexId> edge_map;
};

// Pre: g connected claw-free block graph; throws InputError carrying the witness
// pattern otherwise.
LineTreeResult line_tree_reconstruct(const PlainGraph& g);

struct BlockDistanceResult {
    int block_graph_distance;
    int graph_distance;
    int intersection_size;            // |V(P) cap (V(B) cup V(B'))|, in {2,3,4}
    std::vector<VertexId> shortest_path;
};

// Verifies d_B(b1,b2) = d_g(v1,v2) + (3 - s); throws InternalError on mismatch.
BlockDistanceResult block_distance_check(const PlainGraph& g, size_t b1, size_t b2,
                                         const VertexId& v1, const VertexId& v2);

struct BlockKind {
    enum class Kind { PlusClique, MinusEdge, TStar, Other } kind;
    int clique_size = 0;                   // PlusClique only
    VertexId sigma_plus, sigma_minus;      // MinusEdge only
};

// marked is required for recognizing the T_1^* pattern.
BlockKind classify_block(const EdgeSignedGraph& s, const std::set<VertexId>& block,
                         const std::optional<VertexId>& marked);

const char* block_kind_name(BlockKind::Kind k);

}  // namespace hoffman
