#pragma once

#include <string>
#include <vector>

#include "hoffman/graph.hpp"

namespace hoffman::testing {

// K_{1,t}: one slim vertex "v" with t fat neighbors "f1".."ft".
inline HoffmanGraph k1t(int t) {
    HoffmanGraph h;
    h.slim_vertices = {"v"};
    for (int i = 1; i <= t; ++i) {
        VertexId f = "f" + std::to_string(i);
        h.fat_vertices.push_back(f);
        h.add_edge("v", f);
    }
    return h;
}

// Slim path v* - v1 - v2, fats f+,f- at v*, f1 at v1, f2 at v2.
// B = [[-2,1,0],[1,-1,1],[0,1,-1]] in sorted order (v*, v1, v2).
inline HoffmanGraph h_one() {
    HoffmanGraph h;
    h.slim_vertices = {"v*", "v1", "v2"};
    h.fat_vertices = {"f+", "f-", "f1", "f2"};
    h.add_edge("v*", "v1");
    h.add_edge("v1", "v2");
    h.add_edge("v*", "f+");
    h.add_edge("v*", "f-");
    h.add_edge("v1", "f1");
    h.add_edge("v2", "f2");
    return h;
}

// Slim triangle with fats chosen so the special graph is the same
// (+)(+)-path as h_one(): edge {v*,v2} is cancelled by the common fat f2.
inline HoffmanGraph h_two() {
    HoffmanGraph h;
    h.slim_vertices = {"v*", "v1", "v2"};
    h.fat_vertices = {"f0", "f1", "f2"};
    h.add_edge("v*", "v1");
    h.add_edge("v*", "v2");
    h.add_edge("v1", "v2");
    h.add_edge("v*", "f0");
    h.add_edge("v*", "f2");
    h.add_edge("v1", "f1");
    h.add_edge("v2", "f2");
    return h;
}

inline PlainGraph plain_path(const std::vector<VertexId>& vs) {
    PlainGraph g;
    g.vertices = vs;
    for (size_t i = 0; i + 1 < vs.size(); ++i) g.add_edge(vs[i], vs[i + 1]);
    return g;
}

inline PlainGraph plain_cycle(const std::vector<VertexId>& vs) {
    PlainGraph g = plain_path(vs);
    g.add_edge(vs.back(), vs.front());
    return g;
}

inline PlainGraph plain_complete(const std::vector<VertexId>& vs) {
    PlainGraph g;
    g.vertices = vs;
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j) g.add_edge(vs[i], vs[j]);
    return g;
}

}  // namespace hoffman::testing
