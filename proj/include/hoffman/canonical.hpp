#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hoffman/graph.hpp"

namespace hoffman {

// Vertex-colored graph with small-integer edge labels (0 = non-edge).
// Small-scale canonical labeling by branch and bound: at each position only
// candidates with the lexicographically minimal (color, row-to-prefix) record
// are explored, with twin vertices collapsed.
struct ColoredGraph {
    int n = 0;
    std::vector<int> colors;             // size n
    std::vector<std::vector<int>> adj;   // n x n symmetric, 0 on diagonal
};

// Returns the canonical byte-string; equal strings iff color- and
// label-preserving isomorphic.
std::string canonical_string(const ColoredGraph& g);

inline constexpr int kDefaultCanonicalBound = 16;

// Role-preserving Hoffman-graph canonical form.
std::string canonical_form(const HoffmanGraph& h, int max_vertices = kDefaultCanonicalBound);

std::string canonical_form(const PlainGraph& g, int max_vertices = kDefaultCanonicalBound);

// marked, when nonempty, singles out one vertex (used for marked signed graphs).
std::string canonical_form(const EdgeSignedGraph& s, const VertexId& marked = {},
                           int max_vertices = kDefaultCanonicalBound);

}  // namespace hoffman
